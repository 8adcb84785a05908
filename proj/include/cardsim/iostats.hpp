#pragma once

#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "cardsim/cards.hpp"
#include "cardsim/events.hpp"
#include "cardsim/population.hpp"
#include "cardsim/world.hpp"

namespace cardsim::iostats {

class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Month-bucketed spill of raw events. Workers append concurrently through
// their own Writer; afterwards for_each_sorted replays every event in global
// (timestamp, consumer, seq) order with memory bounded by the largest month.
class SpillStore {
  public:
    SpillStore(std::string dir, Date start, Date end);
    ~SpillStore();
    SpillStore(const SpillStore&) = delete;

    class Writer {
      public:
        explicit Writer(SpillStore& store);
        ~Writer();
        void add(const TransactionEvent& e);
        void flush();

      private:
        SpillStore& store_;
        std::vector<std::vector<TransactionEvent>> pending_;
    };

    void for_each_sorted(const std::function<void(const TransactionEvent&)>& fn);
    uint64_t total_records() const { return total_; }

  private:
    friend class Writer;
    int bucket_of(Date d) const;
    void append(int bucket, const std::vector<TransactionEvent>& events);
    std::string bucket_path(int bucket) const;

    std::string dir_;
    Date start_;
    int bucket_count_;
    std::vector<std::unique_ptr<std::mutex>> locks_;
    std::vector<FILE*> files_;
    uint64_t total_ = 0;
};

// Streaming CSV sink for the transaction schema; assigns sequential
// transaction ids in write order. Optional gzip.
class TransactionCsvWriter {
  public:
    TransactionCsvWriter(const std::string& path, const world::MerchantWorld& w, bool gzip);
    ~TransactionCsvWriter();
    uint64_t write(const TransactionEvent& e);  // returns the assigned id
    uint64_t rows() const { return rows_; }
    void close();

  private:
    void sink(const char* data, size_t len);
    const world::MerchantWorld& world_;
    FILE* plain_ = nullptr;
    void* gz_ = nullptr;
    uint64_t rows_ = 0;
    std::string buf_;
};

class LabelsCsvWriter {
  public:
    explicit LabelsCsvWriter(const std::string& path);
    ~LabelsCsvWriter();
    void write(uint64_t transaction_id, uint32_t fraudster_id);
    uint64_t rows() const { return rows_; }
    void close();

  private:
    FILE* f_ = nullptr;
    uint64_t rows_ = 0;
};

uint64_t write_bios_csv(const std::string& path,
                        const std::vector<population::ConsumerProfile>& profiles,
                        const std::vector<int>& card_slot_counts);
uint64_t write_cards_csv(const std::string& path,
                         const std::vector<std::vector<cards::CardAccount>>& cards_by_consumer);

// RFC-4180 reader; handles plain and gzip files, quoted fields, LF endings.
class CsvReader {
  public:
    explicit CsvReader(const std::string& path);
    ~CsvReader();
    // False at EOF. Throws ParseError (with the row number) on malformed rows.
    bool next_row(std::vector<std::string>& fields);
    uint64_t row_number() const { return row_; }

  private:
    int next_char();
    FILE* plain_ = nullptr;
    void* gz_ = nullptr;
    uint64_t row_ = 0;
    bool eof_ = false;
};

std::string csv_quote(const std::string& field);

struct Moments {
    uint64_t count = 0;
    double mean = 0;
    double m2 = 0;
    void add(double x) {
        ++count;
        double d = x - mean;
        mean += d / static_cast<double>(count);
        m2 += d * (x - mean);
    }
    double std_dev() const { return count > 1 ? std::sqrt(m2 / (count - 1)) : 0.0; }
};

struct SummaryReport {
    // Biographical block.
    std::map<std::string, Moments> bio;
    double male_share = 0;
    uint64_t consumers = 0;

    // Card block.
    struct KindStats {
        uint64_t card_rows = 0;   // instances including reissues
        uint64_t slots = 0;       // distinct (consumer, slot)
        double mean_limit = 0;
        double chip_share = 0;
    };
    std::map<std::string, KindStats> cards;
    double cards_per_consumer = 0;

    // Transaction blocks.
    uint64_t total_rows = 0;
    std::map<std::string, uint64_t> count_by_channel;
    std::map<std::string, int64_t> cents_by_channel;
    std::map<std::string, uint64_t> count_by_instrument;  // credit/debit/prepaid/cash
    std::map<std::string, int64_t> cents_by_instrument;
    Moments per_tx_amount, per_tx_fraud, per_tx_genuine;
    std::map<std::string, Moments> per_tx_by_channel;
    Moments annual_count, annual_spend;  // per consumer-year
    std::map<std::string, uint64_t> count_by_state;
    std::map<std::string, int64_t> cents_by_state;
    std::map<std::string, uint64_t> count_by_country;
    std::map<std::string, int64_t> cents_by_country;
    std::map<int, uint64_t> count_by_mcc;
    std::map<int, int64_t> cents_by_mcc;
    uint64_t fraud_rows = 0;
    uint64_t fraud_rows_recent = 0;         // simulated year >= 2016
    uint64_t fraud_online_rows_recent = 0;
    int64_t total_cents = 0;

    double metric(const std::string& name) const;  // throws ConfigError when unknown
    std::vector<std::pair<std::string, double>> metrics() const;
    std::string to_json() const;
    std::string to_text() const;
};

// Single streaming pass over a run directory (bios.csv, cards.csv,
// transactions.csv[.gz]).
SummaryReport summarize(const std::string& run_dir);

struct CalibrationTarget {
    std::string metric;
    double target = 0;
    double tolerance = 0;  // absolute
};

struct CalibrationResult {
    std::string metric;
    double target = 0;
    double achieved = 0;
    double deviation = 0;
    double tolerance = 0;
    bool pass = false;
};

struct CalibrationReport {
    std::vector<CalibrationResult> results;
    bool all_pass = true;
    std::string to_json() const;
    std::string to_text() const;
};

CalibrationReport calibrate(const SummaryReport& report,
                            const std::vector<CalibrationTarget>& targets);

uint64_t fnv1a_file(const std::string& path);  // content hash for manifests

}  // namespace cardsim::iostats
