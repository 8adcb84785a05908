#include "cardsim/iostats.hpp"

#include <zlib.h>

#include <algorithm>
#include <charconv>
#include <cstring>
#include <filesystem>

#include "json.hpp"

namespace cardsim::iostats {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr size_t kWriterBatch = 4096;

static_assert(std::is_trivially_copyable_v<TransactionEvent>);

void append_u64(std::string& out, uint64_t v) {
    char tmp[24];
    auto r = std::to_chars(tmp, tmp + sizeof tmp, v);
    out.append(tmp, r.ptr);
}

void append_cents(std::string& out, int64_t cents) {
    append_u64(out, static_cast<uint64_t>(cents / 100));
    out.push_back('.');
    int rem = static_cast<int>(cents % 100);
    out.push_back(static_cast<char>('0' + rem / 10));
    out.push_back(static_cast<char>('0' + rem % 10));
}

bool needs_quoting(const std::string& s) {
    return s.find_first_of(",\"\n\r") != std::string::npos;
}

int64_t parse_cents(const std::string& s, uint64_t row) {
    size_t dot = s.find('.');
    if (dot == std::string::npos || s.size() - dot != 3)
        throw ParseError("row " + std::to_string(row) + ": bad amount '" + s + "'");
    int64_t dollars = 0, frac = 0;
    auto r1 = std::from_chars(s.data(), s.data() + dot, dollars);
    auto r2 = std::from_chars(s.data() + dot + 1, s.data() + s.size(), frac);
    if (r1.ec != std::errc() || r2.ec != std::errc())
        throw ParseError("row " + std::to_string(row) + ": bad amount '" + s + "'");
    return dollars * 100 + frac;
}

double to_double(const std::string& s, uint64_t row, const char* what) {
    try {
        size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError("row " + std::to_string(row) + ": bad " + what + " '" + s + "'");
    }
}

}  // namespace

std::string csv_quote(const std::string& field) {
    if (!needs_quoting(field)) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out.push_back('"');
    return out;
}

// ---------------------------------------------------------------- SpillStore

SpillStore::SpillStore(std::string dir, Date start, Date end) : dir_(std::move(dir)) {
    CivilDate a = to_civil(start), b = to_civil(end);
    start_ = make_date(a.year, a.month, 1);
    bucket_count_ = (b.year - a.year) * 12 + (b.month - a.month) + 1;
    if (bucket_count_ < 1) throw IoError("spill store: empty horizon");
    fs::create_directories(dir_);
    locks_.resize(static_cast<size_t>(bucket_count_));
    for (auto& l : locks_) l = std::make_unique<std::mutex>();
    files_.assign(static_cast<size_t>(bucket_count_), nullptr);
}

SpillStore::~SpillStore() {
    for (int b = 0; b < bucket_count_; ++b) {
        if (files_[static_cast<size_t>(b)]) std::fclose(files_[static_cast<size_t>(b)]);
        std::error_code ec;
        fs::remove(bucket_path(b), ec);
    }
}

int SpillStore::bucket_of(Date d) const {
    CivilDate c = to_civil(d);
    CivilDate s = to_civil(start_);
    int b = (c.year - s.year) * 12 + (c.month - s.month);
    return std::clamp(b, 0, bucket_count_ - 1);
}

std::string SpillStore::bucket_path(int bucket) const {
    return dir_ + "/spill_" + std::to_string(bucket) + ".bin";
}

void SpillStore::append(int bucket, const std::vector<TransactionEvent>& events) {
    if (events.empty()) return;
    std::lock_guard lock(*locks_[static_cast<size_t>(bucket)]);
    FILE*& f = files_[static_cast<size_t>(bucket)];
    if (!f) {
        f = std::fopen(bucket_path(bucket).c_str(), "wb");
        if (!f) throw IoError("cannot open spill file " + bucket_path(bucket));
    }
    if (std::fwrite(events.data(), sizeof(TransactionEvent), events.size(), f) != events.size())
        throw IoError("short write to spill file");
}

SpillStore::Writer::Writer(SpillStore& store) : store_(store) {
    pending_.resize(static_cast<size_t>(store.bucket_count_));
}

SpillStore::Writer::~Writer() { flush(); }

void SpillStore::Writer::add(const TransactionEvent& e) {
    int b = store_.bucket_of(e.timestamp.date());
    auto& v = pending_[static_cast<size_t>(b)];
    v.push_back(e);
    if (v.size() >= kWriterBatch) {
        store_.append(b, v);
        v.clear();
    }
}

void SpillStore::Writer::flush() {
    for (int b = 0; b < store_.bucket_count_; ++b) {
        auto& v = pending_[static_cast<size_t>(b)];
        if (!v.empty()) {
            store_.append(b, v);
            v.clear();
        }
    }
}

void SpillStore::for_each_sorted(const std::function<void(const TransactionEvent&)>& fn) {
    total_ = 0;
    std::vector<TransactionEvent> bucket;
    for (int b = 0; b < bucket_count_; ++b) {
        FILE*& open_f = files_[static_cast<size_t>(b)];
        if (open_f) {
            std::fclose(open_f);
            open_f = nullptr;
        }
        std::error_code ec;
        auto size = fs::file_size(bucket_path(b), ec);
        if (ec || size == 0) continue;
        if (size % sizeof(TransactionEvent) != 0)
            throw IoError("corrupt spill file " + bucket_path(b));
        bucket.resize(size / sizeof(TransactionEvent));
        FILE* f = std::fopen(bucket_path(b).c_str(), "rb");
        if (!f) throw IoError("cannot reopen spill file " + bucket_path(b));
        size_t got = std::fread(bucket.data(), sizeof(TransactionEvent), bucket.size(), f);
        std::fclose(f);
        if (got != bucket.size()) throw IoError("short read from spill file");
        std::sort(bucket.begin(), bucket.end(), event_order);
        for (const auto& e : bucket) fn(e);
        total_ += bucket.size();
    }
}

// ------------------------------------------------------ TransactionCsvWriter

const char* kTransactionHeader =
    "transaction_id,consumer_id,card_id,timestamp,amount,gs_name,merchant_id,merchant_name,"
    "merchant_city,merchant_state,merchant_country,mcc,channel,is_fraud\n";

TransactionCsvWriter::TransactionCsvWriter(const std::string& path,
                                           const world::MerchantWorld& w, bool gzip)
    : world_(w) {
    if (gzip) {
        gz_ = gzopen(path.c_str(), "wb6");
        if (!gz_) throw IoError("cannot open " + path);
    } else {
        plain_ = std::fopen(path.c_str(), "wb");
        if (!plain_) throw IoError("cannot open " + path);
    }
    buf_.reserve(1 << 16);
    sink(kTransactionHeader, std::strlen(kTransactionHeader));
}

TransactionCsvWriter::~TransactionCsvWriter() { close(); }

void TransactionCsvWriter::sink(const char* data, size_t len) {
    if (gz_) {
        if (gzwrite(static_cast<gzFile>(gz_), data, static_cast<unsigned>(len)) !=
            static_cast<int>(len))
            throw IoError("gzip write failed");
    } else if (plain_) {
        if (std::fwrite(data, 1, len, plain_) != len) throw IoError("write failed");
    }
}

uint64_t TransactionCsvWriter::write(const TransactionEvent& e) {
    uint64_t id = ++rows_;
    buf_.clear();
    append_u64(buf_, id);
    buf_.push_back(',');
    append_u64(buf_, e.consumer_id);
    buf_.push_back(',');
    if (e.card_id != kCashInstrument) append_u64(buf_, e.card_id);
    buf_.push_back(',');
    char ts[17];
    format_iso_minute(e.timestamp, ts);
    buf_.append(ts, 16);
    buf_.push_back(',');
    append_cents(buf_, e.amount_cents);
    buf_.push_back(',');
    buf_ += csv_quote(world_.catalog().item(e.gs_id).name);
    buf_.push_back(',');
    append_u64(buf_, e.merchant_id);
    buf_.push_back(',');
    const auto& merchant = world_.merchants()[e.merchant_id];
    buf_ += csv_quote(merchant.name);
    buf_.push_back(',');
    if (e.location_id != kOnlineLocation) {
        const auto& city = world_.cities()[world_.locations()[e.location_id].city_index];
        buf_ += csv_quote(city.city);
        buf_.push_back(',');
        buf_ += csv_quote(city.state);
        buf_.push_back(',');
        buf_ += csv_quote(city.country);
    } else {
        // Online purchase: no physical location.
        buf_.push_back(',');
        buf_.push_back(',');
        buf_ += "ONLINE";
    }
    buf_.push_back(',');
    char mcc[8];
    std::snprintf(mcc, sizeof mcc, "%04d", merchant.mcc);
    buf_ += mcc;
    buf_.push_back(',');
    buf_ += channel_name(e.channel);
    buf_.push_back(',');
    buf_.push_back(e.is_fraud ? '1' : '0');
    buf_.push_back('\n');
    sink(buf_.data(), buf_.size());
    return id;
}

void TransactionCsvWriter::close() {
    if (gz_) {
        gzclose(static_cast<gzFile>(gz_));
        gz_ = nullptr;
    }
    if (plain_) {
        std::fclose(plain_);
        plain_ = nullptr;
    }
}

// ----------------------------------------------------------- LabelsCsvWriter

LabelsCsvWriter::LabelsCsvWriter(const std::string& path) {
    f_ = std::fopen(path.c_str(), "wb");
    if (!f_) throw IoError("cannot open " + path);
    std::fputs("transaction_id,fraudster_id\n", f_);
}

LabelsCsvWriter::~LabelsCsvWriter() { close(); }

void LabelsCsvWriter::write(uint64_t transaction_id, uint32_t fraudster_id) {
    std::string line;
    append_u64(line, transaction_id);
    line.push_back(',');
    append_u64(line, fraudster_id);
    line.push_back('\n');
    if (std::fwrite(line.data(), 1, line.size(), f_) != line.size())
        throw IoError("labels write failed");
    ++rows_;
}

void LabelsCsvWriter::close() {
    if (f_) {
        std::fclose(f_);
        f_ = nullptr;
    }
}

// ------------------------------------------------------------------ bios CSV

uint64_t write_bios_csv(const std::string& path,
                        const std::vector<population::ConsumerProfile>& profiles,
                        const std::vector<int>& card_slot_counts) {
    FILE* f = std::fopen(path.c_str(), "wb");
    if (!f) throw IoError("cannot open " + path);
    std::fputs(
        "consumer_id,name,gender,birth_date,city,state,zipcode,latitude,longitude,occupation,"
        "retirement_age,annual_income,fico_score,debt_fraction_of_income,"
        "transactions_per_year_mean,mean_annual_weekend_getaways,mean_annual_vacations,"
        "mean_vacation_duration,mean_annual_business_trips,mean_business_trip_duration,"
        "p_foreign_weekend_getaway,p_foreign_vacation,p_foreign_business_trip,entry_date,cards\n",
        f);
    std::string line;
    char tmp[80];
    for (size_t i = 0; i < profiles.size(); ++i) {
        const auto& p = profiles[i];
        line.clear();
        append_u64(line, p.consumer_id);
        line += "," + csv_quote(p.display_name) + ",";
        line.push_back(p.gender);
        line += "," + format_date(p.birth_date) + "," + csv_quote(p.home.city) + "," +
                p.home.state + "," + p.home.zipcode + ",";
        std::snprintf(tmp, sizeof tmp, "%.5f,%.5f", p.home.latitude, p.home.longitude);
        line += tmp;
        line += "," + csv_quote(p.occupation) + ",";
        append_u64(line, static_cast<uint64_t>(p.retirement_age));
        std::snprintf(tmp, sizeof tmp, ",%.2f,%.1f,%.4f,%.2f", p.annual_income, p.fico_score,
                      p.debt_fraction_of_income, p.transactions_per_year.indiv_mean);
        line += tmp;
        const auto& t = p.travel;
        std::snprintf(tmp, sizeof tmp, ",%.3f,%.3f,%.2f,%.3f,%.2f",
                      t.annual_weekend_getaways, t.annual_vacations, t.vacation_duration_days,
                      t.annual_business_trips, t.business_trip_duration_days);
        line += tmp;
        std::snprintf(tmp, sizeof tmp, ",%.4f,%.4f,%.4f", t.p_foreign_weekend_getaway,
                      t.p_foreign_vacation, t.p_foreign_business_trip);
        line += tmp;
        line += "," + format_date(p.entry_date) + ",";
        append_u64(line,
                   static_cast<uint64_t>(i < card_slot_counts.size() ? card_slot_counts[i] : 0));
        line.push_back('\n');
        std::fwrite(line.data(), 1, line.size(), f);
    }
    std::fclose(f);
    return profiles.size();
}

uint64_t write_cards_csv(const std::string& path,
                         const std::vector<std::vector<cards::CardAccount>>& cards_by_consumer) {
    FILE* f = std::fopen(path.c_str(), "wb");
    if (!f) throw IoError("cannot open " + path);
    std::fputs(
        "card_id,consumer_id,account_id,slot,kind,brand,pan,expiry,cvv,has_chip,acquired_date,"
        "valid_until,credit_limit,balance_fraction,years_since_pin_change\n",
        f);
    uint64_t rows = 0;
    std::string line;
    char tmp[64];
    for (const auto& consumer_cards : cards_by_consumer) {
        for (const auto& c : consumer_cards) {
            line.clear();
            append_u64(line, c.card_id);
            line.push_back(',');
            append_u64(line, c.consumer_id);
            line.push_back(',');
            append_u64(line, c.account_id);
            line.push_back(',');
            append_u64(line, c.slot_index);
            line += std::string(",") + cards::kind_name(c.kind) + "," + c.brand + "," + c.pan;
            std::snprintf(tmp, sizeof tmp, ",%02d/%04d,", c.expiry_month, c.expiry_year);
            line += tmp;
            line += c.cvv;
            line += c.has_chip ? ",1," : ",0,";
            line += format_date(c.acquired_date) + "," + format_date(c.valid_until);
            std::snprintf(tmp, sizeof tmp, ",%.2f,%.4f,%.2f\n", c.credit_limit,
                          c.balance_fraction, c.years_since_pin_change);
            line += tmp;
            std::fwrite(line.data(), 1, line.size(), f);
            ++rows;
        }
    }
    std::fclose(f);
    return rows;
}

// ------------------------------------------------------------------ CsvReader

CsvReader::CsvReader(const std::string& path) {
    if (path.size() > 3 && path.compare(path.size() - 3, 3, ".gz") == 0) {
        gz_ = gzopen(path.c_str(), "rb");
        if (!gz_) throw IoError("cannot open " + path);
    } else {
        plain_ = std::fopen(path.c_str(), "rb");
        if (!plain_) throw IoError("cannot open " + path);
    }
}

CsvReader::~CsvReader() {
    if (gz_) gzclose(static_cast<gzFile>(gz_));
    if (plain_) std::fclose(plain_);
}

int CsvReader::next_char() {
    if (gz_) return gzgetc(static_cast<gzFile>(gz_));
    return std::fgetc(plain_);
}

bool CsvReader::next_row(std::vector<std::string>& fields) {
    if (eof_) return false;
    fields.clear();
    std::string cur;
    bool in_quotes = false;
    bool any = false;
    while (true) {
        int ci = next_char();
        if (ci == EOF) {
            eof_ = true;
            if (in_quotes)
                throw ParseError("row " + std::to_string(row_ + 1) +
                                 ": unterminated quoted field");
            if (!any && cur.empty() && fields.empty()) return false;
            fields.push_back(std::move(cur));
            ++row_;
            return true;
        }
        char c = static_cast<char>(ci);
        any = true;
        if (in_quotes) {
            if (c == '"') {
                int peek = next_char();
                if (peek == '"') {
                    cur.push_back('"');
                } else if (peek == ',') {
                    in_quotes = false;
                    fields.push_back(std::move(cur));
                    cur.clear();
                } else if (peek == '\n' || peek == EOF) {
                    in_quotes = false;
                    fields.push_back(std::move(cur));
                    ++row_;
                    if (peek == EOF) eof_ = true;
                    return true;
                } else if (peek == '\r') {
                    in_quotes = false;
                    next_char();  // swallow the LF
                    fields.push_back(std::move(cur));
                    ++row_;
                    return true;
                } else {
                    throw ParseError("row " + std::to_string(row_ + 1) +
                                     ": stray character after closing quote");
                }
            } else {
                cur.push_back(c);
            }
        } else if (c == '"' && cur.empty()) {
            in_quotes = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else if (c == '\n') {
            fields.push_back(std::move(cur));
            ++row_;
            return true;
        } else if (c == '\r') {
            // LF follows; swallow.
        } else {
            cur.push_back(c);
        }
    }
}

// ------------------------------------------------------------------ summarize

namespace {

const char* kBioNumericCols[] = {
    "retirement_age", "annual_income", "fico_score", "debt_fraction_of_income",
    "transactions_per_year_mean", "mean_annual_weekend_getaways", "mean_annual_vacations",
    "mean_vacation_duration", "mean_annual_business_trips", "mean_business_trip_duration",
    "p_foreign_weekend_getaway", "p_foreign_vacation", "p_foreign_business_trip", "cards",
};

std::unordered_map<std::string, size_t> header_index(const std::vector<std::string>& header) {
    std::unordered_map<std::string, size_t> idx;
    for (size_t i = 0; i < header.size(); ++i) idx[header[i]] = i;
    return idx;
}

}  // namespace

SummaryReport summarize(const std::string& run_dir) {
    SummaryReport rep;

    {
        CsvReader r(run_dir + "/bios.csv");
        std::vector<std::string> row;
        if (!r.next_row(row)) throw ParseError("bios.csv: missing header");
        auto idx = header_index(row);
        uint64_t males = 0;
        double slots_total = 0;
        while (r.next_row(row)) {
            if (row.size() != idx.size())
                throw ParseError("bios.csv row " + std::to_string(r.row_number()) +
                                 ": wrong field count");
            ++rep.consumers;
            males += row[idx.at("gender")] == "M";
            for (const char* col : kBioNumericCols)
                rep.bio[col].add(to_double(row[idx.at(col)], r.row_number(), col));
            slots_total += to_double(row[idx.at("cards")], r.row_number(), "cards");
        }
        rep.male_share = rep.consumers ? static_cast<double>(males) / rep.consumers : 0;
        rep.cards_per_consumer = rep.consumers ? slots_total / rep.consumers : 0;
    }

    std::unordered_map<uint64_t, char> kind_of_card;  // 'c','d','p'
    {
        CsvReader r(run_dir + "/cards.csv");
        std::vector<std::string> row;
        if (!r.next_row(row)) throw ParseError("cards.csv: missing header");
        auto idx = header_index(row);
        std::map<std::string, std::map<std::string, bool>> seen_slots;
        std::map<std::string, Moments> limits;
        std::map<std::string, uint64_t> chips;
        while (r.next_row(row)) {
            if (row.size() != idx.size())
                throw ParseError("cards.csv row " + std::to_string(r.row_number()) +
                                 ": wrong field count");
            const std::string& kind = row[idx.at("kind")];
            auto& ks = rep.cards[kind];
            ks.card_rows++;
            std::string slot_key = row[idx.at("consumer_id")] + ":" + row[idx.at("slot")];
            if (!seen_slots[kind].count(slot_key)) {
                seen_slots[kind][slot_key] = true;
                ks.slots++;
            }
            limits[kind].add(to_double(row[idx.at("credit_limit")], r.row_number(), "limit"));
            chips[kind] += row[idx.at("has_chip")] == "1";
            uint64_t card_id = 0;
            std::from_chars(row[idx.at("card_id")].data(),
                            row[idx.at("card_id")].data() + row[idx.at("card_id")].size(),
                            card_id);
            kind_of_card[card_id] = kind[0];
        }
        for (auto& [kind, ks] : rep.cards) {
            ks.mean_limit = limits[kind].mean;
            ks.chip_share = ks.card_rows ? static_cast<double>(chips[kind]) / ks.card_rows : 0;
        }
    }

    {
        std::string path = run_dir + "/transactions.csv";
        if (!fs::exists(path) && fs::exists(path + ".gz")) path += ".gz";
        CsvReader r(path);
        std::vector<std::string> row;
        if (!r.next_row(row)) throw ParseError("transactions.csv: missing header");
        auto idx = header_index(row);
        const size_t i_consumer = idx.at("consumer_id");
        const size_t i_card = idx.at("card_id");
        const size_t i_ts = idx.at("timestamp");
        const size_t i_amount = idx.at("amount");
        const size_t i_state = idx.at("merchant_state");
        const size_t i_country = idx.at("merchant_country");
        const size_t i_mcc = idx.at("mcc");
        const size_t i_channel = idx.at("channel");
        const size_t i_fraud = idx.at("is_fraud");

        std::unordered_map<uint64_t, uint64_t> annual_counts;
        std::unordered_map<uint64_t, int64_t> annual_cents;
        annual_counts.reserve(1 << 16);

        while (r.next_row(row)) {
            if (row.size() != idx.size())
                throw ParseError("transactions.csv row " + std::to_string(r.row_number()) +
                                 ": wrong field count");
            ++rep.total_rows;
            int64_t cents = parse_cents(row[i_amount], r.row_number());
            rep.total_cents += cents;
            double dollars = static_cast<double>(cents) / 100.0;

            const std::string& channel = row[i_channel];
            rep.count_by_channel[channel]++;
            rep.cents_by_channel[channel] += cents;
            rep.per_tx_by_channel[channel].add(dollars);
            rep.per_tx_amount.add(dollars);

            bool is_fraud = row[i_fraud] == "1";
            if (is_fraud) {
                rep.fraud_rows++;
                rep.per_tx_fraud.add(dollars);
            } else {
                rep.per_tx_genuine.add(dollars);
            }

            const std::string& ts = row[i_ts];
            if (ts.size() != 16 || ts[10] != 'T')
                throw ParseError("transactions.csv row " + std::to_string(r.row_number()) +
                                 ": bad timestamp '" + ts + "'");
            int year = (ts[0] - '0') * 1000 + (ts[1] - '0') * 100 + (ts[2] - '0') * 10 +
                       (ts[3] - '0');
            if (is_fraud && year >= 2016) {
                rep.fraud_rows_recent++;
                if (channel == "ONLINE") rep.fraud_online_rows_recent++;
            }

            std::string instrument = "cash";
            if (!row[i_card].empty()) {
                uint64_t card_id = 0;
                std::from_chars(row[i_card].data(), row[i_card].data() + row[i_card].size(),
                                card_id);
                auto it = kind_of_card.find(card_id);
                if (it == kind_of_card.end())
                    throw ParseError("transactions.csv row " + std::to_string(r.row_number()) +
                                     ": unknown card_id " + row[i_card]);
                instrument = it->second == 'c'   ? "credit"
                             : it->second == 'd' ? "debit"
                                                 : "prepaid";
            }
            rep.count_by_instrument[instrument]++;
            rep.cents_by_instrument[instrument] += cents;

            if (!row[i_state].empty()) {
                rep.count_by_state[row[i_state]]++;
                rep.cents_by_state[row[i_state]] += cents;
            }
            rep.count_by_country[row[i_country]]++;
            rep.cents_by_country[row[i_country]] += cents;
            int mcc = 0;
            std::from_chars(row[i_mcc].data(), row[i_mcc].data() + row[i_mcc].size(), mcc);
            rep.count_by_mcc[mcc]++;
            rep.cents_by_mcc[mcc] += cents;

            uint64_t consumer = 0;
            std::from_chars(row[i_consumer].data(),
                            row[i_consumer].data() + row[i_consumer].size(), consumer);
            uint64_t key = consumer * 10000 + static_cast<uint64_t>(year);
            annual_counts[key]++;
            annual_cents[key] += cents;
        }
        std::vector<uint64_t> keys;
        keys.reserve(annual_counts.size());
        for (const auto& [key, count] : annual_counts) keys.push_back(key);
        std::sort(keys.begin(), keys.end());
        for (uint64_t key : keys) {
            rep.annual_count.add(static_cast<double>(annual_counts[key]));
            rep.annual_spend.add(static_cast<double>(annual_cents[key]) / 100.0);
        }
    }
    return rep;
}

double SummaryReport::metric(const std::string& name) const {
    for (const auto& [n, v] : metrics())
        if (n == name) return v;
    throw population::ConfigError("unknown metric '" + name + "'");
}

std::vector<std::pair<std::string, double>> SummaryReport::metrics() const {
    std::vector<std::pair<std::string, double>> out;
    for (const auto& [col, m] : bio) {
        out.push_back({"bio." + col + ".mean", m.mean});
        out.push_back({"bio." + col + ".std", m.std_dev()});
    }
    out.push_back({"bio.male_share", male_share});
    out.push_back({"cards.per_consumer.mean", cards_per_consumer});
    for (const auto& [kind, ks] : cards) {
        out.push_back({"cards." + kind + ".rows", static_cast<double>(ks.card_rows)});
        out.push_back({"cards." + kind + ".mean_limit", ks.mean_limit});
        out.push_back({"cards." + kind + ".chip_share", ks.chip_share});
    }
    out.push_back({"tx.total_rows", static_cast<double>(total_rows)});
    out.push_back({"tx.total_amount", static_cast<double>(total_cents) / 100.0});
    for (const auto& [ch, c] : count_by_channel)
        out.push_back(
            {"tx.channel_share." + ch, total_rows ? static_cast<double>(c) / total_rows : 0.0});
    for (const auto& [in, c] : count_by_instrument)
        out.push_back({"tx.instrument_share." + in,
                       total_rows ? static_cast<double>(c) / total_rows : 0.0});
    out.push_back({"tx.per_tx_amount.mean", per_tx_amount.mean});
    out.push_back({"tx.per_tx_amount.fraud_mean", per_tx_fraud.mean});
    out.push_back({"tx.per_tx_amount.genuine_mean", per_tx_genuine.mean});
    out.push_back({"tx.annual_per_consumer.mean", annual_count.mean});
    out.push_back({"tx.annual_per_consumer.std", annual_count.std_dev()});
    out.push_back({"tx.annual_spend_per_consumer.mean", annual_spend.mean});
    out.push_back(
        {"fraud.share", total_rows ? static_cast<double>(fraud_rows) / total_rows : 0.0});
    out.push_back({"fraud.rows", static_cast<double>(fraud_rows)});
    out.push_back({"fraud.rows_2016plus", static_cast<double>(fraud_rows_recent)});
    out.push_back({"fraud.online_share_2016plus",
                   fraud_rows_recent
                       ? static_cast<double>(fraud_online_rows_recent) / fraud_rows_recent
                       : 0.0});
    return out;
}

std::string SummaryReport::to_json() const {
    json j;
    for (const auto& [name, value] : metrics()) j["metrics"][name] = value;
    json states = json::object(), countries = json::object(), mccs = json::object();
    for (const auto& [s, c] : count_by_state)
        states[s] = {{"count", c}, {"amount", cents_by_state.at(s) / 100.0}};
    for (const auto& [s, c] : count_by_country)
        countries[s] = {{"count", c}, {"amount", cents_by_country.at(s) / 100.0}};
    for (const auto& [m, c] : count_by_mcc) {
        char code[8];
        std::snprintf(code, sizeof code, "%04d", m);
        mccs[code] = {{"count", c}, {"amount", cents_by_mcc.at(m) / 100.0}};
    }
    j["per_state"] = states;
    j["per_country"] = countries;
    j["per_mcc"] = mccs;
    json chans = json::object();
    for (const auto& [ch, m] : per_tx_by_channel)
        chans[ch] = {{"count", m.count}, {"mean", m.mean}, {"std", m.std_dev()}};
    j["per_transaction_by_channel"] = chans;
    return j.dump(2);
}

std::string SummaryReport::to_text() const {
    std::string out;
    char line[200];
    out += "== Biographical attributes (mean / std) ==\n";
    for (const auto& [col, m] : bio) {
        std::snprintf(line, sizeof line, "  %-34s %14.3f %14.3f\n", col.c_str(), m.mean,
                      m.std_dev());
        out += line;
    }
    std::snprintf(line, sizeof line, "  %-34s %14.3f\n", "male_share", male_share);
    out += line;
    out += "== Cards ==\n";
    std::snprintf(line, sizeof line, "  cards per consumer: %.3f\n", cards_per_consumer);
    out += line;
    for (const auto& [kind, ks] : cards) {
        std::snprintf(line, sizeof line,
                      "  %-8s rows=%8llu slots=%8llu mean_limit=%10.2f chip_share=%.3f\n",
                      kind.c_str(), static_cast<unsigned long long>(ks.card_rows),
                      static_cast<unsigned long long>(ks.slots), ks.mean_limit, ks.chip_share);
        out += line;
    }
    out += "== Transactions ==\n";
    std::snprintf(line, sizeof line, "  rows=%llu total_amount=%.2f\n",
                  static_cast<unsigned long long>(total_rows),
                  static_cast<double>(total_cents) / 100.0);
    out += line;
    for (const auto& [ch, c] : count_by_channel) {
        std::snprintf(line, sizeof line, "  channel %-7s count=%10llu amount=%14.2f\n",
                      ch.c_str(), static_cast<unsigned long long>(c),
                      static_cast<double>(cents_by_channel.at(ch)) / 100.0);
        out += line;
    }
    for (const auto& [in, c] : count_by_instrument) {
        std::snprintf(line, sizeof line, "  instrument %-7s count=%10llu amount=%14.2f\n",
                      in.c_str(), static_cast<unsigned long long>(c),
                      static_cast<double>(cents_by_instrument.at(in)) / 100.0);
        out += line;
    }
    std::snprintf(line, sizeof line,
                  "  per-tx amount: mean=%.2f  fraud_mean=%.2f  genuine_mean=%.2f\n",
                  per_tx_amount.mean, per_tx_fraud.mean, per_tx_genuine.mean);
    out += line;
    std::snprintf(line, sizeof line, "  annual per consumer: mean=%.1f std=%.1f\n",
                  annual_count.mean, annual_count.std_dev());
    out += line;
    std::snprintf(line, sizeof line, "  fraud rows=%llu share=%.5f online_2016plus=%.3f\n",
                  static_cast<unsigned long long>(fraud_rows),
                  total_rows ? static_cast<double>(fraud_rows) / total_rows : 0.0,
                  fraud_rows_recent
                      ? static_cast<double>(fraud_online_rows_recent) / fraud_rows_recent
                      : 0.0);
    out += line;
    std::snprintf(line, sizeof line, "  states=%zu countries=%zu mccs=%zu\n",
                  count_by_state.size(), count_by_country.size(), count_by_mcc.size());
    out += line;
    return out;
}

CalibrationReport calibrate(const SummaryReport& report,
                            const std::vector<CalibrationTarget>& targets) {
    CalibrationReport rep;
    for (const auto& t : targets) {
        CalibrationResult r;
        r.metric = t.metric;
        r.target = t.target;
        r.achieved = report.metric(t.metric);  // throws on unknown metric
        r.deviation = std::abs(r.achieved - t.target);
        r.tolerance = t.tolerance;
        r.pass = r.deviation <= t.tolerance;
        rep.all_pass = rep.all_pass && r.pass;
        rep.results.push_back(r);
    }
    return rep;
}

std::string CalibrationReport::to_json() const {
    json j;
    j["all_pass"] = all_pass;
    j["results"] = json::array();
    for (const auto& r : results)
        j["results"].push_back({{"metric", r.metric},
                                {"target", r.target},
                                {"achieved", r.achieved},
                                {"deviation", r.deviation},
                                {"tolerance", r.tolerance},
                                {"pass", r.pass}});
    return j.dump(2);
}

std::string CalibrationReport::to_text() const {
    std::string out;
    char line[220];
    for (const auto& r : results) {
        std::snprintf(line, sizeof line, "%-36s target=%12.4f achieved=%12.4f dev=%10.4f %s\n",
                      r.metric.c_str(), r.target, r.achieved, r.deviation,
                      r.pass ? "PASS" : "FAIL");
        out += line;
    }
    out += all_pass ? "calibration: ALL PASS\n" : "calibration: FAILURES PRESENT\n";
    return out;
}

uint64_t fnv1a_file(const std::string& path) {
    FILE* f = std::fopen(path.c_str(), "rb");
    if (!f) throw IoError("cannot open " + path + " for hashing");
    uint64_t h = 0xcbf29ce484222325ull;
    char buf[1 << 16];
    size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, f)) > 0) {
        for (size_t i = 0; i < got; ++i) {
            h ^= static_cast<unsigned char>(buf[i]);
            h *= 0x100000001b3ull;
        }
    }
    std::fclose(f);
    return h;
}

}  // namespace cardsim::iostats
