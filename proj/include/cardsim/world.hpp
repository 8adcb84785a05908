#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "cardsim/geo.hpp"
#include "cardsim/population.hpp"
#include "cardsim/rng.hpp"

namespace cardsim::world {

class LookupError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct MccInfo {
    int code;  // 0..9999
    std::string description;
};

// One entry of the goods-and-services catalog. Income curves are piecewise
// linear over log-income with five knots.
struct GoodsServiceItem {
    std::string name;
    std::vector<int> mccs;  // non-empty
    double annual_rate_median = 1.0;  // purchases/yr for a median participant
    double rate_log_std = 0.5;        // population spread of personal rates
    double time_of_day[3] = {1, 1, 1};      // Morning, Afternoon, Night
    double weekday_weekend[2] = {1, 1};     // relative per-day propensity
    double context[3] = {1, 1, 1};          // Home, Vacation, BusinessTravel
    double income_knots[5] = {15000, 30000, 60000, 120000, 240000};
    double participation[5] = {1, 1, 1, 1, 1};  // P(buys at all | income)
    double amount_median[5] = {10, 10, 10, 10, 10};  // $ per purchase at knot
    double amount_log_std = 0.5;
    double amount_spread = 0.5;  // share of log-variance between individuals

    double participation_at(double income) const;
    double amount_median_at(double income) const;
};

class Catalog {
  public:
    static const Catalog& embedded();
    static Catalog from_json(const std::string& json_text);
    std::string to_json() const;

    const std::vector<GoodsServiceItem>& items() const { return items_; }
    const std::vector<MccInfo>& mccs() const { return mccs_; }
    const GoodsServiceItem& item(size_t gs_id) const;
    int index_of(const std::string& name) const;  // -1 when absent
    const std::vector<int>& mccs_for_item(const std::string& name) const;
    const std::string& mcc_description(int code) const;
    // Relative sales weight per MCC derived from the catalog (rate x amount).
    const std::unordered_map<int, double>& mcc_sales_weights() const { return sales_weights_; }

    explicit Catalog(std::vector<GoodsServiceItem> items, std::vector<MccInfo> mccs);

  private:
    std::vector<GoodsServiceItem> items_;
    std::vector<MccInfo> mccs_;
    std::unordered_map<int, std::string> mcc_desc_;
    std::unordered_map<int, double> sales_weights_;
};

struct WorldConfig {
    uint32_t total_locations = 50000;
    uint32_t multinational_count = 301;
    uint32_t min_multinational_locations = 50;
    double us_location_share = 0.65;
    double multinational_location_share = 0.45;
    double multinational_online_probability = 0.92;
    double local_online_probability = 0.22;
    uint32_t min_countries = 20;
    std::string catalog_file;  // empty = embedded catalog

    void validate(std::vector<std::string>& errors, const std::string& prefix) const;
};

struct WorldCity {
    std::string city;
    std::string state;    // empty outside the U.S.
    std::string zipcode;  // empty outside the U.S.
    std::string country;
    double lat = 0;
    double lon = 0;
    bool is_us = false;
    double weight = 1.0;  // relative population weight
};

struct Merchant {
    uint32_t merchant_id;
    std::string name;
    uint16_t mcc;
    bool is_multinational;
    bool has_online;
};

struct MerchantLocation {
    uint32_t location_id;
    uint32_t merchant_id;
    uint32_t city_index;
    float lat;
    float lon;
};

struct Candidate {
    uint32_t location_id;
    double distance_km;
};

class MerchantWorld {
  public:
    const std::vector<Merchant>& merchants() const { return merchants_; }
    const std::vector<MerchantLocation>& locations() const { return locations_; }
    const std::vector<WorldCity>& cities() const { return cities_; }
    const Catalog& catalog() const { return *catalog_; }

    const Merchant& merchant_of(const MerchantLocation& loc) const {
        return merchants_[loc.merchant_id];
    }

    // Up to k nearest locations whose merchant MCC is in mcc_set, ranked by
    // distance (ties by location id). Exact: matches a brute-force scan.
    std::vector<Candidate> nearby_locations(double lat, double lon,
                                            const std::vector<int>& mcc_set, size_t k) const;

    // Merchant ids with an online presence for any MCC in the set.
    const std::vector<uint32_t>& online_merchants(int mcc) const;
    std::vector<uint32_t> online_merchants_for(const std::vector<int>& mcc_set) const;

    // MCC codes referenced by the catalog but absent from the built world.
    const std::vector<int>& coverage_gaps() const { return coverage_gaps_; }

    std::string to_json() const;
    static MerchantWorld from_json(const std::string& json_text, const Catalog& catalog);

    friend MerchantWorld build_world(const WorldConfig& cfg, uint64_t seed,
                                     const Catalog& catalog);

  private:
    void build_indexes();

    std::vector<Merchant> merchants_;
    std::vector<MerchantLocation> locations_;
    std::vector<WorldCity> cities_;
    const Catalog* catalog_ = nullptr;

    // Per-MCC spatial grid (1 degree cells): sorted (cell, location) pairs
    // with an offset table per MCC.
    struct MccIndex {
        std::vector<std::pair<int32_t, uint32_t>> cell_locs;  // sorted by cell then id
    };
    std::unordered_map<int, MccIndex> mcc_index_;
    std::unordered_map<int, std::vector<uint32_t>> online_by_mcc_;
    std::vector<uint32_t> empty_;
    std::vector<int> coverage_gaps_;
};

MerchantWorld build_world(const WorldConfig& cfg, uint64_t seed, const Catalog& catalog);

// Per-consumer instantiation of the catalog: participation flags, personal
// annual rates, and personal spend distributions at the consumer's income.
struct GsPreference {
    bool participates = false;
    double annual_rate = 0;        // before engine-level total rescaling
    double spend_median = 10;      // personal median $ per purchase
    double spend_log_std = 0.5;    // per-event log std
    uint64_t favorite_seed = 0;    // sticky favorite-merchant bias seed
};

struct PreferenceTable {
    std::vector<GsPreference> items;  // indexed by gs_id
    double total_rate = 0;            // sum of participating annual rates
};

PreferenceTable instantiate_preferences(const population::ConsumerProfile& profile,
                                        const Catalog& catalog, rng::Stream& s);

}  // namespace cardsim::world
