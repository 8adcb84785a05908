#pragma once

#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "cardsim/cards.hpp"
#include "cardsim/events.hpp"
#include "cardsim/population.hpp"
#include "cardsim/world.hpp"

namespace cardsim::engine {

enum class Segment : uint8_t { Morning = 0, Afternoon = 1, Night = 2 };
enum class Mode : uint8_t { Home = 0, WeekendGetaway = 1, Vacation = 2, BusinessTrip = 3 };

// Day partition: Morning 05:00-11:59, Afternoon 12:00-18:59, Night
// 19:00-04:59 (night minutes stay on the same calendar day).
Segment segment_of_minute(int minute_of_day);
int draw_minute_in_segment(Segment seg, rng::Stream& s);

struct DriftSchedule {
    int online_start_year = 1995;
    std::vector<std::pair<double, double>> online_share_knots = {
        {1995, 0.0}, {1998, 0.02}, {2003, 0.07}, {2010, 0.15}, {2016, 0.21}, {2025, 0.27}};
    std::vector<std::pair<double, double>> fraud_online_share_knots = {
        {1995, 0.0}, {2000, 0.20}, {2008, 0.40}, {2014, 0.55}, {2016, 0.70}, {2100, 0.70}};

    // Share of genuine purchases made online; exactly 0 before
    // online_start_year.
    double online_share(double year) const;
    // Share of fraud carried out online, by era.
    double fraud_online_share(double year) const;
    void validate(std::vector<std::string>& errors, const std::string& prefix) const;
};

double year_fraction(Date d);

struct RetirementAdjustment {
    std::string item_name;
    double multiplier;
};

struct EngineConfig {
    double cash_threshold_usd = 200.0;
    double cash_probability = 0.30;
    double favorite_multiplier = 4.0;
    int nearby_k = 12;
    double max_radius_km = 150.0;
    double distance_decay_power = 2.0;
    double distance_decay_offset_km = 2.0;
    double retirement_rate_multiplier = 0.85;
    double retirement_weekday_flattening = 1.0;
    double extreme_age_rate_multiplier = 0.5;
    double trip_duration_std_fraction = 0.35;
    // Mix shift applied at retirement; rates are renormalized afterwards so
    // the level change stays exactly retirement_rate_multiplier.
    std::vector<RetirementAdjustment> retirement_item_multipliers = {
        {"dry cleaning", 0.4},   {"public transit", 0.5},  {"parking", 0.6},
        {"road tolls", 0.6},     {"office supplies", 0.5}, {"coffee", 0.8},
        {"fast food meal", 0.8}, {"golf", 1.8},            {"museums and attractions", 1.4},
        {"garden and nursery", 1.4}, {"doctor visit", 1.3}, {"prescription drugs", 1.3},
    };

    void validate(std::vector<std::string>& errors, const std::string& prefix) const;
};

enum class TripKind : uint8_t { WeekendGetaway, Vacation, BusinessTrip };

struct Trip {
    TripKind kind;
    Date start;
    int duration_days;
    bool foreign;
    uint32_t dest_city;  // index into world.cities()
};

struct ConsumerState {
    Mode mode = Mode::Home;
    double lat = 0;
    double lon = 0;
    uint32_t current_city = 0;  // valid when traveling
    Date trip_end{};            // valid when traveling
    bool is_retired = false;
    bool extreme_age = false;
};

struct DropCounters {
    uint64_t no_merchant = 0;    // no in-person candidate and online unavailable
    uint64_t no_instrument = 0;  // no valid card and cash not allowed

    DropCounters& operator+=(const DropCounters& o) {
        no_merchant += o.no_merchant;
        no_instrument += o.no_instrument;
        return *this;
    }
};

// Per-consumer simulation engine. Immutable world shared across workers; one
// ConsumerEngine per worker (it carries a travel-candidate cache).
class ConsumerEngine {
  public:
    ConsumerEngine(const world::MerchantWorld& w, const EngineConfig& cfg,
                   const DriftSchedule& drift);

    // Travel plan for one calendar year; trips never overlap (re-rolled, then
    // dropped after 10 attempts). Weekend getaways start on Saturdays.
    std::vector<Trip> plan_travel(const population::ConsumerProfile& profile, int year,
                                  bool retired, rng::Stream& s) const;

    // Simulates the whole horizon for one consumer; emits genuine purchases
    // in strictly increasing timestamp order via sink.
    void simulate_consumer(const population::ConsumerProfile& profile,
                           const std::vector<cards::CardAccount>& consumer_cards,
                           const world::PreferenceTable& prefs,
                           const population::Horizon& horizon, uint64_t master_seed,
                           int extreme_age_threshold,
                           const std::function<void(const TransactionEvent&)>& sink,
                           DropCounters& drops);

    const world::MerchantWorld& world() const { return world_; }
    const EngineConfig& config() const { return cfg_; }
    const DriftSchedule& drift() const { return drift_; }

    // Exposed for direct testing. travel_city set => consumer is away from
    // home and favorites do not apply; candidate lists are cached per city.
    struct MerchantChoice {
        uint32_t merchant_id;
        uint32_t location_id;  // kOnlineLocation when online
        bool online;
    };
    std::optional<MerchantChoice> choose_merchant(uint16_t gs_id, double lat, double lon,
                                                  std::optional<uint32_t> travel_city,
                                                  double year, uint64_t favorite_seed,
                                                  rng::Stream& s, bool enforce_radius = true);

  private:
    struct CandidateList {
        std::vector<uint32_t> location_ids;
        std::vector<double> weights;
        uint32_t favorite_idx = 0;  // index into location_ids
    };
    const CandidateList& candidates_for(uint16_t gs_id, double lat, double lon, uint64_t key,
                                        uint64_t favorite_seed, bool enforce_radius);

    const world::MerchantWorld& world_;
    EngineConfig cfg_;
    DriftSchedule drift_;
    // Keyed by (cache key, gs); cache key identifies a query position.
    std::unordered_map<uint64_t, CandidateList> candidate_cache_;
};

}  // namespace cardsim::engine
