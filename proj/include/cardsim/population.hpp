#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cardsim/correlate.hpp"
#include "cardsim/dates.hpp"
#include "cardsim/geo.hpp"
#include "cardsim/rng.hpp"

namespace cardsim::population {

class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// The named per-attribute distributions from the virtual-world parameter set.
// Declaration order defines the column order of the correlated core matrix.
struct AttributeSet {
    rng::PopulationDistribution cards_per_consumer{3.0, 1.0, 1.0};
    rng::PopulationDistribution cards_per_account{1.5, 0.6, 1.0};
    rng::PopulationDistribution transactions_per_year{430.0, 150.0, 1.0};
    rng::PopulationDistribution fico_score{712.0, 60.0, 1.0};
    rng::PopulationDistribution annual_income{62000.0, 24000.0, 1.0};
    rng::PopulationDistribution debt_fraction_of_income{0.30, 0.11, 1.0};
    rng::PopulationDistribution credit_limit{12000.0, 4200.0, 1.0};
    rng::PopulationDistribution balance_fraction_of_limit{0.35, 0.12, 1.0};
    rng::PopulationDistribution years_account_open{9.0, 3.0, 1.0};
    rng::PopulationDistribution years_since_pin_change{3.0, 1.1, 1.0};
    rng::PopulationDistribution mean_annual_weekend_getaways{2.0, 0.7, 1.0};
    rng::PopulationDistribution mean_annual_vacations{1.6, 0.55, 1.0};
    rng::PopulationDistribution mean_vacation_duration{6.0, 2.0, 1.0};
    rng::PopulationDistribution mean_annual_business_trips{1.5, 0.55, 1.0};
    rng::PopulationDistribution mean_business_trip_duration{2.5, 0.9, 1.0};
    rng::PopulationDistribution p_foreign_weekend_getaway{0.05, 0.016, 1.0};
    rng::PopulationDistribution p_foreign_vacation{0.18, 0.06, 1.0};
    rng::PopulationDistribution p_foreign_business_trip{0.12, 0.04, 1.0};
};

// Names of the correlated core columns, in AttributeSet declaration order.
// The three foreign-travel probabilities are not in the core: they are
// rank-coupled to income instead.
std::vector<std::string> core_attribute_names();
constexpr int kCoreAttributeCount = 15;

struct CorrelationTriple {
    std::string a;
    std::string b;
    double rho;
};

// Owning row for geography tables loaded from config files.
struct GeoPlace {
    std::string city;
    std::string state;
    std::string zip;
    double lat = 0;
    double lon = 0;
    double weight = 1;
};

struct IncomeCoupling {
    std::string attribute;  // one of the p_foreign_* names
    double strength;        // [0,1]
};

struct PopulationConfig {
    uint32_t size = 2000;
    double gender_male_share = 0.5;
    // Piecewise-linear density over age at simulation start; negative ages
    // are consumers who turn 18 during the horizon.
    std::vector<std::pair<double, double>> age_pyramid_knots = {
        {-17, 0.55}, {0, 0.60}, {18, 1.00}, {35, 1.00}, {55, 0.85}, {70, 0.50}, {85, 0.08}};
    rng::PopulationDistribution retirement_age{65.0, 3.0, 1.0};
    int extreme_age_threshold = 85;
    AttributeSet attributes;
    std::vector<CorrelationTriple> correlations;
    std::vector<IncomeCoupling> income_couplings;
    // Empty means the embedded table.
    std::vector<GeoPlace> geo_table_override;

    static PopulationConfig with_default_correlations();
    void validate(std::vector<std::string>& errors, const std::string& prefix) const;
};

struct HomeLocation {
    double latitude = 0;
    double longitude = 0;
    std::string city;
    std::string state;
    std::string zipcode;
};

struct TravelPropensity {
    double annual_weekend_getaways = 0;
    double annual_vacations = 0;
    double vacation_duration_days = 1;
    double annual_business_trips = 0;
    double business_trip_duration_days = 1;
    double p_foreign_weekend_getaway = 0;
    double p_foreign_vacation = 0;
    double p_foreign_business_trip = 0;
};

struct ConsumerProfile {
    uint32_t consumer_id = 0;
    std::string display_name;
    char gender = 'F';
    Date birth_date{};
    HomeLocation home;
    std::string occupation;
    int retirement_age = 65;
    double annual_income = 0;
    double fico_score = 0;
    double debt_fraction_of_income = 0;
    double credit_limit = 0;
    double balance_fraction_of_limit = 0;
    double years_account_open = 0;
    double years_since_pin_change = 0;
    double cards_per_consumer_draw = 1;
    double cards_per_account_draw = 1;
    rng::IndividualDistribution transactions_per_year;
    TravelPropensity travel;
    Date entry_date{};
};

enum class LifecycleKind { Enter18, Retire, ExtremeAge };

struct LifecycleEvent {
    uint32_t consumer_id;
    LifecycleKind kind;
    Date effective_date;
};

struct Horizon {
    Date start;
    Date end;  // inclusive
};

struct PopulationResult {
    std::vector<ConsumerProfile> profiles;
    Eigen::MatrixXd completed_correlation;  // over the core attributes
    double psd_max_deviation = 0.0;
    uint64_t fico_clamp_count = 0;  // values pulled back into [300, 850]
};

// Weighted geography table with precomputed cumulative weights.
class GeoTable {
  public:
    explicit GeoTable(std::vector<GeoPlace> places);
    static const GeoTable& embedded();
    const GeoPlace& sample(rng::Stream& s) const;
    const std::vector<GeoPlace>& places() const { return places_; }
    double weight_share(const std::string& state) const;

  private:
    std::vector<GeoPlace> places_;
    std::vector<double> cumulative_;
};

HomeLocation assign_geography(rng::Stream& s, const GeoTable& table);

PopulationResult generate_population(const PopulationConfig& cfg, uint64_t master_seed,
                                     const Horizon& horizon);

std::vector<LifecycleEvent> lifecycle_events(const ConsumerProfile& profile,
                                             const Horizon& horizon,
                                             int extreme_age_threshold = 85);

// Human-readable bio card (name, age, location, income, FICO, card count).
std::string format_bio_card(const ConsumerProfile& profile, int card_count,
                            const Horizon& horizon);

}  // namespace cardsim::population
