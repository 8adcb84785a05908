#include "cardsim/population.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace cardsim::population {

namespace {

constexpr double kFicoMin = 300.0;
constexpr double kFicoMax = 850.0;
constexpr double kIncomeFloor = 2000.0;

struct CoreColumn {
    const char* name;
    rng::PopulationDistribution AttributeSet::*dist;
};

// Order fixes the correlated core matrix columns.
const CoreColumn kCoreColumns[kCoreAttributeCount] = {
    {"cards_per_consumer", &AttributeSet::cards_per_consumer},
    {"cards_per_account", &AttributeSet::cards_per_account},
    {"transactions_per_year", &AttributeSet::transactions_per_year},
    {"fico_score", &AttributeSet::fico_score},
    {"annual_income", &AttributeSet::annual_income},
    {"debt_fraction_of_income", &AttributeSet::debt_fraction_of_income},
    {"credit_limit", &AttributeSet::credit_limit},
    {"balance_fraction_of_limit", &AttributeSet::balance_fraction_of_limit},
    {"years_account_open", &AttributeSet::years_account_open},
    {"years_since_pin_change", &AttributeSet::years_since_pin_change},
    {"mean_annual_weekend_getaways", &AttributeSet::mean_annual_weekend_getaways},
    {"mean_annual_vacations", &AttributeSet::mean_annual_vacations},
    {"mean_vacation_duration", &AttributeSet::mean_vacation_duration},
    {"mean_annual_business_trips", &AttributeSet::mean_annual_business_trips},
    {"mean_business_trip_duration", &AttributeSet::mean_business_trip_duration},
};

// Inverse-CDF sampling from a piecewise-linear density.
class PiecewiseLinearSampler {
  public:
    explicit PiecewiseLinearSampler(const std::vector<std::pair<double, double>>& knots)
        : knots_(knots) {
        if (knots_.size() < 2) throw ConfigError("age pyramid needs at least 2 knots");
        cum_.resize(knots_.size(), 0.0);
        for (size_t i = 1; i < knots_.size(); ++i) {
            double dx = knots_[i].first - knots_[i - 1].first;
            if (dx <= 0) throw ConfigError("age pyramid knots must be strictly increasing");
            if (knots_[i].second < 0 || knots_[i - 1].second < 0)
                throw ConfigError("age pyramid densities must be non-negative");
            cum_[i] = cum_[i - 1] + 0.5 * (knots_[i].second + knots_[i - 1].second) * dx;
        }
        if (cum_.back() <= 0) throw ConfigError("age pyramid has zero total mass");
    }

    double sample(rng::Stream& s) const {
        double target = s.next_double() * cum_.back();
        size_t i = 1;
        while (i + 1 < cum_.size() && cum_[i] < target) ++i;
        double seg = target - cum_[i - 1];
        double x0 = knots_[i - 1].first, x1 = knots_[i].first;
        double y0 = knots_[i - 1].second, y1 = knots_[i].second;
        double dx = x1 - x0;
        double slope = (y1 - y0) / dx;
        if (std::abs(slope) < 1e-12) return x0 + (y0 > 0 ? seg / y0 : 0.0);
        // Solve y0*t + slope*t^2/2 = seg for t in [0, dx].
        double disc = y0 * y0 + 2.0 * slope * seg;
        double t = (-y0 + std::sqrt(std::max(0.0, disc))) / slope;
        return x0 + std::clamp(t, 0.0, dx);
    }

  private:
    std::vector<std::pair<double, double>> knots_;
    std::vector<double> cum_;
};

}  // namespace

std::vector<std::string> core_attribute_names() {
    std::vector<std::string> names;
    names.reserve(kCoreAttributeCount);
    for (const auto& c : kCoreColumns) names.emplace_back(c.name);
    return names;
}

PopulationConfig PopulationConfig::with_default_correlations() {
    PopulationConfig cfg;
    cfg.correlations = {
        {"annual_income", "credit_limit", 0.55},
        {"annual_income", "fico_score", 0.30},
        {"annual_income", "transactions_per_year", 0.25},
        {"annual_income", "mean_annual_vacations", 0.30},
        {"annual_income", "mean_annual_business_trips", 0.35},
        {"annual_income", "cards_per_consumer", 0.20},
        {"fico_score", "debt_fraction_of_income", -0.25},
        {"fico_score", "years_account_open", 0.25},
        {"credit_limit", "cards_per_consumer", 0.15},
    };
    cfg.income_couplings = {
        {"p_foreign_weekend_getaway", 0.40},
        {"p_foreign_vacation", 0.45},
        {"p_foreign_business_trip", 0.50},
    };
    return cfg;
}

void PopulationConfig::validate(std::vector<std::string>& errors,
                                const std::string& prefix) const {
    auto bad = [&](const std::string& field, const std::string& why) {
        errors.push_back(prefix + field + ": " + why);
    };
    if (size < 1) bad("size", "population size must be >= 1");
    if (gender_male_share < 0 || gender_male_share > 1)
        bad("gender_male_share", "must be in [0,1]");
    if (age_pyramid_knots.size() < 2) bad("age_pyramid_knots", "needs at least 2 knots");
    if (extreme_age_threshold < 18) bad("extreme_age_threshold", "must be >= 18");

    auto check_dist = [&](const char* name, const rng::PopulationDistribution& d) {
        if (d.std_dev < 0) bad(std::string("attributes.") + name, "std must be >= 0");
        if (d.spread_fraction < 0 || d.spread_fraction > 1)
            bad(std::string("attributes.") + name, "spread_fraction must be in [0,1]");
    };
    for (const auto& c : kCoreColumns) check_dist(c.name, attributes.*(c.dist));
    check_dist("p_foreign_weekend_getaway", attributes.p_foreign_weekend_getaway);
    check_dist("p_foreign_vacation", attributes.p_foreign_vacation);
    check_dist("p_foreign_business_trip", attributes.p_foreign_business_trip);
    for (const auto& p :
         {&AttributeSet::p_foreign_weekend_getaway, &AttributeSet::p_foreign_vacation,
          &AttributeSet::p_foreign_business_trip}) {
        const auto& d = attributes.*p;
        if (d.mean < 0 || d.mean > 1) bad("attributes.p_foreign_*", "mean must be in [0,1]");
    }

    auto names = core_attribute_names();
    for (const auto& t : correlations) {
        bool known_a = std::find(names.begin(), names.end(), t.a) != names.end();
        bool known_b = std::find(names.begin(), names.end(), t.b) != names.end();
        if (!known_a) bad("correlations", "unknown attribute '" + t.a + "'");
        if (!known_b) bad("correlations", "unknown attribute '" + t.b + "'");
        if (t.rho < -1 || t.rho > 1) bad("correlations", "rho outside [-1,1]");
    }
    for (const auto& c : income_couplings) {
        if (c.attribute != "p_foreign_weekend_getaway" && c.attribute != "p_foreign_vacation" &&
            c.attribute != "p_foreign_business_trip")
            bad("income_couplings", "unknown attribute '" + c.attribute + "'");
        if (c.strength < 0 || c.strength > 1) bad("income_couplings", "strength outside [0,1]");
    }
}

GeoTable::GeoTable(std::vector<GeoPlace> places) : places_(std::move(places)) {
    if (places_.empty()) throw ConfigError("geography table is empty");
    cumulative_.resize(places_.size());
    double acc = 0;
    for (size_t i = 0; i < places_.size(); ++i) {
        if (places_[i].weight <= 0) throw ConfigError("geography weights must be positive");
        acc += places_[i].weight;
        cumulative_[i] = acc;
    }
}

const GeoTable& GeoTable::embedded() {
    static const GeoTable table([] {
        std::vector<GeoPlace> places;
        for (const auto& p : geo::us_places())
            places.push_back({p.city, p.state, p.zip, p.lat, p.lon, p.weight});
        return places;
    }());
    return table;
}

const GeoPlace& GeoTable::sample(rng::Stream& s) const {
    double target = s.next_double() * cumulative_.back();
    auto it = std::lower_bound(cumulative_.begin(), cumulative_.end(), target);
    size_t idx = static_cast<size_t>(it - cumulative_.begin());
    if (idx >= places_.size()) idx = places_.size() - 1;
    return places_[idx];
}

double GeoTable::weight_share(const std::string& state) const {
    double total = cumulative_.back();
    double acc = 0;
    for (const auto& p : places_)
        if (state == p.state) acc += p.weight;
    return acc / total;
}

HomeLocation assign_geography(rng::Stream& s, const GeoTable& table) {
    const GeoPlace& p = table.sample(s);
    HomeLocation loc;
    // Jitter within roughly the city footprint.
    loc.latitude = p.lat + s.uniform(-0.06, 0.06);
    loc.longitude = p.lon + s.uniform(-0.06, 0.06);
    loc.city = p.city;
    loc.state = p.state;
    loc.zipcode = p.zip;
    return loc;
}

PopulationResult generate_population(const PopulationConfig& cfg, uint64_t master_seed,
                                     const Horizon& horizon) {
    std::vector<std::string> errors;
    cfg.validate(errors, "population.");
    if (!errors.empty()) throw ConfigError(errors.front());

    const uint32_t n = cfg.size;
    PopulationResult result;

    // Correlated core: draw raw Gaussian columns per consumer, impose the
    // completed target, then clamp bounded attributes afterwards.
    correlate::CorrelationSpec spec;
    spec.attribute_names = core_attribute_names();
    for (const auto& t : cfg.correlations) spec.add(t.a, t.b, t.rho);
    auto psd = correlate::complete_to_psd(spec);
    result.psd_max_deviation = psd.max_deviation;

    Eigen::MatrixXd core(n, kCoreAttributeCount);
    for (uint32_t i = 0; i < n; ++i) {
        auto s = rng::Stream::derive(master_seed, {rng::PathSeg{"consumer", i + 1, "core"}});
        for (int c = 0; c < kCoreAttributeCount; ++c) {
            const auto& d = cfg.attributes.*(kCoreColumns[c].dist);
            double between_std = std::sqrt(d.spread_fraction) * d.std_dev;
            core(i, c) = s.gaussian(d.mean, between_std);
        }
    }

    Eigen::MatrixXd imposed;
    if (n > kCoreAttributeCount) {
        auto mat = correlate::AttributeMatrix::from_data(spec.attribute_names, std::move(core));
        imposed = correlate::impose_correlation(mat, psd.matrix).data;
    } else {
        imposed = std::move(core);  // too few rows to whiten; keep raw draws
    }
    result.completed_correlation = psd.matrix;

    auto col = [&](const char* name) {
        for (int c = 0; c < kCoreAttributeCount; ++c)
            if (std::string_view(kCoreColumns[c].name) == name) return c;
        throw ConfigError(std::string("unknown core attribute ") + name);
    };
    const int c_income = col("annual_income");

    // Foreign-travel probabilities ride on income rank (wealth coupling).
    std::vector<double> income_col(n);
    for (uint32_t i = 0; i < n; ++i) income_col[i] = imposed(i, c_income);
    auto couple = [&](const char* name, rng::PopulationDistribution dist) {
        double strength = 0.0;
        for (const auto& c : cfg.income_couplings)
            if (c.attribute == name) strength = c.strength;
        auto s = rng::Stream::derive(master_seed, {rng::PathSeg{"population", 0, name}});
        return correlate::monotone_couple(income_col, dist, strength, s);
    };
    auto p_getaway = couple("p_foreign_weekend_getaway", cfg.attributes.p_foreign_weekend_getaway);
    auto p_vacation = couple("p_foreign_vacation", cfg.attributes.p_foreign_vacation);
    auto p_biztrip = couple("p_foreign_business_trip", cfg.attributes.p_foreign_business_trip);

    const GeoTable& geo_table = cfg.geo_table_override.empty()
                                    ? GeoTable::embedded()
                                    : GeoTable(cfg.geo_table_override);
    PiecewiseLinearSampler ages(cfg.age_pyramid_knots);

    auto males = geo::male_first_names();
    auto females = geo::female_first_names();
    auto lasts = geo::last_names();
    auto occs = geo::occupations();

    result.profiles.reserve(n);
    for (uint32_t i = 0; i < n; ++i) {
        auto s = rng::Stream::derive(master_seed, {rng::PathSeg{"consumer", i + 1, "bio"}});
        ConsumerProfile p;
        p.consumer_id = i + 1;
        p.gender = s.bernoulli(cfg.gender_male_share) ? 'M' : 'F';
        auto firsts = p.gender == 'M' ? males : females;
        p.display_name = std::string(firsts[s.uniform_index(firsts.size())]) + " " +
                         lasts[s.uniform_index(lasts.size())];
        p.occupation = occs[s.uniform_index(occs.size())];

        double age_at_start = ages.sample(s);
        int offset_days = static_cast<int>(std::lround(age_at_start * 365.25));
        p.birth_date = horizon.start.plus_days(-offset_days);

        p.home = assign_geography(s, geo_table);
        p.retirement_age = static_cast<int>(std::lround(
            s.truncated_gaussian(cfg.retirement_age.mean, cfg.retirement_age.std_dev, 50, 80)));

        auto v = [&](const char* name) { return imposed(i, col(name)); };
        double fico = v("fico_score");
        if (fico < kFicoMin || fico > kFicoMax) {
            result.fico_clamp_count++;
            fico = std::clamp(fico, kFicoMin, kFicoMax);
        }
        p.fico_score = fico;
        p.annual_income = std::max(kIncomeFloor, v("annual_income"));
        p.debt_fraction_of_income = std::max(0.0, v("debt_fraction_of_income"));
        p.credit_limit = std::max(500.0, v("credit_limit"));
        p.balance_fraction_of_limit = std::clamp(v("balance_fraction_of_limit"), 0.0, 1.0);
        p.years_account_open = std::max(0.0, v("years_account_open"));
        p.years_since_pin_change = std::max(0.0, v("years_since_pin_change"));
        p.cards_per_consumer_draw = v("cards_per_consumer");
        p.cards_per_account_draw = std::max(1.0, v("cards_per_account"));

        const auto& tpy = cfg.attributes.transactions_per_year;
        p.transactions_per_year.indiv_mean = std::max(1.0, v("transactions_per_year"));
        p.transactions_per_year.indiv_std =
            std::sqrt(1.0 - tpy.spread_fraction) * tpy.std_dev;

        p.travel.annual_weekend_getaways = std::max(0.0, v("mean_annual_weekend_getaways"));
        p.travel.annual_vacations = std::max(0.0, v("mean_annual_vacations"));
        p.travel.vacation_duration_days = std::max(1.0, v("mean_vacation_duration"));
        p.travel.annual_business_trips = std::max(0.0, v("mean_annual_business_trips"));
        p.travel.business_trip_duration_days = std::max(1.0, v("mean_business_trip_duration"));
        p.travel.p_foreign_weekend_getaway = std::clamp(p_getaway[i], 0.0, 1.0);
        p.travel.p_foreign_vacation = std::clamp(p_vacation[i], 0.0, 1.0);
        p.travel.p_foreign_business_trip = std::clamp(p_biztrip[i], 0.0, 1.0);

        Date adult = birthday(p.birth_date, 18);
        p.entry_date = adult > horizon.start ? adult : horizon.start;
        result.profiles.push_back(std::move(p));
    }
    return result;
}

std::vector<LifecycleEvent> lifecycle_events(const ConsumerProfile& profile,
                                             const Horizon& horizon,
                                             int extreme_age_threshold) {
    std::vector<LifecycleEvent> events;
    auto in_horizon = [&](Date d) { return d >= horizon.start && d <= horizon.end; };
    Date adult = birthday(profile.birth_date, 18);
    if (in_horizon(adult))
        events.push_back({profile.consumer_id, LifecycleKind::Enter18, adult});
    Date retire = birthday(profile.birth_date, profile.retirement_age);
    if (in_horizon(retire))
        events.push_back({profile.consumer_id, LifecycleKind::Retire, retire});
    Date extreme = birthday(profile.birth_date, extreme_age_threshold);
    if (in_horizon(extreme))
        events.push_back({profile.consumer_id, LifecycleKind::ExtremeAge, extreme});
    std::sort(events.begin(), events.end(), [](const LifecycleEvent& a, const LifecycleEvent& b) {
        return a.effective_date < b.effective_date;
    });
    return events;
}

std::string format_bio_card(const ConsumerProfile& p, int card_count, const Horizon& horizon) {
    std::ostringstream os;
    CivilDate end = to_civil(horizon.end);
    CivilDate born = to_civil(p.birth_date);
    bool before_birthday =
        end.month < born.month || (end.month == born.month && end.day < born.day);
    int age = end.year - born.year - (before_birthday ? 1 : 0);
    os << "Consumer #" << p.consumer_id << ": " << p.display_name << "\n";
    os << "  Gender:     " << (p.gender == 'M' ? "Male" : "Female") << "\n";
    os << "  Born:       " << format_date(p.birth_date) << " (age " << age << " at "
       << format_date(horizon.end) << ")\n";
    os << "  Home:       " << p.home.city << ", " << p.home.state << " " << p.home.zipcode
       << "\n";
    os << "  Occupation: " << p.occupation << "\n";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.0f", p.annual_income);
    os << "  Income:     $" << buf << "/yr\n";
    std::snprintf(buf, sizeof buf, "%.0f", p.fico_score);
    os << "  FICO score: " << buf << "\n";
    os << "  Retires at: " << p.retirement_age << "\n";
    os << "  Cards:      " << card_count << "\n";
    return os.str();
}

}  // namespace cardsim::population
