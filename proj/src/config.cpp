#include "cardsim/config.hpp"

#include <fstream>

#include "json.hpp"

namespace cardsim::config {

using nlohmann::json;
using population::ConfigError;

namespace {

void check_keys(const json& j, std::initializer_list<const char*> allowed,
                const std::string& where) {
    for (const auto& [key, _] : j.items()) {
        bool ok = false;
        for (const char* a : allowed)
            if (key == a) ok = true;
        if (!ok) throw ConfigError("unknown config key '" + where + key + "'");
    }
}

rng::PopulationDistribution dist_from(const json& j, const std::string& where) {
    check_keys(j, {"mean", "std", "spread_fraction"}, where + ".");
    rng::PopulationDistribution d;
    d.mean = j.value("mean", 0.0);
    d.std_dev = j.value("std", 0.0);
    d.spread_fraction = j.value("spread_fraction", 1.0);
    return d;
}

json dist_to(const rng::PopulationDistribution& d) {
    return {{"mean", d.mean}, {"std", d.std_dev}, {"spread_fraction", d.spread_fraction}};
}

std::vector<std::pair<double, double>> knots_from(const json& j, const std::string& where) {
    std::vector<std::pair<double, double>> out;
    for (const auto& k : j) {
        if (!k.is_array() || k.size() != 2)
            throw ConfigError(where + ": knots must be [x, y] pairs");
        out.push_back({k.at(0).get<double>(), k.at(1).get<double>()});
    }
    return out;
}

json knots_to(const std::vector<std::pair<double, double>>& knots) {
    json out = json::array();
    for (const auto& [x, y] : knots) out.push_back({x, y});
    return out;
}

struct AttrField {
    const char* name;
    rng::PopulationDistribution population::AttributeSet::*member;
};

const AttrField kAttrFields[] = {
    {"cards_per_consumer", &population::AttributeSet::cards_per_consumer},
    {"cards_per_account", &population::AttributeSet::cards_per_account},
    {"transactions_per_year", &population::AttributeSet::transactions_per_year},
    {"fico_score", &population::AttributeSet::fico_score},
    {"annual_income", &population::AttributeSet::annual_income},
    {"debt_fraction_of_income", &population::AttributeSet::debt_fraction_of_income},
    {"credit_limit", &population::AttributeSet::credit_limit},
    {"balance_fraction_of_limit", &population::AttributeSet::balance_fraction_of_limit},
    {"years_account_open", &population::AttributeSet::years_account_open},
    {"years_since_pin_change", &population::AttributeSet::years_since_pin_change},
    {"mean_annual_weekend_getaways", &population::AttributeSet::mean_annual_weekend_getaways},
    {"mean_annual_vacations", &population::AttributeSet::mean_annual_vacations},
    {"mean_vacation_duration", &population::AttributeSet::mean_vacation_duration},
    {"mean_annual_business_trips", &population::AttributeSet::mean_annual_business_trips},
    {"mean_business_trip_duration", &population::AttributeSet::mean_business_trip_duration},
    {"p_foreign_weekend_getaway", &population::AttributeSet::p_foreign_weekend_getaway},
    {"p_foreign_vacation", &population::AttributeSet::p_foreign_vacation},
    {"p_foreign_business_trip", &population::AttributeSet::p_foreign_business_trip},
};

void population_from(const json& j, population::PopulationConfig& cfg) {
    check_keys(j,
               {"gender_male_share", "age_pyramid_knots", "retirement_age",
                "extreme_age_threshold", "attributes", "correlations", "income_couplings",
                "geo_table"},
               "population.");
    cfg.gender_male_share = j.value("gender_male_share", cfg.gender_male_share);
    if (j.contains("age_pyramid_knots"))
        cfg.age_pyramid_knots = knots_from(j.at("age_pyramid_knots"), "population.age_pyramid_knots");
    if (j.contains("retirement_age"))
        cfg.retirement_age = dist_from(j.at("retirement_age"), "population.retirement_age");
    cfg.extreme_age_threshold = j.value("extreme_age_threshold", cfg.extreme_age_threshold);
    if (j.contains("attributes")) {
        const json& a = j.at("attributes");
        for (const auto& [key, value] : a.items()) {
            bool known = false;
            for (const auto& f : kAttrFields) {
                if (key == f.name) {
                    cfg.attributes.*(f.member) =
                        dist_from(value, "population.attributes." + key);
                    known = true;
                }
            }
            if (!known)
                throw ConfigError("unknown config key 'population.attributes." + key + "'");
        }
    }
    if (j.contains("correlations")) {
        cfg.correlations.clear();
        for (const auto& t : j.at("correlations")) {
            if (!t.is_array() || t.size() != 3)
                throw ConfigError("population.correlations entries must be [a, b, rho]");
            cfg.correlations.push_back({t.at(0).get<std::string>(), t.at(1).get<std::string>(),
                                        t.at(2).get<double>()});
        }
    }
    if (j.contains("income_couplings")) {
        cfg.income_couplings.clear();
        for (const auto& [key, value] : j.at("income_couplings").items())
            cfg.income_couplings.push_back({key, value.get<double>()});
    }
    if (j.contains("geo_table")) {
        cfg.geo_table_override.clear();
        for (const auto& p : j.at("geo_table")) {
            cfg.geo_table_override.push_back(
                {p.at("city").get<std::string>(), p.at("state").get<std::string>(),
                 p.at("zip").get<std::string>(), p.at("lat").get<double>(),
                 p.at("lon").get<double>(), p.at("weight").get<double>()});
        }
    }
}

json population_to(const population::PopulationConfig& cfg) {
    json j;
    j["gender_male_share"] = cfg.gender_male_share;
    j["age_pyramid_knots"] = knots_to(cfg.age_pyramid_knots);
    j["retirement_age"] = dist_to(cfg.retirement_age);
    j["extreme_age_threshold"] = cfg.extreme_age_threshold;
    json attrs;
    for (const auto& f : kAttrFields) attrs[f.name] = dist_to(cfg.attributes.*(f.member));
    j["attributes"] = attrs;
    json corrs = json::array();
    for (const auto& t : cfg.correlations) corrs.push_back({t.a, t.b, t.rho});
    j["correlations"] = corrs;
    json coup;
    for (const auto& c : cfg.income_couplings) coup[c.attribute] = c.strength;
    j["income_couplings"] = coup;
    if (!cfg.geo_table_override.empty()) {
        json gt = json::array();
        for (const auto& p : cfg.geo_table_override)
            gt.push_back({{"city", p.city},
                          {"state", p.state},
                          {"zip", p.zip},
                          {"lat", p.lat},
                          {"lon", p.lon},
                          {"weight", p.weight}});
        j["geo_table"] = gt;
    }
    return j;
}

}  // namespace

RunConfig RunConfig::defaults() {
    RunConfig cfg;
    cfg.calibration = {
        {"bio.fico_score.mean", 712.0, 5.0},
        {"bio.male_share", 0.50, 0.045},
        {"bio.annual_income.mean", 62000.0, 2200.0},
        {"bio.mean_annual_vacations.mean", 1.6, 0.05},
        {"cards.per_consumer.mean", 3.0, 0.12},
        {"tx.annual_per_consumer.mean", 430.0, 16.0},
        {"fraud.online_share_2016plus", 0.70, 0.03},
        {"fraud.share", 0.0011, 0.0005},
    };
    return cfg;
}

RunConfig RunConfig::from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    RunConfig cfg = defaults();
    check_keys(j,
               {"master_seed", "consumers", "start_year", "end_year", "workers", "out_dir",
                "gzip", "population", "cards", "world", "engine", "drift", "fraud",
                "calibration", "resolved_config"},
               "");
    // Manifests embed the config under resolved_config; accept them directly.
    if (j.contains("resolved_config")) return from_json_text(j.at("resolved_config").dump());

    cfg.master_seed = j.value("master_seed", cfg.master_seed);
    cfg.consumers = j.value("consumers", cfg.consumers);
    cfg.start_year = j.value("start_year", cfg.start_year);
    cfg.end_year = j.value("end_year", cfg.end_year);
    cfg.workers = j.value("workers", cfg.workers);
    cfg.out_dir = j.value("out_dir", cfg.out_dir);
    cfg.gzip = j.value("gzip", cfg.gzip);

    if (j.contains("population")) population_from(j.at("population"), cfg.population);
    cfg.population.size = cfg.consumers;

    if (j.contains("cards")) {
        const json& c = j.at("cards");
        check_keys(c,
                   {"credit_share", "debit_share", "prepaid_share", "chip_intro_year",
                    "chip_ramp_years", "card_life_years_mean", "card_life_years_std",
                    "prepaid_load_mean", "prepaid_load_std"},
                   "cards.");
        cfg.cards.credit_share = c.value("credit_share", cfg.cards.credit_share);
        cfg.cards.debit_share = c.value("debit_share", cfg.cards.debit_share);
        cfg.cards.prepaid_share = c.value("prepaid_share", cfg.cards.prepaid_share);
        cfg.cards.chip_intro_year = c.value("chip_intro_year", cfg.cards.chip_intro_year);
        cfg.cards.chip_ramp_years = c.value("chip_ramp_years", cfg.cards.chip_ramp_years);
        cfg.cards.card_life_years_mean =
            c.value("card_life_years_mean", cfg.cards.card_life_years_mean);
        cfg.cards.card_life_years_std =
            c.value("card_life_years_std", cfg.cards.card_life_years_std);
        cfg.cards.prepaid_load_mean = c.value("prepaid_load_mean", cfg.cards.prepaid_load_mean);
        cfg.cards.prepaid_load_std = c.value("prepaid_load_std", cfg.cards.prepaid_load_std);
    }
    if (j.contains("world")) {
        const json& w = j.at("world");
        check_keys(w,
                   {"total_locations", "multinational_count", "min_multinational_locations",
                    "us_location_share", "multinational_location_share",
                    "multinational_online_probability", "local_online_probability",
                    "min_countries", "catalog_file"},
                   "world.");
        cfg.world.total_locations = w.value("total_locations", cfg.world.total_locations);
        cfg.world.multinational_count =
            w.value("multinational_count", cfg.world.multinational_count);
        cfg.world.min_multinational_locations =
            w.value("min_multinational_locations", cfg.world.min_multinational_locations);
        cfg.world.us_location_share = w.value("us_location_share", cfg.world.us_location_share);
        cfg.world.multinational_location_share =
            w.value("multinational_location_share", cfg.world.multinational_location_share);
        cfg.world.multinational_online_probability = w.value(
            "multinational_online_probability", cfg.world.multinational_online_probability);
        cfg.world.local_online_probability =
            w.value("local_online_probability", cfg.world.local_online_probability);
        cfg.world.min_countries = w.value("min_countries", cfg.world.min_countries);
        cfg.world.catalog_file = w.value("catalog_file", cfg.world.catalog_file);
    }
    if (j.contains("engine")) {
        const json& e = j.at("engine");
        check_keys(e,
                   {"cash_threshold_usd", "cash_probability", "favorite_multiplier", "nearby_k",
                    "max_radius_km", "distance_decay_power", "distance_decay_offset_km",
                    "retirement_rate_multiplier", "retirement_weekday_flattening",
                    "extreme_age_rate_multiplier", "trip_duration_std_fraction",
                    "retirement_item_multipliers"},
                   "engine.");
        cfg.engine.cash_threshold_usd = e.value("cash_threshold_usd", cfg.engine.cash_threshold_usd);
        cfg.engine.cash_probability = e.value("cash_probability", cfg.engine.cash_probability);
        cfg.engine.favorite_multiplier =
            e.value("favorite_multiplier", cfg.engine.favorite_multiplier);
        cfg.engine.nearby_k = e.value("nearby_k", cfg.engine.nearby_k);
        cfg.engine.max_radius_km = e.value("max_radius_km", cfg.engine.max_radius_km);
        cfg.engine.distance_decay_power =
            e.value("distance_decay_power", cfg.engine.distance_decay_power);
        cfg.engine.distance_decay_offset_km =
            e.value("distance_decay_offset_km", cfg.engine.distance_decay_offset_km);
        cfg.engine.retirement_rate_multiplier =
            e.value("retirement_rate_multiplier", cfg.engine.retirement_rate_multiplier);
        cfg.engine.retirement_weekday_flattening =
            e.value("retirement_weekday_flattening", cfg.engine.retirement_weekday_flattening);
        cfg.engine.extreme_age_rate_multiplier =
            e.value("extreme_age_rate_multiplier", cfg.engine.extreme_age_rate_multiplier);
        cfg.engine.trip_duration_std_fraction =
            e.value("trip_duration_std_fraction", cfg.engine.trip_duration_std_fraction);
        if (e.contains("retirement_item_multipliers")) {
            cfg.engine.retirement_item_multipliers.clear();
            for (const auto& [key, value] : e.at("retirement_item_multipliers").items())
                cfg.engine.retirement_item_multipliers.push_back({key, value.get<double>()});
        }
    }
    if (j.contains("drift")) {
        const json& d = j.at("drift");
        check_keys(d, {"online_start_year", "online_share_knots", "fraud_online_share_knots"},
                   "drift.");
        cfg.drift.online_start_year = d.value("online_start_year", cfg.drift.online_start_year);
        if (d.contains("online_share_knots"))
            cfg.drift.online_share_knots =
                knots_from(d.at("online_share_knots"), "drift.online_share_knots");
        if (d.contains("fraud_online_share_knots"))
            cfg.drift.fraud_online_share_knots =
                knots_from(d.at("fraud_online_share_knots"), "drift.fraud_online_share_knots");
    }
    if (j.contains("fraud")) {
        const json& f = j.at("fraud");
        check_keys(f,
                   {"fraudster_count", "active_min_days", "active_max_days",
                    "acquisition_rate_per_month", "burst_mean_events",
                    "burst_spacing_days_mean", "amount_multiplier", "pre_online_locality_km",
                    "fraudster_income", "random_rate_per_year", "random_amount_median",
                    "random_amount_log_std"},
                   "fraud.");
        cfg.fraud.fraudster_count = f.value("fraudster_count", cfg.fraud.fraudster_count);
        cfg.fraud.active_min_days = f.value("active_min_days", cfg.fraud.active_min_days);
        cfg.fraud.active_max_days = f.value("active_max_days", cfg.fraud.active_max_days);
        cfg.fraud.acquisition_rate_per_month =
            f.value("acquisition_rate_per_month", cfg.fraud.acquisition_rate_per_month);
        cfg.fraud.burst_mean_events = f.value("burst_mean_events", cfg.fraud.burst_mean_events);
        cfg.fraud.burst_spacing_days_mean =
            f.value("burst_spacing_days_mean", cfg.fraud.burst_spacing_days_mean);
        cfg.fraud.amount_multiplier = f.value("amount_multiplier", cfg.fraud.amount_multiplier);
        cfg.fraud.pre_online_locality_km =
            f.value("pre_online_locality_km", cfg.fraud.pre_online_locality_km);
        if (f.contains("fraudster_income"))
            cfg.fraud.fraudster_income = dist_from(f.at("fraudster_income"), "fraud.fraudster_income");
        cfg.fraud.random_rate_per_year =
            f.value("random_rate_per_year", cfg.fraud.random_rate_per_year);
        cfg.fraud.random_amount_median =
            f.value("random_amount_median", cfg.fraud.random_amount_median);
        cfg.fraud.random_amount_log_std =
            f.value("random_amount_log_std", cfg.fraud.random_amount_log_std);
    }
    if (j.contains("calibration")) {
        cfg.calibration.clear();
        for (const auto& t : j.at("calibration")) {
            check_keys(t, {"metric", "target", "tolerance"}, "calibration.");
            cfg.calibration.push_back({t.at("metric").get<std::string>(),
                                       t.at("target").get<double>(),
                                       t.at("tolerance").get<double>()});
        }
    }
    return cfg;
}

std::string RunConfig::to_json_text() const {
    json j;
    j["master_seed"] = master_seed;
    j["consumers"] = consumers;
    j["start_year"] = start_year;
    j["end_year"] = end_year;
    j["workers"] = workers;
    j["out_dir"] = out_dir;
    j["gzip"] = gzip;
    j["population"] = population_to(population);
    j["cards"] = {{"credit_share", cards.credit_share},
                  {"debit_share", cards.debit_share},
                  {"prepaid_share", cards.prepaid_share},
                  {"chip_intro_year", cards.chip_intro_year},
                  {"chip_ramp_years", cards.chip_ramp_years},
                  {"card_life_years_mean", cards.card_life_years_mean},
                  {"card_life_years_std", cards.card_life_years_std},
                  {"prepaid_load_mean", cards.prepaid_load_mean},
                  {"prepaid_load_std", cards.prepaid_load_std}};
    j["world"] = {{"total_locations", world.total_locations},
                  {"multinational_count", world.multinational_count},
                  {"min_multinational_locations", world.min_multinational_locations},
                  {"us_location_share", world.us_location_share},
                  {"multinational_location_share", world.multinational_location_share},
                  {"multinational_online_probability", world.multinational_online_probability},
                  {"local_online_probability", world.local_online_probability},
                  {"min_countries", world.min_countries},
                  {"catalog_file", world.catalog_file}};
    json retirement;
    for (const auto& m : engine.retirement_item_multipliers)
        retirement[m.item_name] = m.multiplier;
    j["engine"] = {{"cash_threshold_usd", engine.cash_threshold_usd},
                   {"cash_probability", engine.cash_probability},
                   {"favorite_multiplier", engine.favorite_multiplier},
                   {"nearby_k", engine.nearby_k},
                   {"max_radius_km", engine.max_radius_km},
                   {"distance_decay_power", engine.distance_decay_power},
                   {"distance_decay_offset_km", engine.distance_decay_offset_km},
                   {"retirement_rate_multiplier", engine.retirement_rate_multiplier},
                   {"retirement_weekday_flattening", engine.retirement_weekday_flattening},
                   {"extreme_age_rate_multiplier", engine.extreme_age_rate_multiplier},
                   {"trip_duration_std_fraction", engine.trip_duration_std_fraction},
                   {"retirement_item_multipliers", retirement}};
    j["drift"] = {{"online_start_year", drift.online_start_year},
                  {"online_share_knots", knots_to(drift.online_share_knots)},
                  {"fraud_online_share_knots", knots_to(drift.fraud_online_share_knots)}};
    j["fraud"] = {{"fraudster_count", fraud.fraudster_count},
                  {"active_min_days", fraud.active_min_days},
                  {"active_max_days", fraud.active_max_days},
                  {"acquisition_rate_per_month", fraud.acquisition_rate_per_month},
                  {"burst_mean_events", fraud.burst_mean_events},
                  {"burst_spacing_days_mean", fraud.burst_spacing_days_mean},
                  {"amount_multiplier", fraud.amount_multiplier},
                  {"pre_online_locality_km", fraud.pre_online_locality_km},
                  {"fraudster_income", dist_to(fraud.fraudster_income)},
                  {"random_rate_per_year", fraud.random_rate_per_year},
                  {"random_amount_median", fraud.random_amount_median},
                  {"random_amount_log_std", fraud.random_amount_log_std}};
    json cal = json::array();
    for (const auto& t : calibration)
        cal.push_back(
            {{"metric", t.metric}, {"target", t.target}, {"tolerance", t.tolerance}});
    j["calibration"] = cal;
    return j.dump(2);
}

std::vector<std::string> RunConfig::validate() const {
    std::vector<std::string> errors;
    if (consumers < 1) errors.push_back("consumers: must be >= 1");
    if (end_year < start_year) errors.push_back("end_year: must be >= start_year");
    if (workers < 1 || workers > 256) errors.push_back("workers: must be in [1, 256]");
    if (out_dir.empty()) errors.push_back("out_dir: must not be empty");
    population::PopulationConfig pop = population;
    pop.size = consumers;
    pop.validate(errors, "population.");
    cards.validate(errors, "cards.");
    world.validate(errors, "world.");
    engine.validate(errors, "engine.");
    drift.validate(errors, "drift.");
    fraud.validate(errors, "fraud.");
    return errors;
}

uint64_t RunConfig::config_hash() const {
    std::string text = to_json_text();
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

}  // namespace cardsim::config
