#include "doctest.h"

#include <cmath>
#include <map>
#include <numeric>

#include "cardsim/population.hpp"

using namespace cardsim;
using namespace cardsim::population;

namespace {

const Horizon kHorizon{make_date(1985, 1, 1), make_date(2020, 12, 31)};

double col_mean(const std::vector<double>& v) {
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double col_std(const std::vector<double>& v) {
    double m = col_mean(v);
    double s = 0;
    for (double x : v) s += (x - m) * (x - m);
    return std::sqrt(s / static_cast<double>(v.size() - 1));
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    double mx = col_mean(x), my = col_mean(y);
    double sxy = 0, sxx = 0, syy = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    return sxy / std::sqrt(sxx * syy);
}

double spearman(const std::vector<double>& x, const std::vector<double>& y) {
    auto ranks = [](const std::vector<double>& v) {
        std::vector<size_t> order(v.size());
        std::iota(order.begin(), order.end(), size_t{0});
        std::sort(order.begin(), order.end(),
                  [&](size_t a, size_t b) { return v[a] < v[b] || (v[a] == v[b] && a < b); });
        std::vector<double> r(v.size());
        for (size_t k = 0; k < order.size(); ++k) r[order[k]] = static_cast<double>(k);
        return r;
    };
    return pearson(ranks(x), ranks(y));
}

}  // namespace

TEST_SUITE("population") {

TEST_CASE("single consumer satisfies profile invariants") {
    auto cfg = PopulationConfig::with_default_correlations();
    cfg.size = 1;
    auto res = generate_population(cfg, 7, kHorizon);
    REQUIRE(res.profiles.size() == 1);
    const auto& p = res.profiles[0];
    CHECK(p.consumer_id == 1);
    CHECK(p.fico_score >= 300);
    CHECK(p.fico_score <= 850);
    CHECK(p.annual_income > 0);
    CHECK(!p.home.city.empty());
    CHECK(!p.home.state.empty());
    CHECK(p.entry_date >= kHorizon.start);
    CHECK(p.entry_date >= birthday(p.birth_date, 18));
    CHECK(!p.display_name.empty());
}

TEST_CASE("FICO mean and gender split at n=2000") {
    auto cfg = PopulationConfig::with_default_correlations();
    cfg.size = 2000;
    auto res = generate_population(cfg, 42, kHorizon);
    std::vector<double> fico;
    int males = 0;
    for (const auto& p : res.profiles) {
        fico.push_back(p.fico_score);
        males += p.gender == 'M';
    }
    // 4 standard errors: 4*60/sqrt(2000) = 5.37
    CHECK(std::abs(col_mean(fico) - 712.0) < 5.37);
    // 4 binomial SE: 4*0.5/sqrt(2000) = 0.045
    CHECK(std::abs(males / 2000.0 - 0.5) < 0.045);
}

TEST_CASE("attribute moments match config within 4 standard errors") {
    auto cfg = PopulationConfig::with_default_correlations();
    cfg.size = 4000;
    auto res = generate_population(cfg, 99, kHorizon);
    const double n = 4000;

    auto check_attr = [&](const char* name, const rng::PopulationDistribution& d,
                          auto getter) {
        std::vector<double> v;
        v.reserve(res.profiles.size());
        for (const auto& p : res.profiles) v.push_back(getter(p));
        double se_mean = d.std_dev / std::sqrt(n);
        INFO(name);
        CHECK(std::abs(col_mean(v) - d.mean) < 4 * se_mean + 1e-9);
        // Column std carries the between-individual share of the variance.
        double target_std = std::sqrt(d.spread_fraction) * d.std_dev;
        CHECK(std::abs(col_std(v) - target_std) < 4 * target_std / std::sqrt(2 * n) + 0.02 * target_std);
    };
    const auto& a = cfg.attributes;
    check_attr("annual_income", a.annual_income,
               [](const ConsumerProfile& p) { return p.annual_income; });
    check_attr("debt_fraction", a.debt_fraction_of_income,
               [](const ConsumerProfile& p) { return p.debt_fraction_of_income; });
    check_attr("credit_limit", a.credit_limit,
               [](const ConsumerProfile& p) { return p.credit_limit; });
    check_attr("years_account_open", a.years_account_open,
               [](const ConsumerProfile& p) { return p.years_account_open; });
    check_attr("tpy_mean", a.transactions_per_year,
               [](const ConsumerProfile& p) { return p.transactions_per_year.indiv_mean; });
    check_attr("vacations", a.mean_annual_vacations,
               [](const ConsumerProfile& p) { return p.travel.annual_vacations; });
    check_attr("getaways", a.mean_annual_weekend_getaways,
               [](const ConsumerProfile& p) { return p.travel.annual_weekend_getaways; });
    check_attr("business_trips", a.mean_annual_business_trips,
               [](const ConsumerProfile& p) { return p.travel.annual_business_trips; });

    CHECK(res.fico_clamp_count / n < 0.02);
}

TEST_CASE("correlations imposed and income couplings hold") {
    auto cfg = PopulationConfig::with_default_correlations();
    cfg.size = 3000;
    auto res = generate_population(cfg, 11, kHorizon);
    std::vector<double> income, limit, fico, debt, p_vac;
    for (const auto& p : res.profiles) {
        income.push_back(p.annual_income);
        limit.push_back(p.credit_limit);
        fico.push_back(p.fico_score);
        debt.push_back(p.debt_fraction_of_income);
        p_vac.push_back(p.travel.p_foreign_vacation);
    }
    // Clamping perturbs the imposed correlation slightly; 0.05 band per spec.
    CHECK(std::abs(pearson(income, limit) - 0.55) < 0.05);
    CHECK(std::abs(pearson(income, fico) - 0.30) < 0.05);
    CHECK(std::abs(pearson(fico, debt) + 0.25) < 0.05);
    CHECK(spearman(income, p_vac) > 0.2);
}

TEST_CASE("assign_geography follows table weights") {
    GeoTable single({{"Onlytown", "TX", "75000", 32.0, -96.0, 10.0}});
    auto s = rng::Stream::derive(3, {rng::PathSeg{"test", 0, "geo1"}});
    for (int i = 0; i < 20; ++i) CHECK(assign_geography(s, single).city == "Onlytown");

    GeoTable two({{"Big", "TX", "75000", 32.0, -96.0, 9.0},
                  {"Small", "OK", "73000", 35.0, -97.0, 1.0}});
    int big = 0;
    const int n = 10000;
    for (int i = 0; i < n; ++i) big += assign_geography(s, two).city == "Big";
    CHECK(std::abs(big / static_cast<double>(n) - 0.9) < 0.012);

    CHECK_THROWS_AS(GeoTable({}), ConfigError);
}

TEST_CASE("full geo table state shares within 4 SE") {
    const GeoTable& table = GeoTable::embedded();
    auto s = rng::Stream::derive(5, {rng::PathSeg{"test", 0, "geofull"}});
    const int n = 100000;
    std::map<std::string, int> counts;
    for (int i = 0; i < n; ++i) counts[assign_geography(s, table).state]++;
    std::map<std::string, double> shares;
    for (const auto& p : table.places()) shares.emplace(p.state, table.weight_share(p.state));
    for (const auto& [state, share] : shares) {
        double se = std::sqrt(share * (1 - share) / n);
        INFO(state);
        CHECK(std::abs(counts[state] / static_cast<double>(n) - share) <= 4 * se + 1e-12);
    }
}

TEST_CASE("lifecycle event date arithmetic") {
    ConsumerProfile p;
    p.consumer_id = 1;
    p.retirement_age = 65;

    p.birth_date = make_date(1990, 6, 15);
    auto ev = lifecycle_events(p, kHorizon, 85);
    REQUIRE(ev.size() == 1);
    CHECK(ev[0].kind == LifecycleKind::Enter18);
    CHECK(year_of(ev[0].effective_date) == 2008);

    p.birth_date = make_date(1950, 3, 1);
    ev = lifecycle_events(p, kHorizon, 85);
    REQUIRE(ev.size() == 1);
    CHECK(ev[0].kind == LifecycleKind::Retire);
    CHECK(year_of(ev[0].effective_date) == 2015);

    // Born 1920: retires at 65 in 1985 (inside the horizon) and crosses the
    // extreme-age threshold in 2005; events come out chronologically.
    p.birth_date = make_date(1920, 7, 4);
    ev = lifecycle_events(p, kHorizon, 85);
    REQUIRE(ev.size() == 2);
    CHECK(ev[0].kind == LifecycleKind::Retire);
    CHECK(year_of(ev[0].effective_date) == 1985);
    CHECK(ev[1].kind == LifecycleKind::ExtremeAge);
    CHECK(year_of(ev[1].effective_date) == 2005);
}

TEST_CASE("config validation reports all errors with field paths") {
    PopulationConfig cfg;
    cfg.size = 0;
    cfg.gender_male_share = 1.5;
    cfg.attributes.fico_score.std_dev = -1;
    cfg.correlations.push_back({"annual_income", "no_such_attribute", 0.5});
    std::vector<std::string> errors;
    cfg.validate(errors, "population.");
    CHECK(errors.size() >= 4);
    bool saw_size = false, saw_unknown = false;
    for (const auto& e : errors) {
        if (e.find("population.size") != std::string::npos) saw_size = true;
        if (e.find("no_such_attribute") != std::string::npos) saw_unknown = true;
    }
    CHECK(saw_size);
    CHECK(saw_unknown);
}

TEST_CASE("bio card renders") {
    auto cfg = PopulationConfig::with_default_correlations();
    cfg.size = 2;
    auto res = generate_population(cfg, 21, kHorizon);
    std::string card = format_bio_card(res.profiles[0], 3, kHorizon);
    CHECK(card.find(res.profiles[0].display_name) != std::string::npos);
    CHECK(card.find("FICO") != std::string::npos);
    CHECK(card.find("Cards:      3") != std::string::npos);
}

}  // TEST_SUITE
