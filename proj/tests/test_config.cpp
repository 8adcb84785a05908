#include "doctest.h"

#include "cardsim/config.hpp"

using namespace cardsim;
using namespace cardsim::config;

TEST_SUITE("config") {

TEST_CASE("defaults are valid and round trip through JSON") {
    auto cfg = RunConfig::defaults();
    CHECK(cfg.validate().empty());
    auto text = cfg.to_json_text();
    auto back = RunConfig::from_json_text(text);
    CHECK(back.to_json_text() == text);
    CHECK(back.config_hash() == cfg.config_hash());
}

TEST_CASE("overrides merge over the defaults") {
    auto cfg = RunConfig::from_json_text(R"({
        "master_seed": 7,
        "consumers": 123,
        "population": {"attributes": {"fico_score": {"mean": 700, "std": 50}}},
        "drift": {"online_start_year": 1996},
        "fraud": {"fraudster_count": 2}
    })");
    CHECK(cfg.master_seed == 7);
    CHECK(cfg.consumers == 123);
    CHECK(cfg.population.size == 123);
    CHECK(cfg.population.attributes.fico_score.mean == 700);
    CHECK(cfg.population.attributes.annual_income.mean == 62000);  // untouched default
    CHECK(cfg.drift.online_start_year == 1996);
    CHECK(cfg.fraud.fraudster_count == 2);
    CHECK(cfg.end_year == 2020);
}

TEST_CASE("unknown keys and bad JSON are config errors") {
    CHECK_THROWS_WITH_AS(RunConfig::from_json_text(R"({"master_sed": 7})"),
                         doctest::Contains("master_sed"), population::ConfigError);
    CHECK_THROWS_WITH_AS(RunConfig::from_json_text(R"({"population": {"nope": 1}})"),
                         doctest::Contains("population.nope"), population::ConfigError);
    CHECK_THROWS_AS(RunConfig::from_json_text("{ not json"), population::ConfigError);
}

TEST_CASE("validation lists every problem with its field path") {
    auto cfg = RunConfig::defaults();
    cfg.consumers = 0;
    cfg.end_year = 1980;
    cfg.engine.cash_probability = 2.0;
    cfg.fraud.active_min_days = -1;
    cfg.population.gender_male_share = 9;
    auto errors = cfg.validate();
    CHECK(errors.size() >= 5);
    auto has = [&](const char* needle) {
        for (const auto& e : errors)
            if (e.find(needle) != std::string::npos) return true;
        return false;
    };
    CHECK(has("consumers"));
    CHECK(has("end_year"));
    CHECK(has("engine.cash_probability"));
    CHECK(has("fraud.active_min_days"));
    CHECK(has("population.gender_male_share"));
}

TEST_CASE("a manifest reproduces its run configuration") {
    auto cfg = RunConfig::defaults();
    cfg.master_seed = 99;
    cfg.consumers = 55;
    std::string manifest = R"({"resolved_config": )" + cfg.to_json_text() + "}";
    // Manifests wrap the resolved config; loading one gives the same config.
    auto back = RunConfig::from_json_text(manifest);
    CHECK(back.config_hash() == cfg.config_hash());
}

TEST_CASE("calibration targets parse") {
    auto cfg = RunConfig::from_json_text(R"({
        "calibration": [{"metric": "bio.fico_score.mean", "target": 712, "tolerance": 5}]
    })");
    REQUIRE(cfg.calibration.size() == 1);
    CHECK(cfg.calibration[0].metric == "bio.fico_score.mean");
    CHECK(cfg.calibration[0].tolerance == 5);
}

}  // TEST_SUITE
