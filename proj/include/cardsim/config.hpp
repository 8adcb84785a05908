#pragma once

#include <string>
#include <vector>

#include "cardsim/cards.hpp"
#include "cardsim/engine.hpp"
#include "cardsim/fraud.hpp"
#include "cardsim/iostats.hpp"
#include "cardsim/population.hpp"
#include "cardsim/world.hpp"

namespace cardsim::config {

// Everything one run needs: seed, scale, horizon, sub-module configs, and
// the calibration target set.
struct RunConfig {
    uint64_t master_seed = 42;
    uint32_t consumers = 2000;
    int start_year = 1985;
    int end_year = 2020;
    int workers = 1;
    std::string out_dir = "out";
    bool gzip = false;

    population::PopulationConfig population =
        population::PopulationConfig::with_default_correlations();
    cards::CardsConfig cards;
    world::WorldConfig world;
    engine::EngineConfig engine;
    engine::DriftSchedule drift;
    fraud::FraudConfig fraud;
    std::vector<iostats::CalibrationTarget> calibration;

    population::Horizon horizon() const {
        return {make_date(start_year, 1, 1), make_date(end_year, 12, 31)};
    }

    static RunConfig defaults();
    // Parses JSON over the defaults; unknown keys are config errors.
    static RunConfig from_json_text(const std::string& text);
    std::string to_json_text() const;  // canonical resolved form
    // All validation errors with field paths; empty means valid.
    std::vector<std::string> validate() const;
    uint64_t config_hash() const;
};

}  // namespace cardsim::config
