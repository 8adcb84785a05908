#pragma once

#include <string>

#include "cardsim/config.hpp"

namespace cardsim::simulator {

struct Manifest {
    uint64_t config_hash = 0;
    uint64_t master_seed = 0;
    uint64_t transaction_rows = 0;
    uint64_t bio_rows = 0;
    uint64_t card_rows = 0;
    uint64_t label_rows = 0;
    uint64_t dropped_no_merchant = 0;
    uint64_t dropped_no_instrument = 0;
    uint64_t transactions_bytes = 0;
    uint64_t transactions_fnv64 = 0;
    uint64_t bios_fnv64 = 0;
    uint64_t cards_fnv64 = 0;
    uint64_t labels_fnv64 = 0;
    double elapsed_seconds = 0;
    std::string to_json(const config::RunConfig& cfg) const;
};

// Full pipeline: population, cards, world, fraud, sharded simulation, merge,
// CSV artifacts, manifest written to <out_dir>/manifest.json.
Manifest run_generation(const config::RunConfig& cfg);

struct DryRunEstimate {
    uint64_t estimated_rows = 0;
    uint64_t estimated_bytes = 0;
    std::string to_json() const;
};

// Row/size estimate without generating anything.
DryRunEstimate dry_run(const config::RunConfig& cfg);

}  // namespace cardsim::simulator
