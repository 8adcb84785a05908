#include "cardsim/simulator.hpp"

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <thread>

#include "json.hpp"

#include "cardsim/engine.hpp"
#include "cardsim/fraud.hpp"
#include "cardsim/iostats.hpp"

namespace cardsim::simulator {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Average bytes per CSV row, used by the dry-run size estimate.
constexpr double kBytesPerRow = 74.0;

world::Catalog load_catalog(const config::RunConfig& cfg) {
    if (cfg.world.catalog_file.empty()) return world::Catalog::embedded();
    std::ifstream in(cfg.world.catalog_file);
    if (!in) throw iostats::IoError("cannot open catalog file " + cfg.world.catalog_file);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return world::Catalog::from_json(text);
}

}  // namespace

std::string Manifest::to_json(const config::RunConfig& cfg) const {
    char hex[32];
    auto hexify = [&](uint64_t v) {
        std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(v));
        return std::string(hex);
    };
    json j;
    j["config_hash"] = hexify(config_hash);
    j["master_seed"] = master_seed;
    j["rows"] = {{"transactions", transaction_rows},
                 {"bios", bio_rows},
                 {"cards", card_rows},
                 {"labels", label_rows}};
    j["dropped_events"] = {{"no_merchant", dropped_no_merchant},
                           {"no_instrument", dropped_no_instrument}};
    j["files"] = {{"transactions", {{"bytes", transactions_bytes},
                                    {"fnv64", hexify(transactions_fnv64)}}},
                  {"bios", {{"fnv64", hexify(bios_fnv64)}}},
                  {"cards", {{"fnv64", hexify(cards_fnv64)}}},
                  {"labels", {{"fnv64", hexify(labels_fnv64)}}}};
    j["elapsed_seconds"] = elapsed_seconds;
    j["resolved_config"] = json::parse(cfg.to_json_text());
    return j.dump(2);
}

Manifest run_generation(const config::RunConfig& cfg) {
    auto errors = cfg.validate();
    if (!errors.empty()) {
        std::string all = "invalid configuration:";
        for (const auto& e : errors) all += "\n  " + e;
        throw population::ConfigError(all);
    }
    auto t0 = std::chrono::steady_clock::now();
    fs::create_directories(cfg.out_dir);

    const population::Horizon horizon = cfg.horizon();

    // Population, cards, world.
    population::PopulationConfig pop_cfg = cfg.population;
    pop_cfg.size = cfg.consumers;
    auto pop = population::generate_population(pop_cfg, cfg.master_seed, horizon);

    std::vector<std::vector<cards::CardAccount>> cards_by_consumer(cfg.consumers);
    std::vector<int> slot_counts(cfg.consumers);
    for (uint32_t i = 0; i < cfg.consumers; ++i) {
        cards_by_consumer[i] =
            cards::issue_cards(pop.profiles[i], cfg.cards, horizon, cfg.master_seed);
        slot_counts[i] = cards::slot_count(cards_by_consumer[i]);
    }

    world::Catalog catalog = load_catalog(cfg);
    world::MerchantWorld w = world::build_world(cfg.world, cfg.master_seed, catalog);

    // Fraudsters and their card compromises.
    auto fraudsters =
        fraud::generate_fraudsters(cfg.fraud, catalog, horizon, cfg.master_seed);
    std::vector<std::vector<fraud::CardCompromise>> compromises(fraudsters.size());
    for (size_t f = 0; f < fraudsters.size(); ++f)
        compromises[f] = fraud::compromise_cards(fraudsters[f], pop.profiles, cards_by_consumer,
                                                 cfg.fraud, cfg.drift, horizon, cfg.master_seed);

    // Sharded event generation into the month-bucketed spill store.
    iostats::SpillStore spill(cfg.out_dir + "/.spill", horizon.start, horizon.end);
    engine::DropCounters drops;
    std::mutex drops_mutex;
    const int workers = cfg.workers;

    auto worker_fn = [&](int wid) {
        engine::ConsumerEngine eng(w, cfg.engine, cfg.drift);
        iostats::SpillStore::Writer writer(spill);
        engine::DropCounters local;
        auto sink = [&](const TransactionEvent& e) { writer.add(e); };

        for (uint32_t i = static_cast<uint32_t>(wid); i < cfg.consumers;
             i += static_cast<uint32_t>(workers)) {
            auto prefs_stream = rng::Stream::derive(
                cfg.master_seed, {rng::PathSeg{"consumer", i + 1, "prefs"}});
            auto prefs =
                world::instantiate_preferences(pop.profiles[i], catalog, prefs_stream);
            eng.simulate_consumer(pop.profiles[i], cards_by_consumer[i], prefs, horizon,
                                  cfg.master_seed, cfg.population.extreme_age_threshold, sink,
                                  local);
            fraud::random_fraud(pop.profiles[i], cards_by_consumer[i], w, cfg.fraud, cfg.drift,
                                horizon, cfg.master_seed, sink);
        }
        for (size_t f = static_cast<size_t>(wid); f < fraudsters.size();
             f += static_cast<size_t>(workers)) {
            for (size_t k = 0; k < compromises[f].size(); ++k)
                fraud::fraudster_transactions(fraudsters[f], compromises[f][k],
                                              static_cast<uint32_t>(k), eng, cfg.fraud,
                                              cfg.master_seed, sink);
        }
        writer.flush();
        std::lock_guard lock(drops_mutex);
        drops += local;
    };

    if (workers == 1) {
        worker_fn(0);
    } else {
        std::vector<std::thread> pool;
        for (int wid = 0; wid < workers; ++wid) pool.emplace_back(worker_fn, wid);
        for (auto& th : pool) th.join();
    }

    // Deterministic merge into the CSV artifacts.
    Manifest m;
    std::string tx_path = cfg.out_dir + (cfg.gzip ? "/transactions.csv.gz" : "/transactions.csv");
    {
        iostats::TransactionCsvWriter tx(tx_path, w, cfg.gzip);
        iostats::LabelsCsvWriter labels(cfg.out_dir + "/labels.csv");
        spill.for_each_sorted([&](const TransactionEvent& e) {
            uint64_t id = tx.write(e);
            if (e.fraudster_id != 0) labels.write(id, e.fraudster_id);
        });
        m.transaction_rows = tx.rows();
        m.label_rows = labels.rows();
    }

    m.bio_rows = iostats::write_bios_csv(cfg.out_dir + "/bios.csv", pop.profiles, slot_counts);
    m.card_rows = iostats::write_cards_csv(cfg.out_dir + "/cards.csv", cards_by_consumer);

    m.config_hash = cfg.config_hash();
    m.master_seed = cfg.master_seed;
    m.dropped_no_merchant = drops.no_merchant;
    m.dropped_no_instrument = drops.no_instrument;
    m.transactions_bytes = fs::file_size(tx_path);
    m.transactions_fnv64 = iostats::fnv1a_file(tx_path);
    m.bios_fnv64 = iostats::fnv1a_file(cfg.out_dir + "/bios.csv");
    m.cards_fnv64 = iostats::fnv1a_file(cfg.out_dir + "/cards.csv");
    m.labels_fnv64 = iostats::fnv1a_file(cfg.out_dir + "/labels.csv");
    m.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::ofstream mf(cfg.out_dir + "/manifest.json");
    mf << m.to_json(cfg) << "\n";
    return m;
}

std::string DryRunEstimate::to_json() const {
    json j;
    j["estimated_rows"] = estimated_rows;
    j["estimated_bytes"] = estimated_bytes;
    j["estimated_gigabytes"] = static_cast<double>(estimated_bytes) / 1e9;
    return j.dump(2);
}

DryRunEstimate dry_run(const config::RunConfig& cfg) {
    auto errors = cfg.validate();
    if (!errors.empty()) throw population::ConfigError(errors.front());
    const population::Horizon horizon = cfg.horizon();

    // Expected active consumer-years from the age pyramid, approximated by
    // sampling entry dates only.
    population::PopulationConfig pop_cfg = cfg.population;
    pop_cfg.size = std::min<uint32_t>(cfg.consumers, 500);
    auto sample = population::generate_population(pop_cfg, cfg.master_seed, horizon);
    double active_years = 0;
    double tpy = 0;
    for (const auto& p : sample.profiles) {
        active_years += std::max(0, horizon.end.days - p.entry_date.days + 1) / 365.25;
        tpy += p.transactions_per_year.indiv_mean;
    }
    active_years *= static_cast<double>(cfg.consumers) / sample.profiles.size();
    tpy /= static_cast<double>(sample.profiles.size());

    double genuine = active_years * tpy;
    double mech2 = active_years * cfg.fraud.random_rate_per_year;
    double horizon_days = horizon.end.days - horizon.start.days + 1;
    double mean_active_days =
        std::min(horizon_days, std::exp((std::log(cfg.fraud.active_min_days) +
                                         std::log(cfg.fraud.active_max_days)) /
                                        2.0));
    double mech1 = cfg.fraud.fraudster_count * (mean_active_days / 30.44) *
                   cfg.fraud.acquisition_rate_per_month * cfg.fraud.burst_mean_events * 0.8;

    DryRunEstimate est;
    est.estimated_rows = static_cast<uint64_t>(genuine + mech2 + mech1);
    est.estimated_bytes = static_cast<uint64_t>(est.estimated_rows * kBytesPerRow);
    return est;
}

}  // namespace cardsim::simulator
