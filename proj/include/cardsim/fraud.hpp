#pragma once

#include <functional>
#include <vector>

#include "cardsim/cards.hpp"
#include "cardsim/engine.hpp"
#include "cardsim/events.hpp"
#include "cardsim/population.hpp"
#include "cardsim/world.hpp"

namespace cardsim::fraud {

struct FraudConfig {
    // Mechanism 1: fraudster agents working compromised cards.
    uint32_t fraudster_count = 12;
    double active_min_days = 90;
    double active_max_days = 1825;  // months to years
    double acquisition_rate_per_month = 2.0;
    double burst_mean_events = 8.0;
    double burst_spacing_days_mean = 2.0;
    double amount_multiplier = 1.8;
    double pre_online_locality_km = 150.0;
    rng::PopulationDistribution fraudster_income{52000.0, 18000.0, 1.0};

    // Mechanism 2: random injections per consumer.
    double random_rate_per_year = 0.25;
    double random_amount_median = 130.0;
    double random_amount_log_std = 0.9;

    void validate(std::vector<std::string>& errors, const std::string& prefix) const;
};

// A fraudster agent: lives somewhere, works a schedule, prefers certain
// goods, and is active for a bounded interval.
struct Fraudster {
    uint32_t fraudster_id = 0;  // 1-based; 0 means "no fraudster"
    population::HomeLocation base;
    double income = 50000;
    world::PreferenceTable prefs;
    double day_of_week_weights[7] = {1, 1, 1, 1, 1, 1, 1};
    double segment_weights[3] = {1, 1, 1};
    Date active_start{};
    Date active_end{};
};

struct CardCompromise {
    uint32_t fraudster_id = 0;
    uint32_t consumer_id = 0;
    const cards::CardAccount* card = nullptr;
    Date compromise_date{};
    bool exhausted = false;
};

std::vector<Fraudster> generate_fraudsters(const FraudConfig& cfg, const world::Catalog& catalog,
                                           const population::Horizon& horizon,
                                           uint64_t master_seed);

// Victim cards sampled across the whole population at the acquisition rate;
// pre-online-era picks are biased toward the fraudster's neighborhood.
std::vector<CardCompromise> compromise_cards(
    const Fraudster& fraudster, const std::vector<population::ConsumerProfile>& consumers,
    const std::vector<std::vector<cards::CardAccount>>& cards_by_consumer,
    const FraudConfig& cfg, const engine::DriftSchedule& drift,
    const population::Horizon& horizon, uint64_t master_seed);

// Mechanism-1 events for one compromise: the fraudster's schedule and
// preferences, era-dependent online share, within card validity.
// compromise_ordinal distinguishes repeat compromises for tie-break keys.
void fraudster_transactions(const Fraudster& fraudster, CardCompromise& compromise,
                            uint32_t compromise_ordinal, engine::ConsumerEngine& eng,
                            const FraudConfig& cfg, uint64_t master_seed,
                            const std::function<void(const TransactionEvent&)>& sink);

// Mechanism-2 events: a homogeneous Poisson process over the consumer's
// card-active span, no schedule or locality pattern, fraudster_id stays 0.
void random_fraud(const population::ConsumerProfile& profile,
                  const std::vector<cards::CardAccount>& consumer_cards,
                  const world::MerchantWorld& w, const FraudConfig& cfg,
                  const engine::DriftSchedule& drift, const population::Horizon& horizon,
                  uint64_t master_seed,
                  const std::function<void(const TransactionEvent&)>& sink);

}  // namespace cardsim::fraud
