#include "cardsim/fraud.hpp"

#include <algorithm>
#include <cmath>

namespace cardsim::fraud {

namespace {

// Sequence ranges keep fraud tie-break keys disjoint from genuine events.
constexpr uint32_t kMech1SeqBase = 1u << 31;
constexpr uint32_t kMech2SeqBase = 3u << 29;

const cards::CardAccount* card_valid_at(const std::vector<cards::CardAccount>& cards, Date d,
                                        rng::Stream& s) {
    const cards::CardAccount* valid[64];
    size_t n = 0;
    for (const auto& c : cards) {
        if (c.acquired_date <= d && d <= c.valid_until && n < 64) valid[n++] = &c;
    }
    if (n == 0) return nullptr;
    return valid[s.uniform_index(n)];
}

}  // namespace

void FraudConfig::validate(std::vector<std::string>& errors, const std::string& prefix) const {
    if (active_min_days <= 0) errors.push_back(prefix + "active_min_days must be > 0");
    if (active_max_days < active_min_days)
        errors.push_back(prefix + "active_max_days must be >= active_min_days");
    if (acquisition_rate_per_month < 0)
        errors.push_back(prefix + "acquisition_rate_per_month must be >= 0");
    if (random_rate_per_year < 0) errors.push_back(prefix + "random_rate_per_year must be >= 0");
    if (burst_mean_events <= 0) errors.push_back(prefix + "burst_mean_events must be > 0");
    if (amount_multiplier <= 0) errors.push_back(prefix + "amount_multiplier must be > 0");
}

std::vector<Fraudster> generate_fraudsters(const FraudConfig& cfg, const world::Catalog& catalog,
                                           const population::Horizon& horizon,
                                           uint64_t master_seed) {
    std::vector<Fraudster> out;
    out.reserve(cfg.fraudster_count);
    int horizon_days = horizon.end.days - horizon.start.days + 1;
    for (uint32_t i = 0; i < cfg.fraudster_count; ++i) {
        auto s = rng::Stream::derive(master_seed, {rng::PathSeg{"fraudster", i + 1, "bio"}});
        Fraudster f;
        f.fraudster_id = i + 1;
        f.base = population::assign_geography(s, population::GeoTable::embedded());
        f.income = std::max(10000.0, s.gaussian(cfg.fraudster_income.mean,
                                               cfg.fraudster_income.std_dev));
        // Same preference machinery as consumers.
        population::ConsumerProfile like_consumer;
        like_consumer.annual_income = f.income;
        auto ps = s.fork("prefs", 0);
        f.prefs = world::instantiate_preferences(like_consumer, catalog, ps);

        // Fraud is a job: a weekly schedule and working segments.
        for (auto& w : f.day_of_week_weights) w = std::exp(s.gaussian(0.0, 0.6));
        for (auto& w : f.segment_weights) w = std::exp(s.gaussian(0.0, 0.6));

        // Active interval: log-uniform duration between the configured
        // bounds, placed uniformly so the whole interval fits the horizon.
        double log_dur = s.uniform(std::log(cfg.active_min_days), std::log(cfg.active_max_days));
        int dur = std::max(1, static_cast<int>(std::lround(std::exp(log_dur))));
        dur = std::min(dur, horizon_days);
        int slack = horizon_days - dur;
        int offset = slack > 0 ? static_cast<int>(s.uniform_index(
                                     static_cast<uint64_t>(slack + 1)))
                               : 0;
        f.active_start = horizon.start.plus_days(offset);
        f.active_end = f.active_start.plus_days(dur - 1);
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<CardCompromise> compromise_cards(
    const Fraudster& fraudster, const std::vector<population::ConsumerProfile>& consumers,
    const std::vector<std::vector<cards::CardAccount>>& cards_by_consumer,
    const FraudConfig& cfg, const engine::DriftSchedule& drift,
    const population::Horizon& horizon, uint64_t master_seed) {
    std::vector<CardCompromise> out;
    if (consumers.empty()) return out;
    auto s = rng::Stream::derive(master_seed,
                                 {rng::PathSeg{"fraudster", fraudster.fraudster_id, "compromise"}});

    double active_months =
        (fraudster.active_end.days - fraudster.active_start.days + 1) / 30.44;
    uint64_t count = s.poisson(cfg.acquisition_rate_per_month * active_months);

    for (uint64_t k = 0; k < count; ++k) {
        Date when = fraudster.active_start.plus_days(static_cast<int>(s.uniform_index(
            static_cast<uint64_t>(fraudster.active_end.days - fraudster.active_start.days + 1))));
        bool online_era = drift.online_share(engine::year_fraction(when)) > 0;

        // Victim pick: uniform in the online era; distance-biased rejection
        // sampling before it.
        const population::ConsumerProfile* victim = nullptr;
        for (int attempt = 0; attempt < 200; ++attempt) {
            const auto& cand = consumers[s.uniform_index(consumers.size())];
            if (cand.entry_date > when) continue;
            if (!online_era) {
                double dist = geo::haversine_km(fraudster.base.latitude, fraudster.base.longitude,
                                                cand.home.latitude, cand.home.longitude);
                if (!s.bernoulli(std::exp(-dist / cfg.pre_online_locality_km))) continue;
            }
            victim = &cand;
            break;
        }
        if (!victim) continue;

        auto cs = s.fork("card", k);
        const auto& cards = cards_by_consumer[victim->consumer_id - 1];
        const cards::CardAccount* card = card_valid_at(cards, when, cs);
        if (!card) continue;

        CardCompromise c;
        c.fraudster_id = fraudster.fraudster_id;
        c.consumer_id = victim->consumer_id;
        c.card = card;
        c.compromise_date = when;
        out.push_back(c);
    }
    return out;
}

void fraudster_transactions(const Fraudster& fraudster, CardCompromise& compromise,
                            uint32_t compromise_ordinal, engine::ConsumerEngine& eng,
                            const FraudConfig& cfg, uint64_t master_seed,
                            const std::function<void(const TransactionEvent&)>& sink) {
    if (compromise.exhausted || !compromise.card) return;
    auto s = rng::Stream::derive(
        master_seed, {rng::PathSeg{"fraudster", fraudster.fraudster_id, "burst"},
                      rng::PathSeg{"card", compromise.card->card_id, ""},
                      rng::PathSeg{"ordinal", compromise_ordinal, ""}});

    Date window_end = std::min(fraudster.active_end, compromise.card->valid_until);
    uint64_t burst = 1 + s.poisson(std::max(0.0, cfg.burst_mean_events - 1.0));
    burst = std::min<uint64_t>(burst, 64);

    // Participating items weighted by the fraudster's own rates.
    std::vector<double> item_weights;
    std::vector<uint16_t> item_ids;
    for (size_t i = 0; i < fraudster.prefs.items.size(); ++i) {
        const auto& p = fraudster.prefs.items[i];
        if (!p.participates) continue;
        item_ids.push_back(static_cast<uint16_t>(i));
        item_weights.push_back(p.annual_rate);
    }
    if (item_ids.empty()) return;

    Date d = compromise.compromise_date;
    uint32_t made = 0;
    for (uint64_t e = 0; e < burst; ++e) {
        if (d > window_end) break;
        // Work the weekly schedule: re-draw the day until it fits.
        for (int attempt = 0; attempt < 7; ++attempt) {
            if (s.bernoulli(fraudster.day_of_week_weights[day_of_week(d)] /
                            (*std::max_element(fraudster.day_of_week_weights,
                                               fraudster.day_of_week_weights + 7))))
                break;
            d = d.plus_days(1);
            if (d > window_end) break;
        }
        if (d > window_end) break;

        double yf = engine::year_fraction(d);
        auto seg = static_cast<engine::Segment>(s.categorical(fraudster.segment_weights));
        int minute = engine::draw_minute_in_segment(seg, s);

        uint16_t gs_id = item_ids[s.categorical(item_weights)];
        const auto& pref = fraudster.prefs.items[gs_id];

        // Channel split by the era's online-fraud share; in-person fraud
        // happens on the fraudster's own turf.
        bool online = s.bernoulli(eng.drift().fraud_online_share(yf));
        std::optional<engine::ConsumerEngine::MerchantChoice> choice;
        if (online) {
            const auto& mccs = eng.world().catalog().item(gs_id).mccs;
            auto merchants = eng.world().online_merchants_for(mccs);
            if (!merchants.empty()) {
                choice = engine::ConsumerEngine::MerchantChoice{
                    merchants[s.uniform_index(merchants.size())], kOnlineLocation, true};
            }
        }
        if (!choice) {
            // In-person on the fraudster's own turf: nearest matching
            // locations, no radius cap (year pinned before the online era so
            // the engine never converts the pick to online).
            auto in_person = eng.choose_merchant(gs_id, fraudster.base.latitude,
                                                 fraudster.base.longitude,
                                                 fraudster.fraudster_id + (1u << 24), 1900.0,
                                                 0, s, /*enforce_radius=*/false);
            if (!in_person) {
                d = d.plus_days(1 + static_cast<int>(s.exponential(
                        1.0 / cfg.burst_spacing_days_mean)));
                continue;
            }
            choice = in_person;
        }

        double amount = s.lognormal_from_median(pref.spend_median * cfg.amount_multiplier,
                                                pref.spend_log_std);
        TransactionEvent ev;
        ev.timestamp = at_minute(d, minute);
        ev.consumer_id = compromise.consumer_id;
        ev.seq = kMech1SeqBase + fraudster.fraudster_id * 65536u +
                 (compromise_ordinal % 1024u) * 64u + made;
        ev.card_id = compromise.card->card_id;
        ev.amount_cents = std::max<int64_t>(1, std::llround(amount * 100.0));
        ev.gs_id = gs_id;
        ev.channel = choice->online
                         ? Channel::Online
                         : (compromise.card->has_chip ? Channel::Chip : Channel::Swipe);
        ev.is_fraud = true;
        ev.location_id = choice->location_id;
        ev.merchant_id = choice->merchant_id;
        ev.fraudster_id = fraudster.fraudster_id;
        sink(ev);
        ++made;

        d = d.plus_days(1 + static_cast<int>(s.exponential(1.0 / cfg.burst_spacing_days_mean)));
    }
    compromise.exhausted = true;
}

void random_fraud(const population::ConsumerProfile& profile,
                  const std::vector<cards::CardAccount>& consumer_cards,
                  const world::MerchantWorld& w, const FraudConfig& cfg,
                  const engine::DriftSchedule& drift, const population::Horizon& horizon,
                  uint64_t master_seed,
                  const std::function<void(const TransactionEvent&)>& sink) {
    if (cfg.random_rate_per_year <= 0 || consumer_cards.empty()) return;
    if (profile.entry_date > horizon.end) return;
    auto s = rng::Stream::derive(master_seed,
                                 {rng::PathSeg{"consumer", profile.consumer_id, "mech2"}});

    const auto& items = w.catalog().items();
    double t_days = 0;
    double span_days = horizon.end.days - profile.entry_date.days + 1;
    uint32_t made = 0;
    uint32_t arrival = 0;
    while (true) {
        t_days += s.exponential(cfg.random_rate_per_year) * 365.25;
        if (t_days >= span_days) break;
        Date d = profile.entry_date.plus_days(static_cast<int>(t_days));

        auto cs = s.fork_index(arrival++, 1);
        const cards::CardAccount* card = card_valid_at(consumer_cards, d, cs);
        if (!card) continue;  // no active card that day

        // Timestamp carries the continuous arrival: inter-arrivals stay
        // exactly exponential up to minute quantization. No other pattern:
        // any item, any merchant anywhere.
        int minute = std::min(1439, static_cast<int>((t_days - std::floor(t_days)) * 1440.0));
        uint16_t gs_id = static_cast<uint16_t>(cs.uniform_index(items.size()));
        double yf = engine::year_fraction(d);
        bool online = cs.bernoulli(drift.fraud_online_share(yf));

        TransactionEvent ev;
        if (online) {
            auto merchants = w.online_merchants_for(items[gs_id].mccs);
            if (merchants.empty()) online = false;
            else {
                ev.merchant_id = merchants[cs.uniform_index(merchants.size())];
                ev.location_id = kOnlineLocation;
            }
        }
        if (!online) {
            const auto& idx = w.locations();
            const auto& loc = idx[cs.uniform_index(idx.size())];
            ev.location_id = loc.location_id;
            ev.merchant_id = loc.merchant_id;
        }
        double amount = cs.lognormal_from_median(cfg.random_amount_median,
                                                 cfg.random_amount_log_std);
        ev.timestamp = at_minute(d, minute);
        ev.consumer_id = profile.consumer_id;
        ev.seq = kMech2SeqBase + made;
        ev.card_id = card->card_id;
        ev.amount_cents = std::max<int64_t>(1, std::llround(amount * 100.0));
        ev.gs_id = gs_id;
        ev.channel = online ? Channel::Online
                            : (card->has_chip ? Channel::Chip : Channel::Swipe);
        ev.is_fraud = true;
        ev.fraudster_id = 0;
        sink(ev);
        ++made;
    }
}

}  // namespace cardsim::fraud
