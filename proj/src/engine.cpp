#include "cardsim/engine.hpp"

#include <algorithm>
#include <cmath>

namespace cardsim::engine {

namespace {

double interp_knots(const std::vector<std::pair<double, double>>& knots, double x) {
    if (knots.empty()) return 0.0;
    if (x <= knots.front().first) return knots.front().second;
    if (x >= knots.back().first) return knots.back().second;
    for (size_t i = 1; i < knots.size(); ++i) {
        if (x <= knots[i].first) {
            double t = (x - knots[i - 1].first) / (knots[i].first - knots[i - 1].first);
            return knots[i - 1].second + t * (knots[i].second - knots[i - 1].second);
        }
    }
    return knots.back().second;
}

void validate_knots(const std::vector<std::pair<double, double>>& knots,
                    std::vector<std::string>& errors, const std::string& what) {
    for (size_t i = 0; i < knots.size(); ++i) {
        if (knots[i].second < 0 || knots[i].second > 1)
            errors.push_back(what + ": values must be in [0,1]");
        if (i > 0 && knots[i].first <= knots[i - 1].first)
            errors.push_back(what + ": years must be strictly increasing");
        if (i > 0 && knots[i].second < knots[i - 1].second)
            errors.push_back(what + ": curve must be monotone non-decreasing");
    }
}

constexpr int kEventsPerDayCap = 1200;

}  // namespace

Segment segment_of_minute(int minute_of_day) {
    if (minute_of_day >= 300 && minute_of_day < 720) return Segment::Morning;
    if (minute_of_day >= 720 && minute_of_day < 1140) return Segment::Afternoon;
    return Segment::Night;
}

int draw_minute_in_segment(Segment seg, rng::Stream& s) {
    switch (seg) {
        case Segment::Morning:
            return 300 + static_cast<int>(s.uniform_index(420));
        case Segment::Afternoon:
            return 720 + static_cast<int>(s.uniform_index(420));
        case Segment::Night: {
            int m = static_cast<int>(s.uniform_index(600));  // 19:00-04:59
            return m < 300 ? 1140 + m : m - 300;
        }
    }
    return 0;
}

double year_fraction(Date d) {
    CivilDate c = to_civil(d);
    int doy = d.days - make_date(c.year, 1, 1).days;
    return c.year + doy / 365.25;
}

double DriftSchedule::online_share(double year) const {
    if (year < online_start_year) return 0.0;
    return interp_knots(online_share_knots, year);
}

double DriftSchedule::fraud_online_share(double year) const {
    if (year < online_start_year) return 0.0;
    return interp_knots(fraud_online_share_knots, year);
}

void DriftSchedule::validate(std::vector<std::string>& errors,
                             const std::string& prefix) const {
    validate_knots(online_share_knots, errors, prefix + "online_share_knots");
    validate_knots(fraud_online_share_knots, errors, prefix + "fraud_online_share_knots");
}

void EngineConfig::validate(std::vector<std::string>& errors, const std::string& prefix) const {
    if (cash_probability < 0 || cash_probability > 1)
        errors.push_back(prefix + "cash_probability must be in [0,1]");
    if (nearby_k < 1) errors.push_back(prefix + "nearby_k must be >= 1");
    if (max_radius_km <= 0) errors.push_back(prefix + "max_radius_km must be > 0");
    if (favorite_multiplier < 1)
        errors.push_back(prefix + "favorite_multiplier must be >= 1");
    if (retirement_weekday_flattening < 0 || retirement_weekday_flattening > 1)
        errors.push_back(prefix + "retirement_weekday_flattening must be in [0,1]");
}

ConsumerEngine::ConsumerEngine(const world::MerchantWorld& w, const EngineConfig& cfg,
                               const DriftSchedule& drift)
    : world_(w), cfg_(cfg), drift_(drift) {}

std::vector<Trip> ConsumerEngine::plan_travel(const population::ConsumerProfile& profile,
                                              int year, bool retired, rng::Stream& s) const {
    std::vector<Trip> trips;
    const Date jan1 = make_date(year, 1, 1);
    const Date dec31 = make_date(year, 12, 31);
    const int days_in_year = dec31.days - jan1.days + 1;

    // Destination city by world population weight, domestic or foreign.
    auto pick_city = [&](bool foreign, rng::Stream& st) -> uint32_t {
        double total = 0;
        for (const auto& c : world_.cities())
            if (c.is_us == !foreign) total += c.weight;
        double target = st.next_double() * total;
        double acc = 0;
        for (size_t i = 0; i < world_.cities().size(); ++i) {
            const auto& c = world_.cities()[i];
            if (c.is_us != !foreign) continue;
            acc += c.weight;
            if (target < acc) return static_cast<uint32_t>(i);
        }
        return 0;
    };

    auto overlaps = [&](Date start, int dur) {
        for (const auto& t : trips) {
            if (start.days <= t.start.days + t.duration_days - 1 &&
                t.start.days <= start.days + dur - 1)
                return true;
        }
        return false;
    };

    auto add_trips = [&](TripKind kind, double annual_mean, double mean_duration,
                         double p_foreign) {
        uint64_t count = s.poisson(annual_mean);
        for (uint64_t i = 0; i < count; ++i) {
            for (int attempt = 0; attempt < 10; ++attempt) {
                Date start = jan1.plus_days(
                    static_cast<int>(s.uniform_index(static_cast<uint64_t>(days_in_year))));
                int dur;
                if (kind == TripKind::WeekendGetaway) {
                    // Snap to the Saturday of the drawn week.
                    start = start.plus_days((6 - day_of_week(start) + 7) % 7);
                    if (start > dec31) continue;
                    dur = 2;
                } else {
                    double drawn = s.truncated_gaussian(
                        mean_duration, cfg_.trip_duration_std_fraction * mean_duration, 1.0,
                        60.0);
                    dur = std::max(1, static_cast<int>(std::lround(drawn)));
                    if (kind == TripKind::BusinessTrip) {
                        int dow = day_of_week(start);
                        if (dow == 0) start = start.plus_days(1);
                        if (dow == 6) start = start.plus_days(2);
                        if (start > dec31) continue;
                    }
                }
                dur = std::min(dur, dec31.days - start.days + 1);
                if (dur < 1 || overlaps(start, dur)) continue;
                bool foreign = s.bernoulli(p_foreign);
                trips.push_back({kind, start, dur, foreign, pick_city(foreign, s)});
                break;
            }
        }
    };

    const auto& t = profile.travel;
    add_trips(TripKind::Vacation, t.annual_vacations, t.vacation_duration_days,
              t.p_foreign_vacation);
    if (!retired)
        add_trips(TripKind::BusinessTrip, t.annual_business_trips,
                  t.business_trip_duration_days, t.p_foreign_business_trip);
    add_trips(TripKind::WeekendGetaway, t.annual_weekend_getaways, 2.0,
              t.p_foreign_weekend_getaway);

    std::sort(trips.begin(), trips.end(),
              [](const Trip& a, const Trip& b) { return a.start < b.start; });
    return trips;
}

const ConsumerEngine::CandidateList& ConsumerEngine::candidates_for(uint16_t gs_id, double lat,
                                                                    double lon, uint64_t key,
                                                                    uint64_t favorite_seed,
                                                                    bool enforce_radius) {
    auto it = candidate_cache_.find(key);
    if (it != candidate_cache_.end()) return it->second;

    CandidateList list;
    const auto& mccs = world_.catalog().item(gs_id).mccs;
    auto near = world_.nearby_locations(lat, lon, mccs, static_cast<size_t>(cfg_.nearby_k));
    for (const auto& c : near) {
        if (enforce_radius && c.distance_km > cfg_.max_radius_km) continue;
        list.location_ids.push_back(c.location_id);
        list.weights.push_back(1.0 / std::pow(cfg_.distance_decay_offset_km + c.distance_km,
                                              cfg_.distance_decay_power));
    }
    if (!list.location_ids.empty() && favorite_seed != 0) {
        // Sticky favorite: one draw from a stream keyed by the preference
        // seed, so cache warm-up never shifts the caller's draw sequence.
        auto fs = rng::Stream::derive(favorite_seed, {rng::PathSeg{"favorite", gs_id, "pick"}});
        list.favorite_idx = static_cast<uint32_t>(fs.categorical(list.weights));
        list.weights[list.favorite_idx] *= cfg_.favorite_multiplier;
    }
    return candidate_cache_.emplace(key, std::move(list)).first->second;
}

std::optional<ConsumerEngine::MerchantChoice> ConsumerEngine::choose_merchant(
    uint16_t gs_id, double lat, double lon, std::optional<uint32_t> travel_city, double year,
    uint64_t favorite_seed, rng::Stream& s, bool enforce_radius) {
    const double online_p = drift_.online_share(year);
    bool try_online_first = s.bernoulli(online_p);

    auto pick_online = [&]() -> std::optional<MerchantChoice> {
        const auto& mccs = world_.catalog().item(gs_id).mccs;
        auto merchants = world_.online_merchants_for(mccs);
        if (merchants.empty()) return std::nullopt;
        std::vector<double> weights(merchants.size());
        for (size_t i = 0; i < merchants.size(); ++i)
            weights[i] = world_.merchants()[merchants[i]].is_multinational ? 3.0 : 1.0;
        if (favorite_seed != 0)
            weights[favorite_seed % merchants.size()] *= cfg_.favorite_multiplier;
        uint32_t m = merchants[s.categorical(weights)];
        return MerchantChoice{m, kOnlineLocation, true};
    };

    auto pick_in_person = [&]() -> std::optional<MerchantChoice> {
        uint64_t key;
        uint64_t fav;
        if (travel_city) {
            key = (1ull << 63) | (static_cast<uint64_t>(*travel_city) << 16) | gs_id;
            fav = 0;  // favorites apply near home only
        } else {
            key = favorite_seed ^ (static_cast<uint64_t>(gs_id) << 48);
            fav = favorite_seed;
        }
        const CandidateList& list = candidates_for(gs_id, lat, lon, key, fav, enforce_radius);
        if (list.location_ids.empty()) return std::nullopt;
        uint32_t loc = list.location_ids[s.categorical(list.weights)];
        return MerchantChoice{world_.locations()[loc].merchant_id, loc, false};
    };

    if (try_online_first) {
        auto online = pick_online();
        if (online) return online;
        return pick_in_person();
    }
    auto in_person = pick_in_person();
    if (in_person) return in_person;
    // In-person failed; online fallback only once the online era has begun.
    if (online_p > 0.0) return pick_online();
    return std::nullopt;
}

void ConsumerEngine::simulate_consumer(
    const population::ConsumerProfile& profile,
    const std::vector<cards::CardAccount>& consumer_cards,
    const world::PreferenceTable& prefs, const population::Horizon& horizon,
    uint64_t master_seed, int extreme_age_threshold,
    const std::function<void(const TransactionEvent&)>& sink, DropCounters& drops) {
    if (profile.entry_date > horizon.end || prefs.total_rate <= 0) return;

    const auto& catalog = world_.catalog();
    const size_t n_items = catalog.items().size();

    auto root = rng::Stream::derive(master_seed,
                                    {rng::PathSeg{"consumer", profile.consumer_id, "engine"}});

    // Card slots: instance covering a date is found per slot; sticky per-slot
    // preference weights.
    int slots = cards::slot_count(consumer_cards);
    std::vector<std::vector<const cards::CardAccount*>> by_slot(
        static_cast<size_t>(std::max(slots, 1)));
    for (const auto& c : consumer_cards) by_slot[c.slot_index].push_back(&c);
    std::vector<double> slot_weight(by_slot.size(), 1.0);
    {
        auto ws = root.fork("cardpref", 0);
        for (auto& w : slot_weight) w = std::exp(ws.gaussian(0.0, 0.5));
    }

    Date retire_date = birthday(profile.birth_date, profile.retirement_age);
    Date extreme_date = birthday(profile.birth_date, extreme_age_threshold);

    struct ItemTable {
        uint16_t gs_id;
        double day_rate;
        double wk_mult[2];
        double ctx_mult[4];  // Home, Getaway, Vacation, Business
    };
    std::vector<ItemTable> items;
    items.reserve(n_items);

    double lambda_scale = 1.0;  // current-year personal level / base level

    auto rebuild_tables = [&](bool retired, bool extreme) {
        items.clear();
        const auto& t = profile.travel;
        // Expected context occupancy normalizes the context multipliers so
        // the long-run annual count equals the personal rate.
        double f_vac = (t.annual_vacations * t.vacation_duration_days +
                        t.annual_weekend_getaways * 2.0) /
                       365.25;
        double f_biz =
            retired ? 0.0 : (t.annual_business_trips * t.business_trip_duration_days) / 365.25;
        f_vac = std::min(f_vac, 0.4);
        f_biz = std::min(f_biz, 0.4);
        double f_home = 1.0 - f_vac - f_biz;

        double status_mult = 1.0;
        if (retired) status_mult *= cfg_.retirement_rate_multiplier;
        if (extreme) status_mult *= cfg_.extreme_age_rate_multiplier;

        // Mix shift at retirement, renormalized to the target level.
        std::vector<double> adj(n_items, 1.0);
        if (retired) {
            for (const auto& a : cfg_.retirement_item_multipliers) {
                int idx = catalog.index_of(a.item_name);
                if (idx >= 0) adj[static_cast<size_t>(idx)] = a.multiplier;
            }
        }
        double adjusted_total = 0;
        for (size_t i = 0; i < n_items; ++i)
            if (prefs.items[i].participates)
                adjusted_total += prefs.items[i].annual_rate * adj[i];
        if (adjusted_total <= 0) return;
        double scale = profile.transactions_per_year.indiv_mean * lambda_scale * status_mult /
                       adjusted_total;

        for (size_t i = 0; i < n_items; ++i) {
            const auto& p = prefs.items[i];
            if (!p.participates) continue;
            const auto& gs = catalog.item(i);
            ItemTable it;
            it.gs_id = static_cast<uint16_t>(i);
            it.day_rate = p.annual_rate * adj[i] * scale / 365.25;

            double wd = gs.weekday_weekend[0], we = gs.weekday_weekend[1];
            if (retired) {
                double avg = (5.0 * wd + 2.0 * we) / 7.0;
                wd += cfg_.retirement_weekday_flattening * (avg - wd);
                we += cfg_.retirement_weekday_flattening * (avg - we);
            }
            double week_avg = (5.0 * wd + 2.0 * we) / 7.0;
            it.wk_mult[0] = wd / week_avg;
            it.wk_mult[1] = we / week_avg;

            double ch = gs.context[0], cv = gs.context[1], cb = gs.context[2];
            double norm = f_home * ch + f_vac * cv + f_biz * cb;
            if (norm <= 0) norm = 1.0;
            it.ctx_mult[0] = ch / norm;
            it.ctx_mult[1] = cv / norm;  // weekend getaway uses vacation weights
            it.ctx_mult[2] = cv / norm;
            it.ctx_mult[3] = cb / norm;
            items.push_back(it);
        }
    };

    double totals[4][2];
    std::vector<double> cums[4][2];
    auto rebuild_cums = [&] {
        for (int m = 0; m < 4; ++m) {
            for (int w = 0; w < 2; ++w) {
                totals[m][w] = 0;
                cums[m][w].resize(items.size());
                for (size_t i = 0; i < items.size(); ++i) {
                    totals[m][w] +=
                        items[i].day_rate * items[i].wk_mult[w] * items[i].ctx_mult[m];
                    cums[m][w][i] = totals[m][w];
                }
            }
        }
    };

    const Date begin = std::max(profile.entry_date, horizon.start);
    bool retired = retire_date <= begin;
    bool extreme = extreme_date <= begin;
    rebuild_tables(retired, extreme);
    rebuild_cums();

    std::vector<Trip> trips;
    int trips_year = -1;
    size_t trip_cursor = 0;

    uint32_t seq = 0;
    std::vector<TransactionEvent> day_events;
    std::vector<int> day_minutes;

    for (Date d = begin; d <= horizon.end; d = d.plus_days(1)) {
        bool need_rebuild = false;
        if (!retired && d >= retire_date) {
            retired = true;
            need_rebuild = true;
        }
        if (!extreme && d >= extreme_date) {
            extreme = true;
            need_rebuild = true;
        }

        int year = to_civil(d).year;
        if (year != trips_year) {
            trips_year = year;
            auto ts = root.fork("travel", static_cast<uint64_t>(year));
            trips = plan_travel(profile, year, retired, ts);
            trip_cursor = 0;
            if (profile.transactions_per_year.indiv_std > 0) {
                auto ys = root.fork("tpy", static_cast<uint64_t>(year));
                double base = profile.transactions_per_year.indiv_mean;
                double yearly =
                    std::max(1.0, ys.gaussian(base, profile.transactions_per_year.indiv_std));
                lambda_scale = yearly / base;
                need_rebuild = true;
            }
        }
        if (need_rebuild) {
            rebuild_tables(retired, extreme);
            rebuild_cums();
        }
        if (items.empty()) return;

        Mode mode = Mode::Home;
        uint32_t dest_city = 0;
        while (trip_cursor < trips.size() &&
               trips[trip_cursor].start.days + trips[trip_cursor].duration_days - 1 < d.days)
            ++trip_cursor;
        if (trip_cursor < trips.size() && trips[trip_cursor].start <= d) {
            const Trip& t = trips[trip_cursor];
            mode = t.kind == TripKind::Vacation
                       ? Mode::Vacation
                       : (t.kind == TripKind::BusinessTrip ? Mode::BusinessTrip
                                                           : Mode::WeekendGetaway);
            dest_city = t.dest_city;
        }

        int wk = is_weekend(d) ? 1 : 0;
        int mi = static_cast<int>(mode);
        double lambda = totals[mi][wk];
        if (lambda <= 0) continue;

        auto ds = root.fork_index(static_cast<uint64_t>(d.days));
        uint64_t n_events = ds.poisson(lambda);
        if (n_events == 0) continue;
        n_events = std::min<uint64_t>(n_events, kEventsPerDayCap);

        double lat = profile.home.latitude, lon = profile.home.longitude;
        std::optional<uint32_t> travel_city;
        if (mode != Mode::Home) {
            travel_city = dest_city;
            lat = world_.cities()[dest_city].lat;
            lon = world_.cities()[dest_city].lon;
        }
        double yf = year_fraction(d);

        day_events.clear();
        for (uint64_t e = 0; e < n_events; ++e) {
            const auto& cum = cums[mi][wk];
            double target = ds.next_double() * totals[mi][wk];
            size_t idx = static_cast<size_t>(
                std::lower_bound(cum.begin(), cum.end(), target) - cum.begin());
            if (idx >= items.size()) idx = items.size() - 1;
            const ItemTable& it = items[idx];
            const auto& gs = catalog.item(it.gs_id);
            const auto& pref = prefs.items[it.gs_id];

            Segment seg = static_cast<Segment>(ds.categorical(gs.time_of_day));
            int minute = draw_minute_in_segment(seg, ds);

            auto choice =
                choose_merchant(it.gs_id, lat, lon, travel_city, yf, pref.favorite_seed, ds);
            if (!choice) {
                drops.no_merchant++;
                continue;
            }

            double amount = ds.lognormal_from_median(pref.spend_median, pref.spend_log_std);
            int64_t cents = std::max<int64_t>(1, std::llround(amount * 100.0));

            TransactionEvent ev;
            ev.card_id = kCashInstrument;
            bool cash = false;
            if (!choice->online && amount < cfg_.cash_threshold_usd)
                cash = ds.bernoulli(cfg_.cash_probability);
            if (!cash) {
                double weights[64];
                const cards::CardAccount* valid[64];
                size_t n_valid = 0;
                for (size_t slot = 0; slot < by_slot.size() && n_valid < 64; ++slot) {
                    for (const auto* c : by_slot[slot]) {
                        if (c->acquired_date <= d && d <= c->valid_until) {
                            valid[n_valid] = c;
                            weights[n_valid] = slot_weight[slot];
                            ++n_valid;
                            break;
                        }
                    }
                }
                if (n_valid == 0) {
                    drops.no_instrument++;
                    continue;
                }
                const auto* card =
                    valid[ds.categorical(std::span<const double>(weights, n_valid))];
                ev.card_id = card->card_id;
                ev.channel = choice->online
                                 ? Channel::Online
                                 : (card->has_chip ? Channel::Chip : Channel::Swipe);
            } else {
                ev.channel = Channel::Cash;
            }

            ev.timestamp = at_minute(d, minute);
            ev.consumer_id = profile.consumer_id;
            ev.amount_cents = cents;
            ev.gs_id = it.gs_id;
            ev.location_id = choice->location_id;
            ev.merchant_id = choice->merchant_id;
            ev.is_fraud = false;
            ev.fraudster_id = 0;
            day_events.push_back(ev);
        }

        if (day_events.empty()) continue;
        // Strictly increasing timestamps within the consumer's stream:
        // stable-sort by minute, then spread collisions to distinct minutes.
        std::stable_sort(day_events.begin(), day_events.end(),
                         [](const TransactionEvent& a, const TransactionEvent& b) {
                             return a.timestamp.minutes < b.timestamp.minutes;
                         });
        day_minutes.resize(day_events.size());
        for (size_t i = 0; i < day_events.size(); ++i)
            day_minutes[i] = day_events[i].timestamp.minute_of_day();
        for (size_t i = 1; i < day_minutes.size(); ++i)
            if (day_minutes[i] <= day_minutes[i - 1]) day_minutes[i] = day_minutes[i - 1] + 1;
        if (day_minutes.back() > 1439) {
            day_minutes.back() = 1439;
            for (size_t i = day_minutes.size() - 1; i > 0; --i)
                if (day_minutes[i - 1] >= day_minutes[i]) day_minutes[i - 1] = day_minutes[i] - 1;
        }
        for (size_t i = 0; i < day_events.size(); ++i) {
            day_events[i].timestamp = at_minute(d, day_minutes[i]);
            day_events[i].seq = seq++;
            sink(day_events[i]);
        }
    }
}

namespace {
const char* channel_name_impl(Channel c) {
    switch (c) {
        case Channel::Chip: return "CHIP";
        case Channel::Swipe: return "SWIPE";
        case Channel::Online: return "ONLINE";
        case Channel::Cash: return "CASH";
    }
    return "?";
}
}  // namespace

}  // namespace cardsim::engine

namespace cardsim {
const char* channel_name(Channel c) { return engine::channel_name_impl(c); }
}  // namespace cardsim
