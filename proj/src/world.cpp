#include "cardsim/world.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>

#include "json.hpp"

namespace cardsim::world {

using nlohmann::json;

namespace {

double interp_log_income(const double knots[5], const double values[5], double income) {
    double x = std::log(std::max(income, 1000.0));
    double x0 = std::log(knots[0]);
    double x4 = std::log(knots[4]);
    if (x <= x0) return values[0];
    if (x >= x4) return values[4];
    for (int i = 1; i < 5; ++i) {
        double xi = std::log(knots[i]);
        if (x <= xi) {
            double xp = std::log(knots[i - 1]);
            double t = (x - xp) / (xi - xp);
            return values[i - 1] + t * (values[i] - values[i - 1]);
        }
    }
    return values[4];
}

constexpr int32_t kLonCells = 360;

int32_t cell_of(double lat, double lon) {
    int lat_idx = static_cast<int>(std::floor(lat + 90.0));
    int lon_idx = static_cast<int>(std::floor(lon + 180.0));
    lat_idx = std::clamp(lat_idx, 0, 179);
    lon_idx = ((lon_idx % kLonCells) + kLonCells) % kLonCells;
    return lat_idx * kLonCells + lon_idx;
}

// All cities sit within |lat| < 75, so any non-empty cell at Chebyshev ring r
// is at least (r-1) degrees away in latitude or in wrapped longitude; the
// longitude degree is worth at least cos(75 deg) of a latitude degree.
double ring_lower_bound_km(int ring) {
    if (ring <= 1) return 0.0;
    constexpr double kKmPerDegree = 111.19;
    constexpr double kCos75 = 0.2588;
    return (ring - 1) * kKmPerDegree * kCos75;
}

const char* const kNameAdjectives[] = {
    "Golden",  "Blue",    "Silver", "Red",     "Green",   "Royal",  "Sunny",  "Grand",
    "Prime",   "Urban",   "Classic","Modern",  "Lucky",   "Happy",  "Summit", "Valley",
    "Harbor",  "Coastal", "Prairie","Evergreen","Crystal","Copper", "Maple",  "Cedar",
};

const char* const kNameNouns[] = {
    "Star",   "Oak",    "River",  "Stone",  "Bridge", "Garden", "Crown",  "Anchor",
    "Falcon", "Bear",   "Fox",    "Lion",   "Eagle",  "Horizon","Meadow", "Summit",
    "Lantern","Compass","Beacon", "Harvest","Orchard","Canyon", "Breeze", "Trail",
};

const char* suffix_for_mcc(int mcc) {
    if (mcc == 5813) return "Tavern";
    if (mcc == 5814) return "Express Eats";
    if (mcc == 5812 || mcc == 5462) return "Kitchen";
    if (mcc == 7011) return "Inn";
    if (mcc == 4511) return "Airways";
    if (mcc == 4411) return "Cruises";
    if (mcc == 7512) return "Rentals";
    if (mcc == 4112 || mcc == 4111 || mcc == 4131) return "Transit";
    if (mcc == 4121) return "Rides";
    if (mcc == 4722) return "Travel";
    if (mcc == 4814 || mcc == 4899 || mcc == 4900) return "Communications";
    if (mcc == 6300) return "Insurance";
    if (mcc >= 8011 && mcc <= 8099) return "Clinic";
    if (mcc == 8111 || mcc == 8931 || mcc == 8999) return "Associates";
    if (mcc == 8220) return "Institute";
    if (mcc == 8351) return "Childcare";
    if (mcc == 8398) return "Foundation";
    if (mcc == 742) return "Animal Hospital";
    if (mcc >= 7210 && mcc <= 7299) return "Studio";
    if (mcc >= 7300 && mcc <= 7549) return "Works";
    if (mcc >= 7832 && mcc <= 7999) return "Entertainment";
    if (mcc == 5541 || mcc == 5542) return "Fuel Stop";
    if (mcc == 5411) return "Market";
    if (mcc == 5499) return "Corner Store";
    if (mcc == 5912) return "Pharmacy";
    if (mcc == 5944 || mcc == 5094) return "Jewelers";
    if (mcc == 9402 || mcc == 4215) return "Shipping";
    return "Store";
}

// MCCs plausible for large chains with worldwide locations.
const std::set<int> kMultinationalMccs = {
    4511, 4722, 4814, 4899, 5045, 5300, 5310, 5311, 5411, 5499, 5541, 5542, 5611,
    5621, 5651, 5661, 5712, 5722, 5732, 5734, 5735, 5812, 5813, 5814, 5815, 5816,
    5912, 5941, 5942, 5943, 5945, 5948, 5964, 5965, 5977, 5999, 6300, 7011, 7512,
    7832, 7997,
};

}  // namespace

double GoodsServiceItem::participation_at(double income) const {
    return std::clamp(interp_log_income(income_knots, participation, income), 0.0, 1.0);
}

double GoodsServiceItem::amount_median_at(double income) const {
    return std::max(0.5, interp_log_income(income_knots, amount_median, income));
}

Catalog::Catalog(std::vector<GoodsServiceItem> items, std::vector<MccInfo> mccs)
    : items_(std::move(items)), mccs_(std::move(mccs)) {
    for (const auto& m : mccs_) {
        if (m.code < 0 || m.code > 9999)
            throw LookupError("MCC code out of range: " + std::to_string(m.code));
        mcc_desc_[m.code] = m.description;
    }
    for (const auto& it : items_) {
        if (it.mccs.empty()) throw LookupError("GS item '" + it.name + "' has no MCCs");
        double w_sum[2] = {0, 0};
        for (int i = 0; i < 3; ++i) w_sum[0] += it.time_of_day[i];
        w_sum[1] = it.weekday_weekend[0] + it.weekday_weekend[1];
        if (w_sum[0] <= 0 || w_sum[1] <= 0 || it.context[0] + it.context[1] + it.context[2] <= 0)
            throw LookupError("GS item '" + it.name + "' has a zero weight vector");
        if (it.annual_rate_median <= 0)
            throw LookupError("GS item '" + it.name + "' has a non-positive rate");
        for (int code : it.mccs)
            if (!mcc_desc_.count(code))
                throw LookupError("GS item '" + it.name + "' references unknown MCC " +
                                  std::to_string(code));
        // Sales weight proxy: frequency times typical ticket, split across
        // the item's MCCs.
        double w = it.annual_rate_median * it.amount_median[2] /
                   static_cast<double>(it.mccs.size());
        for (int code : it.mccs) sales_weights_[code] += w;
    }
}

const GoodsServiceItem& Catalog::item(size_t gs_id) const {
    if (gs_id >= items_.size()) throw LookupError("unknown gs_id");
    return items_[gs_id];
}

int Catalog::index_of(const std::string& name) const {
    for (size_t i = 0; i < items_.size(); ++i)
        if (items_[i].name == name) return static_cast<int>(i);
    return -1;
}

const std::vector<int>& Catalog::mccs_for_item(const std::string& name) const {
    int idx = index_of(name);
    if (idx < 0) throw LookupError("unknown goods/services item '" + name + "'");
    return items_[static_cast<size_t>(idx)].mccs;
}

const std::string& Catalog::mcc_description(int code) const {
    auto it = mcc_desc_.find(code);
    if (it == mcc_desc_.end()) throw LookupError("unknown MCC " + std::to_string(code));
    return it->second;
}

Catalog Catalog::from_json(const std::string& json_text) {
    json j = json::parse(json_text);
    std::vector<MccInfo> mccs;
    for (const auto& m : j.at("mccs"))
        mccs.push_back({m.at("code").get<int>(), m.at("description").get<std::string>()});
    std::vector<GoodsServiceItem> items;
    for (const auto& e : j.at("items")) {
        GoodsServiceItem it;
        it.name = e.at("name").get<std::string>();
        it.mccs = e.at("mccs").get<std::vector<int>>();
        it.annual_rate_median = e.at("annual_rate_median").get<double>();
        it.rate_log_std = e.at("rate_log_std").get<double>();
        for (int i = 0; i < 3; ++i) it.time_of_day[i] = e.at("time_of_day").at(i).get<double>();
        for (int i = 0; i < 2; ++i)
            it.weekday_weekend[i] = e.at("weekday_weekend").at(i).get<double>();
        for (int i = 0; i < 3; ++i) it.context[i] = e.at("context").at(i).get<double>();
        for (int i = 0; i < 5; ++i) {
            it.income_knots[i] = e.at("income_knots").at(i).get<double>();
            it.participation[i] = e.at("participation").at(i).get<double>();
            it.amount_median[i] = e.at("amount_median").at(i).get<double>();
        }
        it.amount_log_std = e.at("amount_log_std").get<double>();
        it.amount_spread = e.value("amount_spread", 0.5);
        items.push_back(std::move(it));
    }
    return Catalog(std::move(items), std::move(mccs));
}

std::string Catalog::to_json() const {
    json j;
    j["mccs"] = json::array();
    for (const auto& m : mccs_)
        j["mccs"].push_back({{"code", m.code}, {"description", m.description}});
    j["items"] = json::array();
    for (const auto& it : items_) {
        json e;
        e["name"] = it.name;
        e["mccs"] = it.mccs;
        e["annual_rate_median"] = it.annual_rate_median;
        e["rate_log_std"] = it.rate_log_std;
        e["time_of_day"] = {it.time_of_day[0], it.time_of_day[1], it.time_of_day[2]};
        e["weekday_weekend"] = {it.weekday_weekend[0], it.weekday_weekend[1]};
        e["context"] = {it.context[0], it.context[1], it.context[2]};
        e["income_knots"] = std::vector<double>(it.income_knots, it.income_knots + 5);
        e["participation"] = std::vector<double>(it.participation, it.participation + 5);
        e["amount_median"] = std::vector<double>(it.amount_median, it.amount_median + 5);
        e["amount_log_std"] = it.amount_log_std;
        e["amount_spread"] = it.amount_spread;
        j["items"].push_back(std::move(e));
    }
    return j.dump(2);
}

void WorldConfig::validate(std::vector<std::string>& errors, const std::string& prefix) const {
    if (total_locations < 1) errors.push_back(prefix + "total_locations must be >= 1");
    if (us_location_share < 0 || us_location_share > 1)
        errors.push_back(prefix + "us_location_share must be in [0,1]");
    if (multinational_location_share < 0 || multinational_location_share > 1)
        errors.push_back(prefix + "multinational_location_share must be in [0,1]");
    if (min_multinational_locations < 1)
        errors.push_back(prefix + "min_multinational_locations must be >= 1");
}

void MerchantWorld::build_indexes() {
    mcc_index_.clear();
    online_by_mcc_.clear();
    for (const auto& loc : locations_) {
        const Merchant& m = merchants_[loc.merchant_id];
        mcc_index_[m.mcc].cell_locs.push_back({cell_of(loc.lat, loc.lon), loc.location_id});
    }
    for (auto& [mcc, idx] : mcc_index_) std::sort(idx.cell_locs.begin(), idx.cell_locs.end());
    for (const auto& m : merchants_)
        if (m.has_online) online_by_mcc_[m.mcc].push_back(m.merchant_id);

    coverage_gaps_.clear();
    if (catalog_) {
        std::set<int> seen;
        for (const auto& m : merchants_) seen.insert(m.mcc);
        std::set<int> wanted;
        for (const auto& it : catalog_->items())
            for (int code : it.mccs) wanted.insert(code);
        for (int code : wanted)
            if (!seen.count(code)) coverage_gaps_.push_back(code);
    }
}

std::vector<Candidate> MerchantWorld::nearby_locations(double lat, double lon,
                                                       const std::vector<int>& mcc_set,
                                                       size_t k) const {
    if (k < 1) throw LookupError("nearby_locations: k must be >= 1");
    std::vector<const MccIndex*> indexes;
    for (int mcc : mcc_set) {
        auto it = mcc_index_.find(mcc);
        if (it != mcc_index_.end()) indexes.push_back(&it->second);
    }
    if (indexes.empty()) return {};

    // Max-heap of the current best k by (distance, id).
    using Entry = std::pair<double, uint32_t>;
    std::priority_queue<Entry> best;
    auto offer = [&](uint32_t loc_id) {
        const auto& loc = locations_[loc_id];
        double d = geo::haversine_km(lat, lon, loc.lat, loc.lon);
        if (best.size() < k) {
            best.push({d, loc_id});
        } else if (Entry{d, loc_id} < best.top()) {
            best.pop();
            best.push({d, loc_id});
        }
    };

    int lat0 = cell_of(lat, lon) / kLonCells;
    int lon0 = cell_of(lat, lon) % kLonCells;
    auto scan_cell = [&](int la, int lo) {
        if (la < 0 || la > 179) return;
        lo = ((lo % kLonCells) + kLonCells) % kLonCells;
        int32_t cell = la * kLonCells + lo;
        for (const MccIndex* idx : indexes) {
            auto lo_it = std::lower_bound(idx->cell_locs.begin(), idx->cell_locs.end(),
                                          std::pair<int32_t, uint32_t>{cell, 0});
            for (auto it = lo_it; it != idx->cell_locs.end() && it->first == cell; ++it)
                offer(it->second);
        }
    };

    for (int ring = 0; ring <= 181; ++ring) {
        if (best.size() == k && ring_lower_bound_km(ring) > best.top().first) break;
        if (ring == 0) {
            scan_cell(lat0, lon0);
            continue;
        }
        int half_lon = std::min(ring, kLonCells / 2);
        for (int dlo = -half_lon; dlo <= half_lon; ++dlo) {
            scan_cell(lat0 - ring, lon0 + dlo);
            scan_cell(lat0 + ring, lon0 + dlo);
        }
        if (ring <= kLonCells / 2) {
            for (int dla = -ring + 1; dla <= ring - 1; ++dla) {
                scan_cell(lat0 + dla, lon0 - ring);
                scan_cell(lat0 + dla, lon0 + ring);
            }
        }
    }

    std::vector<Candidate> out(best.size());
    for (size_t i = out.size(); i > 0; --i) {
        out[i - 1] = Candidate{best.top().second, best.top().first};
        best.pop();
    }
    return out;
}

const std::vector<uint32_t>& MerchantWorld::online_merchants(int mcc) const {
    auto it = online_by_mcc_.find(mcc);
    return it == online_by_mcc_.end() ? empty_ : it->second;
}

std::vector<uint32_t> MerchantWorld::online_merchants_for(const std::vector<int>& mcc_set) const {
    std::vector<uint32_t> out;
    for (int mcc : mcc_set) {
        const auto& v = online_merchants(mcc);
        out.insert(out.end(), v.begin(), v.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

MerchantWorld build_world(const WorldConfig& cfg, uint64_t seed, const Catalog& catalog) {
    std::vector<std::string> errors;
    cfg.validate(errors, "world.");
    if (!errors.empty()) throw population::ConfigError(errors.front());

    MerchantWorld w;
    w.catalog_ = &catalog;

    // City table: U.S. places first, then foreign cities.
    std::vector<double> us_cum, foreign_cum;
    for (const auto& p : geo::us_places()) {
        w.cities_.push_back({p.city, p.state, p.zip, "United States", p.lat, p.lon, true, p.weight});
        us_cum.push_back((us_cum.empty() ? 0 : us_cum.back()) + p.weight);
    }
    size_t n_us = w.cities_.size();
    for (const auto& c : geo::foreign_cities()) {
        w.cities_.push_back({c.city, "", "", c.country, c.lat, c.lon, false, c.weight});
        foreign_cum.push_back((foreign_cum.empty() ? 0 : foreign_cum.back()) + c.weight);
    }

    std::set<int> catalog_mccs;
    for (const auto& it : catalog.items())
        for (int code : it.mccs) catalog_mccs.insert(code);

    uint64_t reserved = cfg.multinational_count * static_cast<uint64_t>(cfg.min_multinational_locations) +
                        catalog_mccs.size();
    if (reserved > cfg.total_locations)
        throw population::ConfigError(
            "world config infeasible: total_locations smaller than multinationals x min "
            "locations plus MCC coverage (" +
            std::to_string(reserved) + " needed)");

    auto s = rng::Stream::derive(seed, {rng::PathSeg{"world", 0, "build"}});

    std::vector<int> mcc_list(catalog_mccs.begin(), catalog_mccs.end());
    std::vector<double> mcc_weights;
    for (int code : mcc_list) mcc_weights.push_back(catalog.mcc_sales_weights().at(code));

    std::vector<int> multi_mccs;
    std::vector<double> multi_weights;
    for (size_t i = 0; i < mcc_list.size(); ++i) {
        if (kMultinationalMccs.count(mcc_list[i])) {
            multi_mccs.push_back(mcc_list[i]);
            multi_weights.push_back(mcc_weights[i]);
        }
    }

    auto pick_city = [&](rng::Stream& st, bool in_us) -> uint32_t {
        if (in_us) {
            double t = st.next_double() * us_cum.back();
            size_t i = static_cast<size_t>(
                std::lower_bound(us_cum.begin(), us_cum.end(), t) - us_cum.begin());
            return static_cast<uint32_t>(std::min(i, n_us - 1));
        }
        double t = st.next_double() * foreign_cum.back();
        size_t i = static_cast<size_t>(
            std::lower_bound(foreign_cum.begin(), foreign_cum.end(), t) - foreign_cum.begin());
        return static_cast<uint32_t>(n_us + std::min(i, foreign_cum.size() - 1));
    };

    auto make_name = [&](rng::Stream& st, int mcc) {
        std::string name = kNameAdjectives[st.uniform_index(std::size(kNameAdjectives))];
        name += " ";
        name += kNameNouns[st.uniform_index(std::size(kNameNouns))];
        name += " ";
        name += suffix_for_mcc(mcc);
        return name;
    };

    auto add_location = [&](uint32_t merchant_id, uint32_t city_idx, rng::Stream& st) {
        const WorldCity& c = w.cities_[city_idx];
        MerchantLocation loc;
        loc.location_id = static_cast<uint32_t>(w.locations_.size());
        loc.merchant_id = merchant_id;
        loc.city_index = city_idx;
        loc.lat = static_cast<float>(c.lat + st.uniform(-0.15, 0.15));
        loc.lon = static_cast<float>(c.lon + st.uniform(-0.15, 0.15));
        w.locations_.push_back(loc);
    };

    // Coverage pass: one online-capable local merchant per catalog MCC,
    // placed in the largest U.S. cities.
    {
        auto cs = s.fork("coverage", 0);
        uint32_t city = 0;
        for (int mcc : mcc_list) {
            uint32_t id = static_cast<uint32_t>(w.merchants_.size());
            w.merchants_.push_back(
                {id, make_name(cs, mcc), static_cast<uint16_t>(mcc), false, true});
            add_location(id, city % static_cast<uint32_t>(n_us), cs);
            ++city;
        }
    }

    // Multinationals: many locations each, worldwide, mostly online-capable.
    if (cfg.multinational_count > 0 && !multi_mccs.empty()) {
        uint64_t target = std::max<uint64_t>(
            cfg.multinational_count * static_cast<uint64_t>(cfg.min_multinational_locations),
            static_cast<uint64_t>(cfg.multinational_location_share * cfg.total_locations));
        target = std::min<uint64_t>(target, cfg.total_locations - w.locations_.size());

        std::vector<double> raw(cfg.multinational_count);
        double raw_sum = 0;
        auto ms = s.fork("multinational", 0);
        for (auto& r : raw) {
            r = ms.lognormal_from_median(1.0, 0.9);
            raw_sum += r;
        }
        uint64_t extra_total =
            target - cfg.multinational_count * static_cast<uint64_t>(cfg.min_multinational_locations);

        for (uint32_t i = 0; i < cfg.multinational_count; ++i) {
            auto cs = s.fork("multinational", i + 1);
            int mcc = multi_mccs[cs.categorical(multi_weights)];
            uint32_t id = static_cast<uint32_t>(w.merchants_.size());
            std::string name = make_name(cs, mcc) + " Intl";
            bool online = cs.bernoulli(cfg.multinational_online_probability);
            w.merchants_.push_back({id, name, static_cast<uint16_t>(mcc), true, online});

            uint64_t extra = static_cast<uint64_t>(extra_total * raw[i] / raw_sum);
            uint64_t count = cfg.min_multinational_locations + extra;
            for (uint64_t l = 0; l < count && w.locations_.size() < cfg.total_locations; ++l) {
                bool in_us = cs.bernoulli(cfg.us_location_share);
                add_location(id, pick_city(cs, in_us), cs);
            }
        }
    }

    // Local merchants fill the remaining locations.
    {
        auto ls = s.fork("locals", 0);
        uint32_t serial = 0;
        while (w.locations_.size() < cfg.total_locations) {
            auto cs = ls.fork_index(serial++);
            int mcc = mcc_list[cs.categorical(mcc_weights)];
            uint32_t id = static_cast<uint32_t>(w.merchants_.size());
            bool online = cs.bernoulli(cfg.local_online_probability);
            w.merchants_.push_back(
                {id, make_name(cs, mcc), static_cast<uint16_t>(mcc), false, online});
            int locs = cs.bernoulli(0.2) ? 2 : 1;
            bool in_us = cs.bernoulli(cfg.us_location_share);
            uint32_t city = pick_city(cs, in_us);
            for (int l = 0; l < locs && w.locations_.size() < cfg.total_locations; ++l)
                add_location(id, city, cs);
        }
    }

    w.build_indexes();
    return w;
}

std::string MerchantWorld::to_json() const {
    json j;
    j["cities"] = json::array();
    for (const auto& c : cities_)
        j["cities"].push_back({{"city", c.city},
                               {"state", c.state},
                               {"zipcode", c.zipcode},
                               {"country", c.country},
                               {"lat", c.lat},
                               {"lon", c.lon},
                               {"is_us", c.is_us},
                               {"weight", c.weight}});
    j["merchants"] = json::array();
    for (const auto& m : merchants_)
        j["merchants"].push_back({{"id", m.merchant_id},
                                  {"name", m.name},
                                  {"mcc", m.mcc},
                                  {"multinational", m.is_multinational},
                                  {"online", m.has_online}});
    j["locations"] = json::array();
    for (const auto& l : locations_)
        j["locations"].push_back(
            {{"id", l.location_id}, {"merchant", l.merchant_id}, {"city", l.city_index},
             {"lat", l.lat}, {"lon", l.lon}});
    return j.dump();
}

MerchantWorld MerchantWorld::from_json(const std::string& json_text, const Catalog& catalog) {
    json j = json::parse(json_text);
    MerchantWorld w;
    w.catalog_ = &catalog;
    for (const auto& c : j.at("cities"))
        w.cities_.push_back({c.at("city").get<std::string>(), c.at("state").get<std::string>(),
                             c.at("zipcode").get<std::string>(),
                             c.at("country").get<std::string>(), c.at("lat").get<double>(),
                             c.at("lon").get<double>(), c.at("is_us").get<bool>(),
                             c.value("weight", 1.0)});
    for (const auto& m : j.at("merchants"))
        w.merchants_.push_back({m.at("id").get<uint32_t>(), m.at("name").get<std::string>(),
                                m.at("mcc").get<uint16_t>(), m.at("multinational").get<bool>(),
                                m.at("online").get<bool>()});
    for (const auto& l : j.at("locations"))
        w.locations_.push_back({l.at("id").get<uint32_t>(), l.at("merchant").get<uint32_t>(),
                                l.at("city").get<uint32_t>(), l.at("lat").get<float>(),
                                l.at("lon").get<float>()});
    w.build_indexes();
    return w;
}

PreferenceTable instantiate_preferences(const population::ConsumerProfile& profile,
                                        const Catalog& catalog, rng::Stream& s) {
    PreferenceTable table;
    table.items.resize(catalog.items().size());
    for (size_t i = 0; i < catalog.items().size(); ++i) {
        const GoodsServiceItem& it = catalog.item(i);
        auto is = s.fork("gs", static_cast<uint64_t>(i));
        GsPreference& p = table.items[i];
        p.participates = is.bernoulli(it.participation_at(profile.annual_income));
        p.favorite_seed = is.next_u64();
        if (!p.participates) continue;
        p.annual_rate = it.annual_rate_median * std::exp(is.gaussian(0.0, it.rate_log_std));
        double between = std::sqrt(it.amount_spread) * it.amount_log_std;
        double within = std::sqrt(1.0 - it.amount_spread) * it.amount_log_std;
        p.spend_median =
            it.amount_median_at(profile.annual_income) * std::exp(is.gaussian(0.0, between));
        p.spend_log_std = within;
        table.total_rate += p.annual_rate;
    }
    return table;
}

}  // namespace cardsim::world
