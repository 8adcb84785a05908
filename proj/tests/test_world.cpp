#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "json.hpp"

#include "cardsim/world.hpp"

using namespace cardsim;
using namespace cardsim::world;

namespace {

// Brute-force spatial oracle with its own distance formula.
std::vector<uint32_t> oracle_knn(const MerchantWorld& w, double lat, double lon,
                                 const std::vector<int>& mcc_set, size_t k) {
    auto dist = [&](const MerchantLocation& l) {
        double to_rad = M_PI / 180.0;
        double p1 = lat * to_rad, p2 = l.lat * to_rad;
        double dphi = (l.lat - lat) * to_rad, dlam = (l.lon - lon) * to_rad;
        double a = std::sin(dphi / 2) * std::sin(dphi / 2) +
                   std::cos(p1) * std::cos(p2) * std::sin(dlam / 2) * std::sin(dlam / 2);
        return 2.0 * 6371.0088 * std::asin(std::min(1.0, std::sqrt(a)));
    };
    std::vector<std::pair<double, uint32_t>> all;
    for (const auto& l : w.locations()) {
        int mcc = w.merchant_of(l).mcc;
        if (std::find(mcc_set.begin(), mcc_set.end(), mcc) != mcc_set.end())
            all.push_back({dist(l), l.location_id});
    }
    std::sort(all.begin(), all.end());
    std::vector<uint32_t> out;
    for (size_t i = 0; i < std::min(k, all.size()); ++i) out.push_back(all[i].second);
    return out;
}

// Hand-built two-location world: one restaurant ~1 km from the query point,
// one ~500 km away.
MerchantWorld tiny_world() {
    nlohmann::json j;
    j["cities"] = {{{"city", "Near"}, {"state", "TX"}, {"zipcode", "75000"},
                    {"country", "United States"}, {"lat", 32.0}, {"lon", -96.0}, {"is_us", true}},
                   {{"city", "Far"}, {"state", "CO"}, {"zipcode", "80000"},
                    {"country", "United States"}, {"lat", 36.5}, {"lon", -96.0}, {"is_us", true}}};
    j["merchants"] = {{{"id", 0}, {"name", "Near Diner"}, {"mcc", 5812},
                       {"multinational", false}, {"online", false}},
                      {{"id", 1}, {"name", "Far Diner"}, {"mcc", 5812},
                       {"multinational", false}, {"online", true}}};
    j["locations"] = {{{"id", 0}, {"merchant", 0}, {"city", 0}, {"lat", 32.009}, {"lon", -96.0}},
                      {{"id", 1}, {"merchant", 1}, {"city", 1}, {"lat", 36.5}, {"lon", -96.0}}};
    return MerchantWorld::from_json(j.dump(), Catalog::embedded());
}

}  // namespace

TEST_SUITE("world") {

TEST_CASE("embedded catalog shape") {
    const Catalog& cat = Catalog::embedded();
    CHECK(cat.items().size() >= 95);   // "almost 100 types"
    CHECK(cat.items().size() <= 110);
    for (const auto& it : cat.items()) {
        INFO(it.name);
        CHECK(!it.mccs.empty());
        CHECK(it.annual_rate_median > 0);
        for (int m : it.mccs) CHECK_NOTHROW(cat.mcc_description(m));
        for (int i = 1; i < 5; ++i) CHECK(it.income_knots[i] > it.income_knots[i - 1]);
    }
}

TEST_CASE("paper MCC anchors") {
    const Catalog& cat = Catalog::embedded();
    auto necklace = cat.mccs_for_item("necklace");
    CHECK(std::find(necklace.begin(), necklace.end(), 5311) != necklace.end());
    CHECK(std::find(necklace.begin(), necklace.end(), 5094) != necklace.end());
    auto fastfood = cat.mccs_for_item("fast food meal");
    CHECK(std::find(fastfood.begin(), fastfood.end(), 5814) != fastfood.end());
    auto dry = cat.mccs_for_item("dry cleaning");
    CHECK(dry == std::vector<int>{7210});
    CHECK_THROWS_AS(cat.mccs_for_item("no such item"), LookupError);
}

TEST_CASE("catalog json round trip") {
    const Catalog& cat = Catalog::embedded();
    Catalog back = Catalog::from_json(cat.to_json());
    REQUIRE(back.items().size() == cat.items().size());
    CHECK(back.items()[5].name == cat.items()[5].name);
    CHECK(back.items()[5].amount_median[3] ==
          doctest::Approx(cat.items()[5].amount_median[3]));
}

TEST_CASE("build_world honors multinational floor") {
    WorldConfig cfg;
    cfg.total_locations = 25000;
    cfg.multinational_count = 301;
    cfg.min_multinational_locations = 50;
    auto w = build_world(cfg, 9, Catalog::embedded());

    size_t multi_locs = 0;
    std::set<uint32_t> multi_ids;
    for (const auto& m : w.merchants())
        if (m.is_multinational) multi_ids.insert(m.merchant_id);
    CHECK(multi_ids.size() == 301);
    std::map<uint32_t, size_t> per_merchant;
    for (const auto& l : w.locations()) {
        if (multi_ids.count(l.merchant_id)) {
            ++multi_locs;
            per_merchant[l.merchant_id]++;
        }
    }
    CHECK(multi_locs >= 301u * 50u);
    for (auto [id, c] : per_merchant) CHECK(c >= 50);
    CHECK(w.locations().size() == cfg.total_locations);
    CHECK(w.coverage_gaps().empty());

    // Multinational locations span many countries.
    std::set<std::string> countries;
    for (const auto& l : w.locations())
        if (multi_ids.count(l.merchant_id)) countries.insert(w.cities()[l.city_index].country);
    CHECK(countries.size() >= cfg.min_countries);
}

TEST_CASE("every merchant has a location and every MCC is covered") {
    WorldConfig cfg;
    cfg.total_locations = 5000;
    cfg.multinational_count = 20;
    auto w = build_world(cfg, 10, Catalog::embedded());
    std::set<uint32_t> with_loc;
    for (const auto& l : w.locations()) with_loc.insert(l.merchant_id);
    CHECK(with_loc.size() == w.merchants().size());
    CHECK(w.coverage_gaps().empty());
    // Every catalog MCC also has an online-capable merchant.
    for (const auto& it : Catalog::embedded().items())
        CHECK(!w.online_merchants_for(it.mccs).empty());
}

TEST_CASE("zero multinationals is a valid degenerate config") {
    WorldConfig cfg;
    cfg.total_locations = 2000;
    cfg.multinational_count = 0;
    auto w = build_world(cfg, 11, Catalog::embedded());
    for (const auto& m : w.merchants()) CHECK(!m.is_multinational);
    CHECK(w.locations().size() == 2000);
}

TEST_CASE("infeasible config raises") {
    WorldConfig cfg;
    cfg.total_locations = 100;
    cfg.multinational_count = 301;
    CHECK_THROWS_AS(build_world(cfg, 1, Catalog::embedded()), population::ConfigError);
}

TEST_CASE("nearby ranks by distance") {
    auto w = tiny_world();
    auto res = w.nearby_locations(32.0, -96.0, {5812}, 5);
    REQUIRE(res.size() == 2);
    CHECK(res[0].location_id == 0);
    CHECK(res[0].distance_km < 2.0);
    CHECK(res[1].location_id == 1);
    CHECK(res[1].distance_km > 400.0);

    auto one = w.nearby_locations(32.0, -96.0, {5812}, 1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].location_id == 0);

    CHECK(w.nearby_locations(32.0, -96.0, {9999}, 3).empty());
}

TEST_CASE("grid search equals brute force on a built world") {
    WorldConfig cfg;
    cfg.total_locations = 3000;
    cfg.multinational_count = 10;
    auto w = build_world(cfg, 13, Catalog::embedded());
    auto qs = rng::Stream::derive(15, {rng::PathSeg{"test", 0, "spatial"}});
    const auto& items = Catalog::embedded().items();
    for (int q = 0; q < 40; ++q) {
        double lat = qs.uniform(25.0, 49.0);
        double lon = qs.uniform(-124.0, -67.0);
        const auto& mccs = items[qs.uniform_index(items.size())].mccs;
        size_t k = 1 + qs.uniform_index(8);
        auto mine = w.nearby_locations(lat, lon, mccs, k);
        auto oracle = oracle_knn(w, lat, lon, mccs, k);
        REQUIRE(mine.size() == oracle.size());
        std::set<uint32_t> a, b(oracle.begin(), oracle.end());
        for (const auto& c : mine) a.insert(c.location_id);
        CHECK(a == b);
        // Ranked output is sorted by distance.
        for (size_t i = 1; i < mine.size(); ++i)
            CHECK(mine[i - 1].distance_km <= mine[i].distance_km);
    }
}

TEST_CASE("world json round trip preserves query behavior") {
    WorldConfig cfg;
    cfg.total_locations = 500;
    cfg.multinational_count = 3;
    cfg.min_multinational_locations = 10;
    auto w = build_world(cfg, 17, Catalog::embedded());
    auto back = MerchantWorld::from_json(w.to_json(), Catalog::embedded());
    REQUIRE(back.locations().size() == w.locations().size());
    REQUIRE(back.merchants().size() == w.merchants().size());
    auto a = w.nearby_locations(40.7, -74.0, {5812, 5814}, 6);
    auto b = back.nearby_locations(40.7, -74.0, {5812, 5814}, 6);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].location_id == b[i].location_id);
}

TEST_CASE("preferences: zero participation wipes an item") {
    GoodsServiceItem item;
    item.name = "unwanted";
    item.mccs = {5999};
    for (int i = 0; i < 5; ++i) item.participation[i] = 0.0;
    Catalog cat({item}, {{5999, "Specialty Retail"}});
    population::ConsumerProfile p;
    p.annual_income = 60000;
    for (uint32_t i = 0; i < 50; ++i) {
        auto s = rng::Stream::derive(19, {rng::PathSeg{"consumer", i, "prefs"}});
        auto prefs = instantiate_preferences(p, cat, s);
        CHECK(!prefs.items[0].participates);
    }
}

TEST_CASE("preferences: population mean personal rate matches") {
    GoodsServiceItem item;
    item.name = "weekly thing";
    item.mccs = {5999};
    item.rate_log_std = 0.3;
    // Median chosen so the lognormal mean is 52/yr.
    item.annual_rate_median = 52.0 * std::exp(-0.5 * 0.3 * 0.3);
    Catalog cat({item}, {{5999, "Specialty Retail"}});
    population::ConsumerProfile p;
    p.annual_income = 60000;
    const int n = 4000;
    double total = 0;
    for (uint32_t i = 0; i < n; ++i) {
        auto s = rng::Stream::derive(23, {rng::PathSeg{"consumer", i, "prefs"}});
        auto prefs = instantiate_preferences(p, cat, s);
        REQUIRE(prefs.items[0].participates);
        total += prefs.items[0].annual_rate;
    }
    double sd = 52.0 * std::sqrt(std::exp(0.09) - 1.0);
    CHECK(std::abs(total / n - 52.0) < 4 * sd / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("preferences differ across consumers") {
    population::ConsumerProfile p;
    p.annual_income = 60000;
    auto s1 = rng::Stream::derive(29, {rng::PathSeg{"consumer", 1, "prefs"}});
    auto s2 = rng::Stream::derive(29, {rng::PathSeg{"consumer", 2, "prefs"}});
    auto a = instantiate_preferences(p, Catalog::embedded(), s1);
    auto b = instantiate_preferences(p, Catalog::embedded(), s2);
    int diffs = 0;
    for (size_t i = 0; i < a.items.size(); ++i) {
        if (a.items[i].participates != b.items[i].participates ||
            a.items[i].annual_rate != b.items[i].annual_rate)
            ++diffs;
    }
    CHECK(diffs > 10);
}

TEST_CASE("income curves evaluate piecewise") {
    const Catalog& cat = Catalog::embedded();
    int idx = cat.index_of("fine dining");
    REQUIRE(idx >= 0);
    const auto& it = cat.items()[static_cast<size_t>(idx)];
    CHECK(it.participation_at(10000) == doctest::Approx(it.participation[0]));
    CHECK(it.participation_at(1000000) == doctest::Approx(it.participation[4]));
    CHECK(it.participation_at(240000) > it.participation_at(15000));
    CHECK(it.amount_median_at(240000) > it.amount_median_at(15000));
}

}  // TEST_SUITE
