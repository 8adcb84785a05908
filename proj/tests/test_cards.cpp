#include "doctest.h"

#include <cmath>
#include <set>

#include "cardsim/cards.hpp"

using namespace cardsim;
using namespace cardsim::cards;

namespace {

// Independent brute-force validator: straight Luhn definition, digit by
// digit with explicit doubling.
bool oracle_luhn_valid(const std::string& pan) {
    int sum = 0;
    int pos_from_right = 0;
    for (auto it = pan.rbegin(); it != pan.rend(); ++it, ++pos_from_right) {
        int d = *it - '0';
        if (pos_from_right % 2 == 1) {
            d *= 2;
            if (d > 9) d -= 9;
        }
        sum += d;
    }
    return sum % 10 == 0;
}

population::ConsumerProfile sample_profile() {
    population::ConsumerProfile p;
    p.consumer_id = 77;
    p.birth_date = make_date(1960, 4, 2);
    p.entry_date = make_date(1985, 1, 1);
    p.cards_per_consumer_draw = 3.0;
    p.cards_per_account_draw = 1.5;
    p.credit_limit = 12000;
    p.balance_fraction_of_limit = 0.4;
    p.years_account_open = 9;
    p.years_since_pin_change = 3;
    return p;
}

const population::Horizon kHorizon{make_date(1985, 1, 1), make_date(2020, 12, 31)};

}  // namespace

TEST_SUITE("cards") {

TEST_CASE("luhn check digit basics") {
    CHECK(luhn_check_digit("000000000000000") == '0');
    CHECK_THROWS_AS(luhn_check_digit("00000000000000a"), rng::ParamError);
    CHECK_THROWS_AS(luhn_check_digit("123"), rng::ParamError);
}

TEST_CASE("luhn check digit agrees with a brute-force oracle") {
    std::string body = "799273987131003";
    char mine = luhn_check_digit(body);
    int valid_count = 0;
    char oracle_digit = '?';
    for (char d = '0'; d <= '9'; ++d) {
        if (oracle_luhn_valid(body + d)) {
            ++valid_count;
            oracle_digit = d;
        }
    }
    CHECK(valid_count == 1);
    CHECK(mine == oracle_digit);
}

TEST_CASE("exactly one candidate digit validates for random bodies") {
    auto s = rng::Stream::derive(17, {rng::PathSeg{"test", 0, "luhn"}});
    for (int trial = 0; trial < 1000; ++trial) {
        std::string body;
        for (int i = 0; i < 15; ++i)
            body.push_back(static_cast<char>('0' + s.uniform_index(10)));
        int valid_count = 0;
        char oracle_digit = '?';
        for (char d = '0'; d <= '9'; ++d) {
            if (oracle_luhn_valid(body + d)) {
                ++valid_count;
                oracle_digit = d;
            }
        }
        CHECK(valid_count == 1);
        CHECK(luhn_check_digit(body) == oracle_digit);
        CHECK(luhn_valid(body + oracle_digit));
    }
}

TEST_CASE("degenerate cards-per-consumer draw of 3 gives exactly 3 slots") {
    auto p = sample_profile();
    auto cards = issue_cards(p, CardsConfig{}, kHorizon, 5);
    CHECK(slot_count(cards) == 3);
}

TEST_CASE("every consumer gets at least one card") {
    auto p = sample_profile();
    p.cards_per_consumer_draw = 0.4;
    auto cards = issue_cards(p, CardsConfig{}, kHorizon, 5);
    CHECK(slot_count(cards) == 1);
    p.cards_per_consumer_draw = -2.0;
    cards = issue_cards(p, CardsConfig{}, kHorizon, 5);
    CHECK(slot_count(cards) == 1);
}

TEST_CASE("card invariants: luhn, expiry, continuity, chip era") {
    auto p = sample_profile();
    CardsConfig cfg;
    auto cards = issue_cards(p, cfg, kHorizon, 23);
    Date chip_intro = make_date(cfg.chip_intro_year, 1, 1);
    std::set<std::pair<uint32_t, uint32_t>> seen_ids;
    for (const auto& c : cards) {
        CHECK(c.pan.size() == 16);
        CHECK(luhn_valid(c.pan));
        CHECK(oracle_luhn_valid(c.pan));
        CHECK(c.valid_until > c.acquired_date);
        CHECK(c.acquired_date >= p.entry_date);
        CHECK(c.cvv.size() == 3);
        if (c.acquired_date < chip_intro) CHECK(!c.has_chip);
        seen_ids.insert({c.slot_index, c.reissue_index});
    }
    CHECK(seen_ids.size() == cards.size());

    // Slot 0 covers the whole horizon with no gaps between reissues.
    Date expect = p.entry_date;
    for (const auto& c : cards) {
        if (c.slot_index != 0) continue;
        CHECK(c.acquired_date == expect);
        expect = c.valid_until.plus_days(1);
    }
    CHECK(expect > kHorizon.end);
}

TEST_CASE("pooled cards per consumer matches the distribution") {
    CardsConfig cfg;
    const int n = 2000;
    double total_slots = 0;
    auto seed_stream = rng::Stream::derive(31, {rng::PathSeg{"test", 0, "issue"}});
    for (int i = 0; i < n; ++i) {
        auto p = sample_profile();
        p.consumer_id = static_cast<uint32_t>(i + 1);
        p.cards_per_consumer_draw = seed_stream.gaussian(3.0, 1.0);
        total_slots += slot_count(issue_cards(p, cfg, kHorizon, 31));
    }
    // Rounding to >=1 keeps the mean at 3 within sampling noise.
    CHECK(std::abs(total_slots / n - 3.0) < 4.0 / std::sqrt(n) + 0.02);
}

TEST_CASE("kind mix matches configured shares") {
    CardsConfig cfg;
    const int n = 1500;
    int counts[3] = {0, 0, 0};
    int slots_total = 0;
    for (int i = 0; i < n; ++i) {
        auto p = sample_profile();
        p.consumer_id = static_cast<uint32_t>(i + 1);
        auto cards = issue_cards(p, cfg, kHorizon, 77);
        std::set<uint32_t> seen;
        for (const auto& c : cards) {
            if (seen.insert(c.slot_index).second) {
                counts[static_cast<int>(c.kind)]++;
                ++slots_total;
            }
        }
    }
    double se = 4 * 0.5 / std::sqrt(static_cast<double>(slots_total));
    CHECK(std::abs(counts[0] / double(slots_total) - cfg.credit_share) < se);
    CHECK(std::abs(counts[1] / double(slots_total) - cfg.debit_share) < se);
    CHECK(std::abs(counts[2] / double(slots_total) - cfg.prepaid_share) < se);
}

TEST_CASE("chip_status era behavior") {
    Date intro = make_date(2014, 1, 1);
    auto s = rng::Stream::derive(41, {rng::PathSeg{"test", 0, "chip"}});
    CHECK(!chip_status(make_date(2005, 6, 1), intro, 3.0, s));
    CHECK(chip_status(make_date(2018, 1, 2), intro, 3.0, s));
    CHECK(chip_status(make_date(2014, 1, 1), intro, 0.0, s));

    // Midway through a 3-year ramp: probability 1/2.
    Date mid = make_date(2015, 7, 2);
    int on = 0;
    const int n = 10000;
    for (int i = 0; i < n; ++i) on += chip_status(mid, intro, 3.0, s);
    CHECK(std::abs(on / static_cast<double>(n) - 0.5) < 0.02);
}

}  // TEST_SUITE
