#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cardsim/dates.hpp"
#include "cardsim/population.hpp"
#include "cardsim/rng.hpp"

namespace cardsim::cards {

enum class CardKind : uint8_t { Credit, Debit, Prepaid };

const char* kind_name(CardKind k);

struct CardsConfig {
    double credit_share = 0.50;
    double debit_share = 0.40;
    double prepaid_share = 0.10;
    int chip_intro_year = 2014;
    double chip_ramp_years = 3.0;
    double card_life_years_mean = 4.0;
    double card_life_years_std = 0.8;
    double prepaid_load_mean = 250.0;  // prepaid cards carry a load, not a limit
    double prepaid_load_std = 120.0;

    void validate(std::vector<std::string>& errors, const std::string& prefix) const;
};

// One physical card instance. Reissues share account_id and slot_index; the
// PAN, CVV and chip status are per-instance.
struct CardAccount {
    uint64_t card_id = 0;
    uint32_t consumer_id = 0;
    uint64_t account_id = 0;
    uint32_t slot_index = 0;    // stable card slot within the consumer
    uint32_t reissue_index = 0; // 0 = original issue
    CardKind kind = CardKind::Credit;
    std::string brand;
    std::string pan;  // 16 digits, Luhn-valid
    int expiry_month = 1;
    int expiry_year = 2000;
    std::string cvv;  // 3 digits
    bool has_chip = false;
    Date acquired_date{};
    Date valid_until{};  // last day of the expiry month
    double credit_limit = 0.0;  // prepaid: load amount; debit: 0
    double balance_fraction = 0.0;
    double years_since_pin_change = 0.0;
};

// Check digit that makes body + digit Luhn-valid. Body must be 15 decimal
// digits.
char luhn_check_digit(const std::string& pan_body);
bool luhn_valid(const std::string& pan);

// False before the chip introduction date; ramps linearly to certain
// afterwards.
bool chip_status(Date acquired, Date chip_intro, double ramp_years, rng::Stream& s);

// All card instances for one consumer across the horizon, including
// deterministic reissues of expired cards. Cards never expire before the
// horizon ends unless replaced.
std::vector<CardAccount> issue_cards(const population::ConsumerProfile& profile,
                                     const CardsConfig& cfg, const population::Horizon& horizon,
                                     uint64_t master_seed);

// Count of distinct card slots (the "cards per consumer" statistic).
int slot_count(const std::vector<CardAccount>& cards);

}  // namespace cardsim::cards
