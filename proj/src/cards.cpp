#include "cardsim/cards.hpp"

#include <algorithm>
#include <cmath>

namespace cardsim::cards {

namespace {

struct BrandRange {
    const char* name;
    const char* prefix;  // fixed leading digits, rest drawn per card
};

// Classic prefix ranges; the remaining digits are synthetic, so no real
// issuer range is claimed.
const BrandRange kBrands[] = {
    {"Visa", "4"},
    {"Mastercard", "51"},
    {"Mastercard", "55"},
    {"Discover", "6011"},
};

int luhn_sum(const std::string& digits) {
    // Doubled-digit lookup, walking from the rightmost digit.
    static constexpr int doubled[10] = {0, 2, 4, 6, 8, 1, 3, 5, 7, 9};
    int sum = 0;
    bool dbl = false;
    for (size_t i = digits.size(); i > 0; --i) {
        int d = digits[i - 1] - '0';
        sum += dbl ? doubled[d] : d;
        dbl = !dbl;
    }
    return sum;
}

Date end_of_month(int year, int month) {
    return make_date(year, month, days_in_month(year, month));
}

}  // namespace

const char* kind_name(CardKind k) {
    switch (k) {
        case CardKind::Credit: return "credit";
        case CardKind::Debit: return "debit";
        case CardKind::Prepaid: return "prepaid";
    }
    return "?";
}

void CardsConfig::validate(std::vector<std::string>& errors, const std::string& prefix) const {
    double mix = credit_share + debit_share + prepaid_share;
    if (credit_share < 0 || debit_share < 0 || prepaid_share < 0 || mix <= 0)
        errors.push_back(prefix + "kind mix shares must be non-negative with a positive sum");
    if (chip_ramp_years < 0) errors.push_back(prefix + "chip_ramp_years must be >= 0");
    if (card_life_years_mean <= 0) errors.push_back(prefix + "card_life_years_mean must be > 0");
}

char luhn_check_digit(const std::string& pan_body) {
    if (pan_body.size() != 15) throw rng::ParamError("luhn_check_digit: body must be 15 digits");
    for (char c : pan_body)
        if (c < '0' || c > '9') throw rng::ParamError("luhn_check_digit: non-digit input");
    // With the check digit appended, the body's digits sit at doubled
    // positions; summing body + '0' gives the right parity directly.
    int sum = luhn_sum(pan_body + '0');
    return static_cast<char>('0' + (10 - sum % 10) % 10);
}

bool luhn_valid(const std::string& pan) {
    if (pan.empty()) return false;
    for (char c : pan)
        if (c < '0' || c > '9') return false;
    return luhn_sum(pan) % 10 == 0;
}

bool chip_status(Date acquired, Date chip_intro, double ramp_years, rng::Stream& s) {
    if (ramp_years < 0) throw rng::ParamError("chip_status: ramp_years must be >= 0");
    if (acquired < chip_intro) return false;
    double years_in = (acquired.days - chip_intro.days) / 365.25;
    if (ramp_years == 0.0 || years_in >= ramp_years) return true;
    return s.bernoulli(years_in / ramp_years);
}

std::vector<CardAccount> issue_cards(const population::ConsumerProfile& profile,
                                     const CardsConfig& cfg, const population::Horizon& horizon,
                                     uint64_t master_seed) {
    auto s = rng::Stream::derive(master_seed,
                                 {rng::PathSeg{"consumer", profile.consumer_id, "cards"}});
    Date chip_intro = make_date(cfg.chip_intro_year, 1, 1);

    int slots = std::max(1, static_cast<int>(std::lround(profile.cards_per_consumer_draw)));

    // Group slots into accounts by repeatedly drawing a cards-per-account
    // count.
    std::vector<uint32_t> account_of_slot(static_cast<size_t>(slots));
    {
        uint32_t account = 0;
        int filled = 0;
        while (filled < slots) {
            int in_account = std::max(
                1, static_cast<int>(std::lround(s.gaussian(profile.cards_per_account_draw,
                                                           0.25 * profile.cards_per_account_draw))));
            for (int k = 0; k < in_account && filled < slots; ++k)
                account_of_slot[static_cast<size_t>(filled++)] = account;
            ++account;
        }
    }

    const double kind_weights[3] = {cfg.credit_share, cfg.debit_share, cfg.prepaid_share};
    std::vector<CardAccount> out;

    for (int slot = 0; slot < slots; ++slot) {
        auto ss = s.fork("slot", static_cast<uint64_t>(slot));
        CardKind kind = static_cast<CardKind>(ss.categorical(kind_weights));

        // First slot opens at entry; later slots are staggered so account age
        // at the horizon end tracks the years_account_open draw.
        Date first_acquired = profile.entry_date;
        if (slot > 0) {
            double years_open = std::max(
                0.25, ss.gaussian(profile.years_account_open, 0.3 * profile.years_account_open));
            Date target = horizon.end.plus_days(-static_cast<int>(years_open * 365.25));
            first_acquired = std::max(profile.entry_date, std::min(target, horizon.end));
        }

        size_t brand_idx = ss.uniform_index(std::size(kBrands));
        const BrandRange& brand = kBrands[brand_idx];

        Date acquired = first_acquired;
        uint32_t reissue = 0;
        while (acquired <= horizon.end) {
            auto cs = ss.fork("issue", reissue);
            CardAccount card;
            card.consumer_id = profile.consumer_id;
            card.slot_index = static_cast<uint32_t>(slot);
            card.reissue_index = reissue;
            card.account_id = (static_cast<uint64_t>(profile.consumer_id) << 8) |
                              account_of_slot[static_cast<size_t>(slot)];
            card.card_id = (static_cast<uint64_t>(profile.consumer_id) << 16) |
                           (static_cast<uint64_t>(slot) << 8) | reissue;
            card.kind = kind;
            card.brand = brand.name;

            std::string body = brand.prefix;
            while (body.size() < 15)
                body.push_back(static_cast<char>('0' + cs.uniform_index(10)));
            card.pan = body + luhn_check_digit(body);
            card.cvv.clear();
            for (int i = 0; i < 3; ++i)
                card.cvv.push_back(static_cast<char>('0' + cs.uniform_index(10)));

            double life_years = std::max(
                1.0, cs.gaussian(cfg.card_life_years_mean, cfg.card_life_years_std));
            Date expires = acquired.plus_days(static_cast<int>(life_years * 365.25));
            CivilDate ec = to_civil(expires);
            card.expiry_month = ec.month;
            card.expiry_year = ec.year;
            card.valid_until = end_of_month(ec.year, ec.month);
            card.acquired_date = acquired;
            card.has_chip = chip_status(acquired, chip_intro, cfg.chip_ramp_years, cs);

            if (kind == CardKind::Credit) {
                card.credit_limit = profile.credit_limit;
            } else if (kind == CardKind::Prepaid) {
                card.credit_limit = std::max(
                    10.0, cs.gaussian(cfg.prepaid_load_mean, cfg.prepaid_load_std));
            }
            card.balance_fraction = profile.balance_fraction_of_limit;
            card.years_since_pin_change =
                std::min(profile.years_since_pin_change,
                         (horizon.end.days - acquired.days) / 365.25);

            Date next = card.valid_until.plus_days(1);
            out.push_back(std::move(card));
            acquired = next;
            ++reissue;
        }
    }
    return out;
}

int slot_count(const std::vector<CardAccount>& cards) {
    int max_slot = -1;
    for (const auto& c : cards) max_slot = std::max(max_slot, static_cast<int>(c.slot_index));
    return max_slot + 1;
}

}  // namespace cardsim::cards
