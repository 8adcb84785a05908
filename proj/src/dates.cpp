#include "cardsim/dates.hpp"

#include <cstdlib>

namespace cardsim {

namespace {
bool parse_int(const char* s, int len, int& out) {
    int v = 0;
    for (int i = 0; i < len; ++i) {
        if (s[i] < '0' || s[i] > '9') return false;
        v = v * 10 + (s[i] - '0');
    }
    out = v;
    return true;
}
}  // namespace

bool parse_date(const std::string& s, Date& out) {
    if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
    int y, m, d;
    if (!parse_int(s.data(), 4, y) || !parse_int(s.data() + 5, 2, m) ||
        !parse_int(s.data() + 8, 2, d))
        return false;
    if (m < 1 || m > 12 || d < 1 || d > days_in_month(y, m)) return false;
    out = make_date(y, m, d);
    return true;
}

bool parse_iso_minute(const std::string& s, DateTime& out) {
    if (s.size() != 16 || s[10] != 'T' || s[13] != ':') return false;
    Date d;
    if (!parse_date(s.substr(0, 10), d)) return false;
    int hh, mm;
    if (!parse_int(s.data() + 11, 2, hh) || !parse_int(s.data() + 14, 2, mm)) return false;
    if (hh > 23 || mm > 59) return false;
    out = at_minute(d, hh * 60 + mm);
    return true;
}

}  // namespace cardsim
