#include "doctest.h"

#include "cardsim/dates.hpp"

using namespace cardsim;

TEST_SUITE("dates") {

TEST_CASE("civil round trip across the simulation horizon") {
    // 1980-01-01 .. 2030-12-31 covers every date the simulator can emit.
    Date d = make_date(1980, 1, 1);
    Date end = make_date(2030, 12, 31);
    int32_t prev = d.days - 1;
    while (d <= end) {
        CivilDate c = to_civil(d);
        CHECK(days_from_civil(c.year, c.month, c.day) == d.days);
        CHECK(d.days == prev + 1);
        prev = d.days;
        d = d.plus_days(1);
    }
}

TEST_CASE("known anchors") {
    CHECK(make_date(1970, 1, 1).days == 0);
    CHECK(day_of_week(make_date(1970, 1, 1)) == 4);  // Thursday
    CHECK(day_of_week(make_date(2014, 10, 1)) == 3); // Wednesday
    CHECK(is_weekend(make_date(2020, 2, 29)));
    CHECK(!is_weekend(make_date(2020, 3, 2)));
}

TEST_CASE("birthday handles leap years") {
    Date born = make_date(1992, 2, 29);
    CHECK(format_date(birthday(born, 18)) == "2010-02-28");
    CHECK(format_date(birthday(born, 20)) == "2012-02-29");
}

TEST_CASE("iso minute format and parse") {
    DateTime t = at_minute(make_date(2016, 7, 4), 13 * 60 + 5);
    CHECK(format_iso_minute(t) == "2016-07-04T13:05");
    DateTime back{};
    REQUIRE(parse_iso_minute("2016-07-04T13:05", back));
    CHECK(back.minutes == t.minutes);
    CHECK(!parse_iso_minute("2016-07-04 13:05", back));
    CHECK(!parse_iso_minute("2016-13-04T13:05", back));
    Date d{};
    CHECK(parse_date("1985-01-01", d));
    CHECK(!parse_date("1985-02-30", d));
}

}  // TEST_SUITE
