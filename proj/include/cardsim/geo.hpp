#pragma once

#include <span>

namespace cardsim::geo {

// One U.S. place; weight is a relative population weight (roughly thousands
// of residents). The table is a compact authored default; a fuller table can
// be supplied through the config file.
struct Place {
    const char* city;
    const char* state;  // two-letter code
    const char* zip;
    double lat;
    double lon;
    double weight;
};

struct ForeignCity {
    const char* city;
    const char* country;
    double lat;
    double lon;
    double weight;
};

std::span<const Place> us_places();
std::span<const ForeignCity> foreign_cities();

std::span<const char* const> male_first_names();
std::span<const char* const> female_first_names();
std::span<const char* const> last_names();
std::span<const char* const> occupations();

double haversine_km(double lat1, double lon1, double lat2, double lon2);

}  // namespace cardsim::geo
