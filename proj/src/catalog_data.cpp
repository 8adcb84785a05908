#include <cmath>
#include <initializer_list>

#include "cardsim/world.hpp"

namespace cardsim::world {

namespace {

const MccInfo kMccTable[] = {
    {742, "Veterinary Services"},
    {4111, "Local Commuter Transport"},
    {4112, "Passenger Railways"},
    {4121, "Taxicabs and Rideshare"},
    {4131, "Bus Lines"},
    {4411, "Cruise Lines"},
    {4511, "Airlines"},
    {4722, "Travel Agencies"},
    {4784, "Tolls and Bridge Fees"},
    {4814, "Telecommunication Services"},
    {4899, "Cable and Streaming Services"},
    {4900, "Utilities"},
    {5045, "Computers and Peripherals"},
    {5094, "Precious Stones, Metals and Jewelry"},
    {5200, "Home Supply Warehouse Stores"},
    {5211, "Lumber and Building Materials"},
    {5251, "Hardware Stores"},
    {5261, "Nurseries and Garden Centers"},
    {5300, "Wholesale Clubs"},
    {5310, "Discount Stores"},
    {5311, "Department Stores"},
    {5331, "Variety Stores"},
    {5399, "General Merchandise"},
    {5411, "Grocery Stores and Supermarkets"},
    {5462, "Bakeries"},
    {5499, "Convenience and Specialty Food"},
    {5511, "Car Dealers"},
    {5521, "Used Car Dealers"},
    {5533, "Auto Parts and Accessories"},
    {5541, "Service Stations"},
    {5542, "Automated Fuel Dispensers"},
    {5571, "Motorcycle Dealers"},
    {5611, "Men's Apparel"},
    {5621, "Women's Apparel"},
    {5641, "Children's Apparel"},
    {5651, "Family Apparel"},
    {5661, "Shoe Stores"},
    {5691, "Clothing Stores"},
    {5712, "Furniture Stores"},
    {5713, "Floor Covering Stores"},
    {5719, "Home Furnishings"},
    {5722, "Household Appliances"},
    {5732, "Electronics Stores"},
    {5734, "Computer Software"},
    {5735, "Record and Media Stores"},
    {5812, "Restaurants"},
    {5813, "Bars and Drinking Places"},
    {5814, "Fast Food Restaurants"},
    {5815, "Digital Media"},
    {5816, "Digital Games"},
    {5912, "Drug Stores and Pharmacies"},
    {5921, "Liquor Stores"},
    {5940, "Bicycle Shops"},
    {5941, "Sporting Goods"},
    {5942, "Book Stores"},
    {5943, "Office Supplies"},
    {5944, "Jewelry Stores"},
    {5945, "Toys, Hobby and Games"},
    {5946, "Camera and Photo Supply"},
    {5947, "Gift and Novelty Shops"},
    {5948, "Luggage and Leather Goods"},
    {5964, "Direct Marketing - Catalog"},
    {5965, "Catalog and Online Retail"},
    {5968, "Subscription Merchants"},
    {5970, "Artist and Craft Supplies"},
    {5977, "Cosmetics Stores"},
    {5992, "Florists"},
    {5993, "Cigar and Tobacco Stands"},
    {5994, "News Dealers"},
    {5995, "Pet Shops and Supplies"},
    {5999, "Specialty Retail"},
    {6300, "Insurance"},
    {7011, "Hotels and Lodging"},
    {7210, "Dry Cleaners"},
    {7211, "Laundries"},
    {7221, "Photographic Studios"},
    {7230, "Barber and Beauty Shops"},
    {7251, "Shoe Repair"},
    {7298, "Health and Beauty Spas"},
    {7349, "Cleaning and Maintenance"},
    {7512, "Car Rental"},
    {7523, "Parking Lots and Garages"},
    {7531, "Auto Body Repair"},
    {7538, "Auto Service Shops"},
    {7832, "Movie Theaters"},
    {7922, "Theaters and Concerts"},
    {7941, "Sports Clubs and Events"},
    {7991, "Tourist Attractions and Museums"},
    {7992, "Golf Courses"},
    {7996, "Amusement Parks"},
    {7997, "Membership Clubs and Gyms"},
    {7999, "Recreation Services"},
    {8011, "Doctors"},
    {8021, "Dentists"},
    {8042, "Optometrists"},
    {8043, "Opticians and Eyewear"},
    {8062, "Hospitals"},
    {8099, "Medical Services"},
    {8111, "Legal Services"},
    {8220, "Colleges and Universities"},
    {8351, "Child Care Services"},
    {8398, "Charitable Organizations"},
    {8931, "Accounting and Tax Preparation"},
    {8999, "Professional Services"},
    {9402, "Postal Services"},
    {4215, "Courier Services"},
};

struct GsRow {
    const char* name;
    std::initializer_list<int> mccs;
    double rate;          // annual purchases/yr for a median participant
    double rate_log_std;
    double tod[3];        // morning, afternoon, night
    double wd, we;        // weekday, weekend
    double ctx[3];        // home, vacation, business travel
    double part_lo, part_hi;  // participation at $15k and $240k income
    double amt;           // median $ at $60k income
    double elastic;       // income elasticity of the amount median
    double amt_log_std;
};

// Authored defaults: the catalog schema comes from the virtual-world design;
// every number here is an authored default, overridable via a catalog file.
const GsRow kGsRows[] = {
    // food & drink
    {"groceries", {5411, 5310, 5300}, 104, 0.35, {2, 5, 3}, 1.0, 1.5, {1.0, 0.15, 0.05}, 0.97, 1.0, 62, 0.25, 0.45},
    {"convenience snacks", {5499, 5411}, 55, 0.5, {3, 4, 3}, 1.0, 1.1, {1.0, 0.9, 0.9}, 0.95, 0.9, 9, 0.1, 0.5},
    {"fast food meal", {5814}, 70, 0.5, {2, 5, 4}, 1.0, 1.1, {1.0, 1.1, 1.3}, 0.97, 0.85, 11, 0.1, 0.4},
    {"coffee", {5814, 5812}, 120, 0.6, {8, 3, 1}, 1.0, 0.8, {1.0, 0.9, 1.2}, 0.7, 0.95, 6, 0.15, 0.35},
    {"casual restaurant meal", {5812}, 42, 0.45, {1, 4, 6}, 1.0, 1.5, {1.0, 2.2, 1.8}, 0.8, 1.0, 38, 0.35, 0.5},
    {"fine dining", {5812}, 6, 0.6, {0, 1, 9}, 1.0, 1.6, {1.0, 2.5, 1.6}, 0.25, 0.95, 98, 0.55, 0.45},
    {"bakery treats", {5462}, 16, 0.5, {6, 3, 1}, 1.0, 1.6, {1.0, 0.8, 0.3}, 0.85, 0.95, 12, 0.15, 0.45},
    {"bar drinks", {5813}, 28, 0.7, {1, 2, 8}, 1.0, 2.2, {1.0, 1.8, 1.5}, 0.5, 0.8, 27, 0.3, 0.5},
    {"liquor store purchase", {5921}, 13, 0.55, {1, 4, 4}, 1.0, 1.8, {1.0, 0.5, 0.1}, 0.6, 0.8, 27, 0.3, 0.5},
    {"food delivery", {5812, 5814}, 18, 0.7, {1, 3, 6}, 1.0, 1.3, {1.0, 0.05, 0.4}, 0.55, 0.95, 30, 0.3, 0.4},
    // apparel & personal
    {"everyday clothing", {5651, 5311, 5310}, 10, 0.5, {2, 5, 2}, 1.0, 1.7, {1.0, 0.8, 0.2}, 0.95, 1.0, 52, 0.4, 0.5},
    {"womens apparel", {5621, 5311}, 6, 0.6, {2, 5, 2}, 1.0, 1.7, {1.0, 0.9, 0.2}, 0.5, 0.85, 64, 0.5, 0.55},
    {"mens apparel", {5611, 5311}, 4, 0.6, {2, 5, 2}, 1.0, 1.7, {1.0, 0.7, 0.2}, 0.5, 0.85, 68, 0.5, 0.55},
    {"shoes", {5661, 5311}, 3.5, 0.5, {2, 5, 2}, 1.0, 1.7, {1.0, 0.8, 0.2}, 0.9, 1.0, 72, 0.45, 0.5},
    {"childrens clothing", {5641, 5311}, 5, 0.6, {2, 5, 2}, 1.0, 1.6, {1.0, 0.4, 0.05}, 0.55, 0.6, 38, 0.3, 0.5},
    {"necklace", {5094, 5311, 5944}, 0.3, 0.6, {1, 5, 2}, 1.0, 1.5, {1.0, 1.3, 0.3}, 0.2, 0.85, 150, 0.75, 0.7},
    {"fine jewelry", {5944, 5094}, 0.5, 0.7, {1, 5, 2}, 1.0, 1.5, {1.0, 1.2, 0.3}, 0.15, 0.9, 320, 0.8, 0.7},
    {"watches", {5944, 5311}, 0.25, 0.6, {1, 5, 2}, 1.0, 1.4, {1.0, 1.0, 0.4}, 0.12, 0.8, 210, 0.8, 0.7},
    {"handbags and accessories", {5948, 5311}, 1.5, 0.6, {1, 5, 2}, 1.0, 1.6, {1.0, 1.0, 0.3}, 0.35, 0.85, 82, 0.6, 0.6},
    {"cosmetics", {5977, 5912, 5311}, 8, 0.6, {2, 5, 2}, 1.0, 1.4, {1.0, 0.6, 0.3}, 0.55, 0.85, 28, 0.35, 0.5},
    {"haircut", {7230}, 8, 0.4, {3, 5, 1}, 1.0, 1.5, {1.0, 0.05, 0.05}, 0.9, 1.0, 34, 0.35, 0.4},
    {"salon and spa", {7298, 7230}, 3, 0.6, {3, 5, 1}, 1.0, 1.6, {1.0, 0.6, 0.1}, 0.3, 0.8, 85, 0.5, 0.5},
    {"eyeglasses", {8043, 5999}, 0.5, 0.4, {2, 5, 1}, 1.0, 1.1, {1.0, 0.1, 0.05}, 0.6, 0.95, 180, 0.4, 0.5},
    // home
    {"home improvement supplies", {5200, 5211, 5251}, 8, 0.6, {3, 5, 1}, 1.0, 2.0, {1.0, 0.02, 0.02}, 0.6, 0.95, 46, 0.4, 0.6},
    {"hardware", {5251}, 6, 0.5, {3, 5, 1}, 1.0, 1.8, {1.0, 0.05, 0.05}, 0.7, 0.95, 23, 0.25, 0.55},
    {"garden and nursery", {5261}, 4, 0.6, {4, 5, 0.5}, 1.0, 2.2, {1.0, 0.02, 0.01}, 0.45, 0.85, 37, 0.35, 0.55},
    {"furniture", {5712}, 0.8, 0.6, {1, 5, 1}, 1.0, 1.9, {1.0, 0.02, 0.02}, 0.5, 0.95, 420, 0.6, 0.6},
    {"home appliances", {5722, 5311}, 0.6, 0.5, {1, 5, 1}, 1.0, 1.8, {1.0, 0.01, 0.01}, 0.6, 0.95, 380, 0.5, 0.55},
    {"home furnishings", {5719, 5311}, 3, 0.6, {1, 5, 1}, 1.0, 1.8, {1.0, 0.1, 0.02}, 0.6, 0.95, 54, 0.45, 0.55},
    {"floor covering", {5713}, 0.15, 0.5, {1, 5, 1}, 1.0, 1.5, {1.0, 0.0, 0.0}, 0.3, 0.85, 900, 0.55, 0.6},
    {"house cleaning service", {7349}, 6, 0.5, {5, 4, 0.2}, 1.0, 0.7, {1.0, 0.0, 0.0}, 0.05, 0.75, 110, 0.4, 0.35},
    {"laundry service", {7211}, 8, 0.5, {3, 4, 2}, 1.0, 1.2, {1.0, 0.2, 0.5}, 0.35, 0.35, 17, 0.15, 0.4},
    {"dry cleaning", {7210}, 10, 0.5, {4, 4, 1}, 1.0, 0.7, {1.0, 0.02, 0.6}, 0.25, 0.9, 16, 0.2, 0.35},
    // electronics & media
    {"smartphone", {5732, 5045}, 0.5, 0.4, {1, 5, 2}, 1.0, 1.2, {1.0, 0.3, 0.3}, 0.75, 1.0, 580, 0.35, 0.4},
    {"computer equipment", {5045, 5732}, 0.4, 0.5, {1, 5, 2}, 1.0, 1.2, {1.0, 0.1, 0.3}, 0.4, 0.95, 720, 0.45, 0.5},
    {"software", {5734, 5815}, 2, 0.7, {2, 4, 3}, 1.0, 1.0, {1.0, 0.2, 0.5}, 0.3, 0.9, 44, 0.3, 0.55},
    {"video games", {5816, 5945, 5732}, 4, 0.8, {1, 3, 6}, 1.0, 1.6, {1.0, 0.2, 0.2}, 0.45, 0.6, 39, 0.2, 0.45},
    {"consumer electronics", {5732, 5311}, 1.5, 0.6, {1, 5, 2}, 1.0, 1.5, {1.0, 0.2, 0.2}, 0.7, 0.95, 135, 0.5, 0.6},
    {"camera gear", {5946, 5732}, 0.2, 0.6, {2, 5, 1}, 1.0, 1.4, {1.0, 0.6, 0.2}, 0.15, 0.7, 330, 0.6, 0.6},
    {"music and media", {5735, 5815}, 5, 0.8, {2, 3, 5}, 1.0, 1.3, {1.0, 0.4, 0.4}, 0.55, 0.8, 14, 0.15, 0.5},
    {"books", {5942, 5311}, 6, 0.7, {2, 5, 3}, 1.0, 1.4, {1.0, 0.7, 0.5}, 0.55, 0.95, 19, 0.2, 0.45},
    {"newspapers and magazines", {5994, 5942}, 10, 0.7, {6, 3, 1}, 1.0, 1.1, {1.0, 0.7, 0.8}, 0.5, 0.85, 8, 0.1, 0.4},
    {"office supplies", {5943, 5311}, 4, 0.6, {3, 5, 1}, 1.2, 0.6, {1.0, 0.02, 0.8}, 0.5, 0.9, 21, 0.25, 0.5},
    // transport
    {"gasoline", {5541, 5542}, 55, 0.4, {4, 4, 2}, 1.1, 0.9, {1.0, 1.2, 1.2}, 0.85, 0.95, 33, 0.15, 0.35},
    {"auto repair", {7538, 5533}, 2.5, 0.5, {4, 5, 0.5}, 1.3, 0.5, {1.0, 0.1, 0.05}, 0.75, 0.9, 255, 0.3, 0.6},
    {"auto body work", {7531}, 0.2, 0.4, {4, 5, 0.2}, 1.3, 0.4, {1.0, 0.05, 0.02}, 0.55, 0.85, 780, 0.35, 0.6},
    {"auto parts", {5533}, 2, 0.6, {3, 5, 1}, 1.1, 1.0, {1.0, 0.05, 0.02}, 0.55, 0.7, 52, 0.25, 0.55},
    {"car payment", {5511, 5521}, 0.15, 0.3, {2, 6, 0.5}, 1.2, 0.9, {1.0, 0.0, 0.0}, 0.45, 0.9, 2600, 0.5, 0.5},
    {"bicycles", {5940}, 0.3, 0.5, {2, 6, 0.5}, 1.0, 2.0, {1.0, 0.3, 0.05}, 0.3, 0.7, 180, 0.5, 0.6},
    {"taxi and rideshare", {4121}, 8, 0.9, {2, 3, 5}, 1.0, 1.4, {1.0, 3.0, 3.5}, 0.35, 0.9, 18, 0.25, 0.5},
    {"public transit", {4111, 4131, 4112}, 40, 0.8, {5, 3, 2}, 1.4, 0.4, {1.0, 1.5, 1.5}, 0.5, 0.45, 4, 0.0, 0.4},
    {"parking", {7523}, 15, 0.8, {5, 4, 1}, 1.3, 0.6, {1.0, 1.5, 2.5}, 0.5, 0.85, 9, 0.15, 0.45},
    {"road tolls", {4784}, 12, 0.8, {5, 4, 1}, 1.2, 0.8, {1.0, 1.5, 1.5}, 0.5, 0.8, 5, 0.05, 0.4},
    // travel
    {"airline tickets", {4511}, 1.5, 0.6, {3, 5, 1}, 1.1, 0.8, {1.0, 2.0, 3.0}, 0.25, 0.95, 330, 0.45, 0.5},
    {"hotel stay", {7011}, 2, 0.6, {2, 5, 2}, 1.0, 1.2, {0.15, 3.5, 4.0}, 0.3, 0.95, 225, 0.4, 0.5},
    {"car rental", {7512}, 0.8, 0.6, {4, 4, 1}, 1.0, 1.1, {0.2, 3.0, 3.5}, 0.25, 0.9, 148, 0.3, 0.45},
    {"cruise booking", {4411}, 0.08, 0.5, {2, 6, 1}, 1.0, 1.2, {1.0, 1.5, 0.1}, 0.08, 0.7, 1500, 0.55, 0.5},
    {"train tickets", {4112}, 1, 0.7, {4, 4, 1}, 1.1, 0.9, {0.8, 2.0, 2.5}, 0.3, 0.8, 58, 0.25, 0.5},
    {"travel agency booking", {4722}, 0.3, 0.5, {3, 5, 1}, 1.2, 0.7, {1.0, 0.5, 0.5}, 0.15, 0.8, 440, 0.5, 0.55},
    // health
    {"doctor visit", {8011}, 3, 0.4, {4, 5, 0.2}, 1.4, 0.2, {1.0, 0.05, 0.05}, 0.85, 1.0, 95, 0.25, 0.5},
    {"dentist visit", {8021}, 1.5, 0.4, {4, 5, 0.2}, 1.4, 0.2, {1.0, 0.02, 0.02}, 0.7, 0.98, 160, 0.3, 0.5},
    {"hospital bill", {8062}, 0.3, 0.4, {3, 5, 1}, 1.1, 0.8, {1.0, 0.1, 0.1}, 0.75, 0.9, 700, 0.3, 0.7},
    {"prescription drugs", {5912}, 10, 0.6, {3, 5, 2}, 1.1, 0.8, {1.0, 0.3, 0.2}, 0.9, 0.97, 23, 0.1, 0.5},
    {"pharmacy sundries", {5912}, 14, 0.5, {3, 5, 2}, 1.0, 1.0, {1.0, 0.5, 0.4}, 0.9, 0.97, 13, 0.1, 0.45},
    {"optometrist visit", {8042}, 0.5, 0.4, {4, 5, 0.2}, 1.3, 0.3, {1.0, 0.02, 0.02}, 0.5, 0.9, 120, 0.3, 0.45},
    {"medical services", {8099, 8011}, 1, 0.5, {4, 5, 0.2}, 1.3, 0.3, {1.0, 0.05, 0.05}, 0.6, 0.9, 140, 0.3, 0.6},
    {"veterinary care", {742}, 1.2, 0.5, {4, 5, 0.2}, 1.2, 0.7, {1.0, 0.0, 0.0}, 0.4, 0.65, 110, 0.3, 0.6},
    {"pet supplies", {5995, 5411}, 8, 0.6, {2, 5, 2}, 1.0, 1.3, {1.0, 0.02, 0.02}, 0.4, 0.65, 31, 0.2, 0.5},
    {"gym membership", {7997, 7941}, 12, 0.3, {4, 3, 3}, 1.1, 0.9, {1.0, 0.05, 0.2}, 0.25, 0.8, 40, 0.25, 0.3},
    // recreation
    {"movie tickets", {7832}, 4, 0.6, {0.5, 3, 7}, 1.0, 2.4, {1.0, 1.2, 0.5}, 0.75, 0.9, 14, 0.1, 0.35},
    {"concerts and theater", {7922}, 1.2, 0.6, {0.2, 2, 8}, 1.0, 2.2, {1.0, 1.5, 0.5}, 0.3, 0.9, 74, 0.5, 0.5},
    {"sporting events", {7941}, 1, 0.6, {0.5, 4, 6}, 1.0, 2.0, {1.0, 1.2, 0.8}, 0.35, 0.85, 60, 0.45, 0.5},
    {"museums and attractions", {7991}, 1.5, 0.6, {2, 6, 1}, 1.0, 2.2, {1.0, 4.0, 0.8}, 0.4, 0.9, 21, 0.25, 0.45},
    {"amusement park", {7996}, 0.6, 0.6, {3, 6, 1}, 1.0, 2.5, {1.0, 4.5, 0.2}, 0.4, 0.8, 92, 0.3, 0.4},
    {"golf", {7992}, 2, 0.8, {5, 4, 0.2}, 1.0, 2.2, {1.0, 2.0, 1.5}, 0.1, 0.75, 54, 0.5, 0.45},
    {"recreation classes", {7999}, 2, 0.6, {3, 5, 2}, 1.0, 1.5, {1.0, 0.5, 0.1}, 0.3, 0.75, 34, 0.3, 0.45},
    {"sporting goods", {5941}, 2.5, 0.6, {2, 5, 1}, 1.0, 1.8, {1.0, 0.5, 0.1}, 0.5, 0.85, 46, 0.4, 0.55},
    {"camping and outdoor gear", {5941}, 0.7, 0.6, {2, 5, 1}, 1.0, 1.9, {1.0, 0.8, 0.05}, 0.3, 0.7, 84, 0.45, 0.55},
    {"toys and games", {5945, 5311}, 3, 0.6, {1, 5, 2}, 1.0, 1.8, {1.0, 0.5, 0.1}, 0.6, 0.8, 29, 0.25, 0.5},
    {"hobby supplies", {5945, 5970}, 2, 0.7, {2, 5, 2}, 1.0, 1.6, {1.0, 0.3, 0.05}, 0.35, 0.7, 26, 0.25, 0.5},
    {"craft supplies", {5970}, 1.5, 0.7, {2, 5, 1}, 1.0, 1.7, {1.0, 0.2, 0.02}, 0.3, 0.6, 22, 0.2, 0.5},
    {"streaming subscription", {5815, 4899}, 12, 0.3, {2, 3, 5}, 1.0, 1.0, {1.0, 0.0, 0.0}, 0.45, 0.95, 13, 0.1, 0.25},
    {"gifts and novelty", {5947, 5311}, 4, 0.6, {1, 5, 2}, 1.0, 1.7, {1.0, 2.0, 0.5}, 0.75, 0.95, 27, 0.3, 0.5},
    {"flowers", {5992}, 1.5, 0.6, {3, 5, 1}, 1.1, 1.0, {1.0, 0.3, 0.3}, 0.45, 0.85, 42, 0.3, 0.45},
    {"photo services", {7221}, 0.4, 0.5, {3, 5, 0.5}, 1.0, 1.6, {1.0, 0.3, 0.1}, 0.3, 0.7, 115, 0.35, 0.5},
    // services & bills
    {"phone bill", {4814}, 12, 0.2, {3, 5, 2}, 1.1, 0.8, {1.0, 0.0, 0.0}, 0.95, 1.0, 74, 0.2, 0.25},
    {"cable and internet", {4899}, 12, 0.2, {3, 5, 2}, 1.1, 0.8, {1.0, 0.0, 0.0}, 0.8, 0.97, 84, 0.2, 0.25},
    {"utility bill", {4900}, 12, 0.2, {4, 5, 1}, 1.1, 0.8, {1.0, 0.0, 0.0}, 0.9, 1.0, 128, 0.2, 0.3},
    {"insurance premium", {6300}, 6, 0.3, {4, 5, 1}, 1.2, 0.6, {1.0, 0.0, 0.0}, 0.75, 0.98, 178, 0.35, 0.4},
    {"childcare", {8351}, 10, 0.4, {6, 3, 0.2}, 1.5, 0.1, {1.0, 0.0, 0.0}, 0.2, 0.35, 310, 0.35, 0.4},
    {"tuition payment", {8220}, 0.3, 0.3, {3, 6, 1}, 1.2, 0.6, {1.0, 0.0, 0.0}, 0.15, 0.6, 1800, 0.5, 0.6},
    {"professional services", {8999}, 1, 0.6, {4, 5, 0.5}, 1.3, 0.4, {1.0, 0.02, 0.2}, 0.3, 0.85, 200, 0.5, 0.6},
    {"legal services", {8111}, 0.2, 0.5, {4, 5, 0.2}, 1.4, 0.2, {1.0, 0.0, 0.05}, 0.2, 0.75, 350, 0.5, 0.6},
    {"tax preparation", {8931}, 0.5, 0.3, {3, 6, 0.5}, 1.2, 0.6, {1.0, 0.0, 0.02}, 0.4, 0.9, 175, 0.4, 0.5},
    {"postage and shipping", {9402, 4215}, 5, 0.6, {4, 5, 0.2}, 1.3, 0.4, {1.0, 0.1, 0.3}, 0.7, 0.9, 11, 0.1, 0.5},
    {"charitable donation", {8398}, 2, 0.7, {3, 5, 2}, 1.0, 1.2, {1.0, 0.1, 0.1}, 0.35, 0.9, 58, 0.6, 0.6},
    {"online marketplace order", {5964, 5965, 5999}, 15, 0.7, {2, 4, 5}, 1.0, 1.1, {1.0, 0.3, 0.5}, 0.6, 0.97, 41, 0.3, 0.55},
    {"subscription box", {5968}, 4, 0.5, {2, 4, 4}, 1.0, 1.0, {1.0, 0.0, 0.0}, 0.15, 0.6, 34, 0.25, 0.35},
    {"tobacco", {5993, 5499}, 10, 0.8, {3, 4, 3}, 1.0, 1.0, {1.0, 0.6, 0.6}, 0.3, 0.15, 14, 0.0, 0.4},
    {"shoe repair", {7251}, 0.3, 0.5, {3, 5, 0.5}, 1.2, 0.6, {1.0, 0.02, 0.1}, 0.25, 0.6, 19, 0.2, 0.4},
    {"variety store finds", {5331, 5399}, 9, 0.6, {2, 5, 2}, 1.0, 1.4, {1.0, 0.6, 0.2}, 0.9, 0.6, 12, 0.0, 0.5},
    {"wholesale club run", {5300}, 9, 0.5, {2, 6, 1}, 1.0, 1.8, {1.0, 0.02, 0.02}, 0.35, 0.9, 120, 0.3, 0.4},
    {"department store shopping", {5311}, 5, 0.6, {1, 5, 2}, 1.0, 1.8, {1.0, 0.8, 0.3}, 0.8, 0.95, 58, 0.4, 0.55},
};

Catalog build_embedded() {
    std::vector<GoodsServiceItem> items;
    items.reserve(std::size(kGsRows));
    for (const GsRow& r : kGsRows) {
        GoodsServiceItem it;
        it.name = r.name;
        it.mccs.assign(r.mccs.begin(), r.mccs.end());
        it.annual_rate_median = r.rate;
        it.rate_log_std = r.rate_log_std;
        for (int i = 0; i < 3; ++i) it.time_of_day[i] = r.tod[i];
        it.weekday_weekend[0] = r.wd;
        it.weekday_weekend[1] = r.we;
        for (int i = 0; i < 3; ++i) it.context[i] = r.ctx[i];
        // Participation linear in log-income between the outer knots; amounts
        // follow a power law in income with the item's elasticity.
        double log_lo = std::log(it.income_knots[0]);
        double log_hi = std::log(it.income_knots[4]);
        for (int i = 0; i < 5; ++i) {
            double t = (std::log(it.income_knots[i]) - log_lo) / (log_hi - log_lo);
            it.participation[i] = r.part_lo + t * (r.part_hi - r.part_lo);
            it.amount_median[i] = r.amt * std::pow(it.income_knots[i] / 60000.0, r.elastic);
        }
        it.amount_log_std = r.amt_log_std;
        it.amount_spread = 0.5;
        items.push_back(std::move(it));
    }
    std::vector<MccInfo> mccs(std::begin(kMccTable), std::end(kMccTable));
    return Catalog(std::move(items), std::move(mccs));
}

}  // namespace

const Catalog& Catalog::embedded() {
    static const Catalog catalog = build_embedded();
    return catalog;
}

}  // namespace cardsim::world
