#include "cardsim/geo.hpp"

#include <algorithm>
#include <cmath>

namespace cardsim::geo {

namespace {

// Authored default table of U.S. places: major cities and state capitals for
// all 50 states plus DC. Coordinates and population weights are approximate;
// zipcodes are a representative central zip for the city.
const Place kUsPlaces[] = {
    {"New York", "NY", "10001", 40.71, -74.01, 8400},
    {"Brooklyn", "NY", "11201", 40.69, -73.99, 2600},
    {"Queens", "NY", "11354", 40.75, -73.80, 2300},
    {"Buffalo", "NY", "14202", 42.89, -78.88, 278},
    {"Rochester", "NY", "14604", 43.16, -77.61, 211},
    {"Yonkers", "NY", "10701", 40.93, -73.90, 200},
    {"Syracuse", "NY", "13202", 43.05, -76.15, 148},
    {"Albany", "NY", "12207", 42.65, -73.75, 98},
    {"Ithaca", "NY", "14850", 42.44, -76.50, 31},
    {"White Plains", "NY", "10601", 41.03, -73.76, 58},
    {"Utica", "NY", "13502", 43.10, -75.23, 60},
    {"Binghamton", "NY", "13901", 42.10, -75.91, 45},
    {"Saratoga Springs", "NY", "12866", 43.08, -73.78, 28},
    {"Los Angeles", "CA", "90012", 34.05, -118.24, 3970},
    {"San Diego", "CA", "92101", 32.72, -117.16, 1420},
    {"San Jose", "CA", "95113", 37.34, -121.89, 1030},
    {"San Francisco", "CA", "94102", 37.77, -122.42, 880},
    {"Fresno", "CA", "93721", 36.74, -119.79, 530},
    {"Sacramento", "CA", "95814", 38.58, -121.49, 500},
    {"Long Beach", "CA", "90802", 33.77, -118.19, 470},
    {"Oakland", "CA", "94612", 37.80, -122.27, 430},
    {"Bakersfield", "CA", "93301", 35.37, -119.02, 380},
    {"Anaheim", "CA", "92805", 33.84, -117.91, 350},
    {"Santa Ana", "CA", "92701", 33.75, -117.87, 330},
    {"Riverside", "CA", "92501", 33.98, -117.37, 330},
    {"Stockton", "CA", "95202", 37.96, -121.29, 310},
    {"Irvine", "CA", "92618", 33.68, -117.77, 280},
    {"Chula Vista", "CA", "91910", 32.64, -117.08, 270},
    {"Fremont", "CA", "94538", 37.55, -121.99, 230},
    {"San Bernardino", "CA", "92401", 34.11, -117.29, 220},
    {"Modesto", "CA", "95354", 37.64, -120.99, 215},
    {"Fontana", "CA", "92335", 34.09, -117.44, 210},
    {"Oxnard", "CA", "93030", 34.20, -119.18, 210},
    {"Santa Rosa", "CA", "95404", 38.44, -122.71, 178},
    {"Salinas", "CA", "93901", 36.68, -121.66, 157},
    {"Pasadena", "CA", "91101", 34.15, -118.14, 140},
    {"Berkeley", "CA", "94704", 37.87, -122.27, 121},
    {"Carlsbad", "CA", "92008", 33.16, -117.35, 115},
    {"Temecula", "CA", "92590", 33.49, -117.15, 110},
    {"Santa Barbara", "CA", "93101", 34.42, -119.70, 92},
    {"Napa", "CA", "94559", 38.30, -122.29, 79},
    {"Palm Springs", "CA", "92262", 33.83, -116.55, 48},
    {"South Lake Tahoe", "CA", "96150", 38.94, -119.98, 22},
    {"Chicago", "IL", "60602", 41.88, -87.63, 2710},
    {"Aurora", "IL", "60505", 41.76, -88.32, 200},
    {"Naperville", "IL", "60540", 41.79, -88.15, 148},
    {"Joliet", "IL", "60432", 41.53, -88.08, 148},
    {"Rockford", "IL", "61104", 42.27, -89.09, 147},
    {"Springfield", "IL", "62701", 39.80, -89.64, 115},
    {"Peoria", "IL", "61602", 40.69, -89.59, 113},
    {"Houston", "TX", "77002", 29.76, -95.37, 2320},
    {"San Antonio", "TX", "78205", 29.42, -98.49, 1530},
    {"Dallas", "TX", "75201", 32.78, -96.80, 1340},
    {"Austin", "TX", "78701", 30.27, -97.74, 960},
    {"Fort Worth", "TX", "76102", 32.76, -97.33, 890},
    {"El Paso", "TX", "79901", 31.76, -106.49, 680},
    {"Arlington", "TX", "76010", 32.74, -97.11, 400},
    {"Corpus Christi", "TX", "78401", 27.80, -97.40, 330},
    {"Plano", "TX", "75074", 33.02, -96.70, 290},
    {"Laredo", "TX", "78040", 27.51, -99.51, 260},
    {"Lubbock", "TX", "79401", 33.58, -101.86, 255},
    {"Garland", "TX", "75040", 32.91, -96.64, 240},
    {"Irving", "TX", "75060", 32.81, -96.95, 240},
    {"Amarillo", "TX", "79101", 35.21, -101.84, 200},
    {"Grand Prairie", "TX", "75050", 32.75, -96.99, 195},
    {"Brownsville", "TX", "78520", 25.90, -97.50, 185},
    {"McKinney", "TX", "75069", 33.20, -96.62, 180},
    {"Frisco", "TX", "75034", 33.15, -96.82, 180},
    {"Waco", "TX", "76701", 31.55, -97.15, 139},
    {"Midland", "TX", "79701", 32.00, -102.08, 132},
    {"College Station", "TX", "77840", 30.63, -96.33, 120},
    {"Round Rock", "TX", "78664", 30.51, -97.68, 120},
    {"Beaumont", "TX", "77701", 30.08, -94.10, 118},
    {"Galveston", "TX", "77550", 29.30, -94.80, 50},
    {"Phoenix", "AZ", "85003", 33.45, -112.07, 1660},
    {"Tucson", "AZ", "85701", 32.22, -110.97, 545},
    {"Mesa", "AZ", "85201", 33.42, -111.83, 500},
    {"Chandler", "AZ", "85225", 33.31, -111.84, 260},
    {"Scottsdale", "AZ", "85251", 33.49, -111.93, 255},
    {"Glendale", "AZ", "85301", 33.54, -112.19, 250},
    {"Gilbert", "AZ", "85234", 33.35, -111.79, 250},
    {"Tempe", "AZ", "85281", 33.43, -111.94, 190},
    {"Flagstaff", "AZ", "86001", 35.20, -111.65, 76},
    {"Sedona", "AZ", "86336", 34.87, -111.76, 10},
    {"Philadelphia", "PA", "19107", 39.95, -75.17, 1580},
    {"Pittsburgh", "PA", "15222", 40.44, -80.00, 303},
    {"Allentown", "PA", "18101", 40.60, -75.47, 121},
    {"Erie", "PA", "16501", 42.13, -80.09, 96},
    {"Reading", "PA", "19601", 40.34, -75.93, 88},
    {"Scranton", "PA", "18503", 41.41, -75.66, 77},
    {"Bethlehem", "PA", "18015", 40.63, -75.37, 76},
    {"Lancaster", "PA", "17602", 40.04, -76.31, 59},
    {"Harrisburg", "PA", "17101", 40.27, -76.89, 49},
    {"Jacksonville", "FL", "32202", 30.33, -81.66, 900},
    {"Miami", "FL", "33131", 25.76, -80.19, 460},
    {"Tampa", "FL", "33602", 27.95, -82.46, 390},
    {"Orlando", "FL", "32801", 28.54, -81.38, 285},
    {"St. Petersburg", "FL", "33701", 27.77, -82.64, 265},
    {"Hialeah", "FL", "33010", 25.86, -80.28, 235},
    {"Tallahassee", "FL", "32301", 30.44, -84.28, 195},
    {"Port St. Lucie", "FL", "34952", 27.29, -80.35, 190},
    {"Cape Coral", "FL", "33904", 26.56, -81.95, 190},
    {"Fort Lauderdale", "FL", "33301", 26.12, -80.14, 182},
    {"Pembroke Pines", "FL", "33024", 26.01, -80.30, 170},
    {"Hollywood", "FL", "33020", 26.01, -80.15, 153},
    {"Gainesville", "FL", "32601", 29.65, -82.32, 133},
    {"Miami Gardens", "FL", "33056", 25.94, -80.25, 110},
    {"Daytona Beach", "FL", "32114", 29.21, -81.02, 69},
    {"Sarasota", "FL", "34236", 27.34, -82.53, 58},
    {"Pensacola", "FL", "32501", 30.42, -87.22, 54},
    {"Key West", "FL", "33040", 24.56, -81.78, 26},
    {"Naples", "FL", "34102", 26.14, -81.79, 22},
    {"Columbus", "OH", "43215", 39.96, -83.00, 900},
    {"Cleveland", "OH", "44113", 41.50, -81.69, 385},
    {"Cincinnati", "OH", "45202", 39.10, -84.51, 302},
    {"Toledo", "OH", "43604", 41.65, -83.54, 275},
    {"Akron", "OH", "44308", 41.08, -81.52, 198},
    {"Dayton", "OH", "45402", 39.76, -84.19, 140},
    {"Charlotte", "NC", "28202", 35.23, -80.84, 875},
    {"Raleigh", "NC", "27601", 35.78, -78.64, 470},
    {"Greensboro", "NC", "27401", 36.07, -79.79, 295},
    {"Durham", "NC", "27701", 35.99, -78.90, 275},
    {"Winston-Salem", "NC", "27101", 36.10, -80.24, 245},
    {"Fayetteville", "NC", "28301", 35.05, -78.88, 210},
    {"Asheville", "NC", "28801", 35.59, -82.55, 94},
    {"Chapel Hill", "NC", "27514", 35.91, -79.06, 62},
    {"Indianapolis", "IN", "46204", 39.77, -86.16, 870},
    {"Fort Wayne", "IN", "46802", 41.08, -85.14, 265},
    {"Evansville", "IN", "47708", 37.97, -87.57, 118},
    {"South Bend", "IN", "46601", 41.68, -86.25, 102},
    {"Seattle", "WA", "98104", 47.60, -122.33, 745},
    {"Spokane", "WA", "99201", 47.66, -117.43, 220},
    {"Tacoma", "WA", "98402", 47.25, -122.44, 215},
    {"Vancouver", "WA", "98660", 45.63, -122.67, 180},
    {"Bellevue", "WA", "98004", 47.61, -122.20, 145},
    {"Olympia", "WA", "98501", 47.04, -122.90, 52},
    {"Denver", "CO", "80202", 39.74, -104.99, 715},
    {"Colorado Springs", "CO", "80903", 38.83, -104.82, 478},
    {"Aurora", "CO", "80010", 39.73, -104.83, 380},
    {"Fort Collins", "CO", "80521", 40.59, -105.08, 170},
    {"Lakewood", "CO", "80226", 39.70, -105.08, 155},
    {"Boulder", "CO", "80302", 40.01, -105.27, 108},
    {"Aspen", "CO", "81611", 39.19, -106.82, 7},
    {"Vail", "CO", "81657", 39.64, -106.37, 5},
    {"Washington", "DC", "20001", 38.91, -77.02, 705},
    {"Boston", "MA", "02108", 42.36, -71.06, 690},
    {"Worcester", "MA", "01608", 42.26, -71.80, 185},
    {"Springfield", "MA", "01103", 42.10, -72.59, 155},
    {"Cambridge", "MA", "02139", 42.37, -71.11, 118},
    {"Lowell", "MA", "01852", 42.63, -71.32, 111},
    {"Nashville", "TN", "37203", 36.16, -86.78, 690},
    {"Memphis", "TN", "38103", 35.15, -90.05, 633},
    {"Knoxville", "TN", "37902", 35.96, -83.92, 190},
    {"Chattanooga", "TN", "37402", 35.05, -85.31, 182},
    {"Detroit", "MI", "48226", 42.33, -83.05, 640},
    {"Grand Rapids", "MI", "49503", 42.96, -85.66, 200},
    {"Warren", "MI", "48089", 42.49, -83.01, 135},
    {"Ann Arbor", "MI", "48104", 42.28, -83.74, 122},
    {"Lansing", "MI", "48933", 42.73, -84.56, 118},
    {"Flint", "MI", "48502", 43.01, -83.69, 95},
    {"Oklahoma City", "OK", "73102", 35.47, -97.52, 680},
    {"Tulsa", "OK", "74103", 36.15, -95.99, 413},
    {"Norman", "OK", "73069", 35.22, -97.44, 128},
    {"Portland", "OR", "97204", 45.52, -122.68, 650},
    {"Salem", "OR", "97301", 44.94, -123.04, 178},
    {"Eugene", "OR", "97401", 44.05, -123.09, 175},
    {"Gresham", "OR", "97030", 45.50, -122.43, 114},
    {"Bend", "OR", "97701", 44.06, -121.31, 100},
    {"Las Vegas", "NV", "89101", 36.17, -115.14, 650},
    {"Henderson", "NV", "89015", 36.04, -114.98, 320},
    {"Reno", "NV", "89501", 39.53, -119.81, 265},
    {"North Las Vegas", "NV", "89030", 36.20, -115.12, 262},
    {"Carson City", "NV", "89701", 39.16, -119.77, 58},
    {"Louisville", "KY", "40202", 38.25, -85.76, 630},
    {"Lexington", "KY", "40507", 38.05, -84.50, 323},
    {"Bowling Green", "KY", "42101", 36.99, -86.44, 72},
    {"Frankfort", "KY", "40601", 38.20, -84.87, 28},
    {"Baltimore", "MD", "21202", 39.29, -76.61, 585},
    {"Columbia", "MD", "21044", 39.20, -76.86, 105},
    {"Frederick", "MD", "21701", 39.41, -77.41, 78},
    {"Annapolis", "MD", "21401", 38.98, -76.49, 40},
    {"Milwaukee", "WI", "53202", 43.04, -87.91, 577},
    {"Madison", "WI", "53703", 43.07, -89.40, 270},
    {"Green Bay", "WI", "54301", 44.51, -88.02, 107},
    {"Kenosha", "WI", "53140", 42.58, -87.82, 100},
    {"Albuquerque", "NM", "87102", 35.08, -106.65, 565},
    {"Las Cruces", "NM", "88001", 32.31, -106.78, 103},
    {"Rio Rancho", "NM", "87124", 35.23, -106.66, 100},
    {"Santa Fe", "NM", "87501", 35.69, -105.94, 85},
    {"Kansas City", "MO", "64106", 39.10, -94.58, 510},
    {"St. Louis", "MO", "63101", 38.63, -90.20, 300},
    {"Springfield", "MO", "65806", 37.22, -93.29, 169},
    {"Columbia", "MO", "65201", 38.95, -92.33, 126},
    {"Independence", "MO", "64050", 39.09, -94.42, 117},
    {"Jefferson City", "MO", "65101", 38.58, -92.17, 43},
    {"Branson", "MO", "65616", 36.64, -93.22, 12},
    {"Atlanta", "GA", "30303", 33.75, -84.39, 500},
    {"Columbus", "GA", "31901", 32.46, -84.99, 206},
    {"Augusta", "GA", "30901", 33.47, -81.97, 202},
    {"Macon", "GA", "31201", 32.84, -83.63, 153},
    {"Savannah", "GA", "31401", 32.08, -81.09, 147},
    {"Athens", "GA", "30601", 33.96, -83.38, 127},
    {"Omaha", "NE", "68102", 41.26, -95.94, 486},
    {"Lincoln", "NE", "68508", 40.81, -96.70, 291},
    {"Bellevue", "NE", "68005", 41.14, -95.91, 64},
    {"Virginia Beach", "VA", "23451", 36.85, -75.98, 450},
    {"Chesapeake", "VA", "23320", 36.77, -76.29, 250},
    {"Norfolk", "VA", "23510", 36.85, -76.29, 238},
    {"Arlington", "VA", "22201", 38.88, -77.10, 235},
    {"Richmond", "VA", "23219", 37.54, -77.44, 230},
    {"Newport News", "VA", "23601", 37.07, -76.49, 180},
    {"Alexandria", "VA", "22314", 38.80, -77.05, 160},
    {"Minneapolis", "MN", "55401", 44.98, -93.27, 430},
    {"St. Paul", "MN", "55102", 44.94, -93.09, 310},
    {"Rochester", "MN", "55902", 44.02, -92.47, 120},
    {"Bloomington", "MN", "55420", 44.84, -93.30, 90},
    {"Duluth", "MN", "55802", 46.79, -92.10, 86},
    {"Wichita", "KS", "67202", 37.69, -97.34, 397},
    {"Overland Park", "KS", "66204", 38.98, -94.67, 197},
    {"Kansas City", "KS", "66101", 39.11, -94.63, 155},
    {"Topeka", "KS", "66603", 39.05, -95.68, 125},
    {"New Orleans", "LA", "70112", 29.95, -90.07, 390},
    {"Baton Rouge", "LA", "70801", 30.45, -91.15, 227},
    {"Shreveport", "LA", "71101", 32.51, -93.75, 188},
    {"Lafayette", "LA", "70501", 30.22, -92.02, 126},
    {"Lake Charles", "LA", "70601", 30.23, -93.22, 78},
    {"Honolulu", "HI", "96813", 21.31, -157.86, 345},
    {"Hilo", "HI", "96720", 19.71, -155.08, 45},
    {"Kailua", "HI", "96734", 21.39, -157.74, 40},
    {"Anchorage", "AK", "99501", 61.22, -149.90, 290},
    {"Fairbanks", "AK", "99701", 64.84, -147.72, 32},
    {"Juneau", "AK", "99801", 58.30, -134.42, 32},
    {"Newark", "NJ", "07102", 40.74, -74.17, 282},
    {"Jersey City", "NJ", "07302", 40.72, -74.04, 265},
    {"Paterson", "NJ", "07505", 40.92, -74.17, 146},
    {"Elizabeth", "NJ", "07201", 40.66, -74.21, 130},
    {"Edison", "NJ", "08817", 40.52, -74.41, 100},
    {"Trenton", "NJ", "08608", 40.22, -74.76, 84},
    {"Little Rock", "AR", "72201", 34.75, -92.29, 198},
    {"Fayetteville", "AR", "72701", 36.06, -94.16, 90},
    {"Fort Smith", "AR", "72901", 35.39, -94.42, 88},
    {"Jonesboro", "AR", "72401", 35.84, -90.70, 76},
    {"Salt Lake City", "UT", "84101", 40.76, -111.89, 200},
    {"West Valley City", "UT", "84119", 40.69, -112.00, 136},
    {"Provo", "UT", "84601", 40.23, -111.66, 116},
    {"West Jordan", "UT", "84084", 40.61, -111.98, 114},
    {"Ogden", "UT", "84401", 41.22, -111.97, 87},
    {"Park City", "UT", "84060", 40.65, -111.50, 8},
    {"Birmingham", "AL", "35203", 33.52, -86.80, 210},
    {"Montgomery", "AL", "36104", 32.38, -86.31, 200},
    {"Huntsville", "AL", "35801", 34.73, -86.59, 200},
    {"Mobile", "AL", "36602", 30.69, -88.04, 189},
    {"Tuscaloosa", "AL", "35401", 33.21, -87.57, 100},
    {"Des Moines", "IA", "50309", 41.59, -93.62, 215},
    {"Cedar Rapids", "IA", "52401", 41.98, -91.67, 133},
    {"Davenport", "IA", "52801", 41.52, -90.58, 102},
    {"Sioux City", "IA", "51101", 42.50, -96.40, 83},
    {"Iowa City", "IA", "52240", 41.66, -91.53, 75},
    {"Providence", "RI", "02903", 41.82, -71.41, 180},
    {"Warwick", "RI", "02886", 41.70, -71.42, 81},
    {"Cranston", "RI", "02910", 41.77, -71.44, 81},
    {"Pawtucket", "RI", "02860", 41.88, -71.38, 72},
    {"Charleston", "SC", "29401", 32.78, -79.93, 137},
    {"Columbia", "SC", "29201", 34.00, -81.03, 133},
    {"North Charleston", "SC", "29405", 32.88, -79.98, 114},
    {"Greenville", "SC", "29601", 34.85, -82.40, 70},
    {"Myrtle Beach", "SC", "29577", 33.69, -78.89, 35},
    {"Boise", "ID", "83702", 43.62, -116.21, 230},
    {"Meridian", "ID", "83642", 43.61, -116.39, 114},
    {"Nampa", "ID", "83651", 43.57, -116.56, 100},
    {"Idaho Falls", "ID", "83402", 43.49, -112.04, 64},
    {"Jackson", "MS", "39201", 32.30, -90.18, 160},
    {"Gulfport", "MS", "39501", 30.37, -89.09, 72},
    {"Southaven", "MS", "38671", 34.99, -90.00, 55},
    {"Hattiesburg", "MS", "39401", 31.33, -89.29, 48},
    {"Biloxi", "MS", "39530", 30.40, -88.89, 46},
    {"Bridgeport", "CT", "06604", 41.17, -73.19, 148},
    {"Stamford", "CT", "06901", 41.05, -73.54, 135},
    {"New Haven", "CT", "06510", 41.31, -72.92, 134},
    {"Hartford", "CT", "06103", 41.77, -72.67, 122},
    {"Waterbury", "CT", "06702", 41.56, -73.04, 114},
    {"Manchester", "NH", "03101", 42.99, -71.46, 115},
    {"Nashua", "NH", "03060", 42.77, -71.46, 91},
    {"Concord", "NH", "03301", 43.21, -71.54, 44},
    {"Dover", "NH", "03820", 43.20, -70.87, 33},
    {"Billings", "MT", "59101", 45.78, -108.50, 117},
    {"Missoula", "MT", "59802", 46.87, -113.99, 75},
    {"Great Falls", "MT", "59401", 47.51, -111.30, 60},
    {"Bozeman", "MT", "59715", 45.68, -111.04, 53},
    {"Helena", "MT", "59601", 46.59, -112.04, 33},
    {"Fargo", "ND", "58102", 46.88, -96.79, 125},
    {"Bismarck", "ND", "58501", 46.81, -100.78, 74},
    {"Grand Forks", "ND", "58201", 47.93, -97.03, 59},
    {"Minot", "ND", "58701", 48.23, -101.30, 48},
    {"Sioux Falls", "SD", "57104", 43.55, -96.73, 192},
    {"Rapid City", "SD", "57701", 44.08, -103.23, 76},
    {"Aberdeen", "SD", "57401", 45.46, -98.49, 28},
    {"Pierre", "SD", "57501", 44.37, -100.35, 14},
    {"Burlington", "VT", "05401", 44.48, -73.21, 44},
    {"South Burlington", "VT", "05403", 44.45, -73.17, 20},
    {"Rutland", "VT", "05701", 43.61, -72.97, 15},
    {"Montpelier", "VT", "05602", 44.26, -72.58, 8},
    {"Portland", "ME", "04101", 43.66, -70.26, 68},
    {"Lewiston", "ME", "04240", 44.10, -70.21, 36},
    {"Bangor", "ME", "04401", 44.80, -68.77, 32},
    {"Augusta", "ME", "04330", 44.31, -69.78, 19},
    {"Wilmington", "DE", "19801", 39.75, -75.55, 71},
    {"Dover", "DE", "19901", 39.16, -75.52, 39},
    {"Newark", "DE", "19711", 39.68, -75.75, 34},
    {"Charleston", "WV", "25301", 38.35, -81.63, 46},
    {"Huntington", "WV", "25701", 38.42, -82.44, 45},
    {"Morgantown", "WV", "26505", 39.63, -79.96, 31},
    {"Parkersburg", "WV", "26101", 39.27, -81.56, 29},
    {"Cheyenne", "WY", "82001", 41.14, -104.82, 65},
    {"Casper", "WY", "82601", 42.85, -106.33, 58},
    {"Laramie", "WY", "82070", 41.31, -105.59, 33},
    {"Gillette", "WY", "82716", 44.29, -105.50, 33},
};

const ForeignCity kForeignCities[] = {
    {"Toronto", "Canada", 43.65, -79.38, 2930},
    {"Montreal", "Canada", 45.50, -73.57, 1780},
    {"Vancouver", "Canada", 49.28, -123.12, 675},
    {"Calgary", "Canada", 51.05, -114.07, 1300},
    {"Ottawa", "Canada", 45.42, -75.70, 1000},
    {"Mexico City", "Mexico", 19.43, -99.13, 9200},
    {"Cancun", "Mexico", 21.16, -86.85, 900},
    {"Guadalajara", "Mexico", 20.67, -103.35, 1500},
    {"Monterrey", "Mexico", 25.69, -100.32, 1140},
    {"London", "United Kingdom", 51.51, -0.13, 8900},
    {"Manchester", "United Kingdom", 53.48, -2.24, 550},
    {"Edinburgh", "United Kingdom", 55.95, -3.19, 520},
    {"Paris", "France", 48.86, 2.35, 2140},
    {"Nice", "France", 43.70, 7.27, 340},
    {"Lyon", "France", 45.76, 4.84, 515},
    {"Berlin", "Germany", 52.52, 13.40, 3650},
    {"Munich", "Germany", 48.14, 11.58, 1470},
    {"Frankfurt", "Germany", 50.11, 8.68, 750},
    {"Hamburg", "Germany", 53.55, 9.99, 1840},
    {"Rome", "Italy", 41.90, 12.50, 2870},
    {"Milan", "Italy", 45.46, 9.19, 1370},
    {"Venice", "Italy", 45.44, 12.32, 260},
    {"Florence", "Italy", 43.77, 11.26, 380},
    {"Madrid", "Spain", 40.42, -3.70, 3220},
    {"Barcelona", "Spain", 41.39, 2.17, 1620},
    {"Seville", "Spain", 37.39, -5.98, 690},
    {"Lisbon", "Portugal", 38.72, -9.14, 505},
    {"Porto", "Portugal", 41.15, -8.61, 215},
    {"Amsterdam", "Netherlands", 52.37, 4.90, 870},
    {"Rotterdam", "Netherlands", 51.92, 4.48, 650},
    {"Brussels", "Belgium", 50.85, 4.35, 1210},
    {"Zurich", "Switzerland", 47.37, 8.54, 430},
    {"Geneva", "Switzerland", 46.20, 6.14, 200},
    {"Vienna", "Austria", 48.21, 16.37, 1900},
    {"Dublin", "Ireland", 53.35, -6.26, 555},
    {"Copenhagen", "Denmark", 55.68, 12.57, 630},
    {"Stockholm", "Sweden", 59.33, 18.07, 975},
    {"Oslo", "Norway", 59.91, 10.75, 695},
    {"Helsinki", "Finland", 60.17, 24.94, 655},
    {"Athens", "Greece", 37.98, 23.73, 665},
    {"Warsaw", "Poland", 52.23, 21.01, 1790},
    {"Prague", "Czechia", 50.08, 14.44, 1310},
    {"Budapest", "Hungary", 47.50, 19.04, 1750},
    {"Istanbul", "Turkey", 41.01, 28.98, 15460},
    {"Tokyo", "Japan", 35.68, 139.69, 13960},
    {"Osaka", "Japan", 34.69, 135.50, 2690},
    {"Kyoto", "Japan", 35.01, 135.77, 1460},
    {"Seoul", "South Korea", 37.57, 126.98, 9770},
    {"Beijing", "China", 39.90, 116.41, 21540},
    {"Shanghai", "China", 31.23, 121.47, 24280},
    {"Hong Kong", "Hong Kong", 22.32, 114.17, 7450},
    {"Taipei", "Taiwan", 25.03, 121.57, 2600},
    {"Singapore", "Singapore", 1.35, 103.82, 5640},
    {"Bangkok", "Thailand", 13.76, 100.50, 8280},
    {"Kuala Lumpur", "Malaysia", 3.14, 101.69, 1800},
    {"Jakarta", "Indonesia", -6.21, 106.85, 10560},
    {"Manila", "Philippines", 14.60, 120.98, 1780},
    {"Mumbai", "India", 19.08, 72.88, 12440},
    {"Delhi", "India", 28.70, 77.10, 11030},
    {"Bangalore", "India", 12.97, 77.59, 8440},
    {"Dubai", "United Arab Emirates", 25.20, 55.27, 3330},
    {"Tel Aviv", "Israel", 32.09, 34.78, 450},
    {"Sydney", "Australia", -33.87, 151.21, 5230},
    {"Melbourne", "Australia", -37.81, 144.96, 5080},
    {"Brisbane", "Australia", -27.47, 153.03, 2560},
    {"Auckland", "New Zealand", -36.85, 174.76, 1660},
    {"Sao Paulo", "Brazil", -23.55, -46.63, 12250},
    {"Rio de Janeiro", "Brazil", -22.91, -43.17, 6750},
    {"Buenos Aires", "Argentina", -34.60, -58.38, 3080},
    {"Santiago", "Chile", -33.45, -70.67, 6160},
    {"Lima", "Peru", -12.05, -77.04, 9750},
    {"Bogota", "Colombia", 4.71, -74.07, 7410},
    {"San Jose", "Costa Rica", 9.93, -84.08, 340},
    {"Panama City", "Panama", 8.98, -79.52, 880},
    {"Nassau", "Bahamas", 25.04, -77.35, 275},
    {"Kingston", "Jamaica", 17.97, -76.79, 590},
    {"San Juan", "Puerto Rico", 18.47, -66.11, 320},
    {"Cairo", "Egypt", 30.04, 31.24, 9540},
    {"Johannesburg", "South Africa", -26.20, 28.05, 5640},
    {"Cape Town", "South Africa", -33.92, 18.42, 4620},
    {"Nairobi", "Kenya", -1.29, 36.82, 4400},
    {"Casablanca", "Morocco", 33.57, -7.59, 3360},
    {"Reykjavik", "Iceland", 64.15, -21.94, 130},
};

const char* const kMaleFirst[] = {
    "James",    "John",    "Robert",   "Michael",  "William", "David",   "Richard", "Joseph",
    "Thomas",   "Charles", "Daniel",   "Matthew",  "Anthony", "Mark",    "Donald",  "Steven",
    "Paul",     "Andrew",  "Joshua",   "Kenneth",  "Kevin",   "Brian",   "George",  "Edward",
    "Ronald",   "Timothy", "Jason",    "Jeffrey",  "Ryan",    "Jacob",   "Gary",    "Nicholas",
    "Eric",     "Jonathan","Stephen",  "Larry",    "Justin",  "Scott",   "Brandon", "Benjamin",
    "Samuel",   "Gregory", "Frank",    "Alexander","Raymond", "Patrick", "Jack",    "Dennis",
    "Jerry",    "Tyler",   "Aaron",    "Jose",     "Adam",    "Henry",   "Nathan",  "Douglas",
    "Zachary",  "Peter",   "Kyle",     "Walter",   "Ethan",   "Jeremy",  "Harold",  "Keith",
    "Christian","Roger",   "Noah",     "Gerald",   "Carl",    "Terry",   "Sean",    "Austin",
    "Arthur",   "Lawrence","Jesse",    "Dylan",    "Bryan",   "Joe",     "Jordan",  "Billy",
    "Bruce",    "Albert",  "Willie",   "Gabriel",  "Logan",   "Alan",    "Juan",    "Wayne",
    "Roy",      "Ralph",   "Randy",    "Eugene",   "Vincent", "Russell", "Elijah",  "Louis",
    "Bobby",    "Philip",  "Johnny",   "Luis",
};

const char* const kFemaleFirst[] = {
    "Mary",     "Patricia", "Jennifer", "Linda",    "Elizabeth", "Barbara",  "Susan",   "Jessica",
    "Sarah",    "Karen",    "Nancy",    "Lisa",     "Betty",     "Margaret", "Sandra",  "Ashley",
    "Kimberly", "Emily",    "Donna",    "Michelle", "Dorothy",   "Carol",    "Amanda",  "Melissa",
    "Deborah",  "Stephanie","Rebecca",  "Sharon",   "Laura",     "Cynthia",  "Kathleen","Amy",
    "Shirley",  "Angela",   "Helen",    "Anna",     "Brenda",    "Pamela",   "Nicole",  "Emma",
    "Samantha", "Katherine","Christine","Debra",    "Rachel",    "Catherine","Carolyn", "Janet",
    "Ruth",     "Maria",    "Heather",  "Diane",    "Virginia",  "Julie",    "Joyce",   "Victoria",
    "Olivia",   "Kelly",    "Christina","Lauren",   "Joan",      "Evelyn",   "Judith",  "Megan",
    "Cheryl",   "Andrea",   "Hannah",   "Martha",   "Jacqueline","Frances",  "Gloria",  "Ann",
    "Teresa",   "Kathryn",  "Sara",     "Janice",   "Jean",      "Alice",    "Madison", "Doris",
    "Abigail",  "Julia",    "Judy",     "Grace",    "Denise",    "Amber",    "Marilyn", "Beverly",
    "Danielle", "Theresa",  "Sophia",   "Marie",    "Diana",     "Brittany", "Natalie", "Isabella",
    "Charlotte","Rose",     "Alexis",   "Leia",
};

const char* const kLastNames[] = {
    "Smith",     "Johnson",  "Williams", "Brown",    "Jones",    "Garcia",   "Miller",    "Davis",
    "Rodriguez", "Martinez", "Hernandez","Lopez",    "Gonzalez", "Wilson",   "Anderson",  "Thomas",
    "Taylor",    "Moore",    "Jackson",  "Martin",   "Lee",      "Perez",    "Thompson",  "White",
    "Harris",    "Sanchez",  "Clark",    "Ramirez",  "Lewis",    "Robinson", "Walker",    "Young",
    "Allen",     "King",     "Wright",   "Scott",    "Torres",   "Nguyen",   "Hill",      "Flores",
    "Green",     "Adams",    "Nelson",   "Baker",    "Hall",     "Rivera",   "Campbell",  "Mitchell",
    "Carter",    "Roberts",  "Gomez",    "Phillips", "Evans",    "Turner",   "Diaz",      "Parker",
    "Cruz",      "Edwards",  "Collins",  "Reyes",    "Stewart",  "Morris",   "Morales",   "Murphy",
    "Cook",      "Rogers",   "Gutierrez","Ortiz",    "Morgan",   "Cooper",   "Peterson",  "Bailey",
    "Reed",      "Kelly",    "Howard",   "Ramos",    "Kim",      "Cox",      "Ward",      "Richardson",
    "Watson",    "Brooks",   "Chavez",   "Wood",     "James",    "Bennett",  "Gray",      "Mendoza",
    "Ruiz",      "Hughes",   "Price",    "Alvarez",  "Castillo", "Sanders",  "Patel",     "Myers",
    "Long",      "Ross",     "Foster",   "Jimenez",  "Powell",   "Jenkins",  "Perry",     "Russell",
    "Sullivan",  "Bell",     "Coleman",  "Butler",   "Henderson","Barnes",   "Gonzales",  "Fisher",
    "Vasquez",   "Simmons",  "Romero",   "Jordan",   "Patterson","Alexander","Hamilton",  "Graham",
    "Reynolds",  "Griffin",  "Wallace",  "Moreno",   "West",     "Cole",     "Hayes",     "Bryant",
    "Herrera",   "Gibson",   "Ellis",    "Tran",     "Medina",   "Aguilar",  "Stevens",   "Murray",
    "Ford",      "Castro",   "Marshall", "Owens",    "Harrison", "Fernandez","McDonald",  "Woods",
    "Washington","Kennedy",  "Wells",    "Vargas",   "Henry",    "Chen",     "Freeman",   "Webb",
};

const char* const kOccupations[] = {
    "Teacher",           "Registered Nurse",   "Software Engineer", "Accountant",
    "Retail Manager",    "Sales Associate",    "Electrician",       "Plumber",
    "Truck Driver",      "Office Manager",     "Physician",         "Dentist",
    "Attorney",          "Paralegal",          "Police Officer",    "Firefighter",
    "Chef",              "Restaurant Server",  "Barber",            "Hair Stylist",
    "Mechanic",          "Carpenter",          "Civil Engineer",    "Architect",
    "Pharmacist",        "Physical Therapist", "Social Worker",     "Librarian",
    "Financial Analyst", "Insurance Agent",    "Real Estate Agent", "Marketing Manager",
    "Graphic Designer",  "Journalist",         "Photographer",      "Farmer",
    "Construction Worker","Warehouse Worker",  "Flight Attendant",  "Pilot",
    "Professor",         "Research Scientist", "Lab Technician",    "Veterinarian",
    "Bank Teller",       "HR Specialist",      "Administrative Assistant", "Custodian",
};

}  // namespace

std::span<const Place> us_places() { return kUsPlaces; }
std::span<const ForeignCity> foreign_cities() { return kForeignCities; }
std::span<const char* const> male_first_names() { return kMaleFirst; }
std::span<const char* const> female_first_names() { return kFemaleFirst; }
std::span<const char* const> last_names() { return kLastNames; }
std::span<const char* const> occupations() { return kOccupations; }

double haversine_km(double lat1, double lon1, double lat2, double lon2) {
    constexpr double kDegToRad = 0.017453292519943295;
    constexpr double kEarthRadiusKm = 6371.0088;
    double phi1 = lat1 * kDegToRad, phi2 = lat2 * kDegToRad;
    double dphi = (lat2 - lat1) * kDegToRad;
    double dlam = (lon2 - lon1) * kDegToRad;
    double a = std::sin(dphi / 2) * std::sin(dphi / 2) +
               std::cos(phi1) * std::cos(phi2) * std::sin(dlam / 2) * std::sin(dlam / 2);
    return 2.0 * kEarthRadiusKm * std::asin(std::min(1.0, std::sqrt(a)));
}

}  // namespace cardsim::geo
