#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <set>
#include <thread>

#include "json.hpp"

#include "cardsim/iostats.hpp"
#include "cardsim/simulator.hpp"

using namespace cardsim;
using namespace cardsim::iostats;
namespace fs = std::filesystem;

namespace {

std::string temp_dir(const std::string& tag) {
    auto dir = fs::temp_directory_path() / ("cardsim_test_" + tag);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir.string();
}

TransactionEvent make_event(int64_t minutes, uint32_t consumer, uint32_t seq,
                            int64_t cents = 1000) {
    TransactionEvent e;
    e.timestamp = DateTime{minutes};
    e.consumer_id = consumer;
    e.seq = seq;
    e.card_id = 42;
    e.amount_cents = cents;
    e.gs_id = 0;
    e.channel = Channel::Swipe;
    e.location_id = 0;
    e.merchant_id = 0;
    return e;
}

world::MerchantWorld quoted_world() {
    nlohmann::json j;
    j["cities"] = {{{"city", "Комма, Town"}, {"state", "TX"}, {"zipcode", "75000"},
                    {"country", "United States"}, {"lat", 32.0}, {"lon", -96.0},
                    {"is_us", true}, {"weight", 1.0}}};
    j["merchants"] = {{{"id", 0}, {"name", "Say \"Cheese\", Deli"}, {"mcc", 5812},
                       {"multinational", false}, {"online", true}}};
    j["locations"] = {{{"id", 0}, {"merchant", 0}, {"city", 0}, {"lat", 32.0}, {"lon", -96.0}}};
    return world::MerchantWorld::from_json(j.dump(), world::Catalog::embedded());
}

config::RunConfig micro_config(const std::string& out_dir, uint64_t seed = 42) {
    auto cfg = config::RunConfig::defaults();
    cfg.master_seed = seed;
    cfg.consumers = 40;
    cfg.start_year = 2012;
    cfg.end_year = 2016;
    cfg.out_dir = out_dir;
    cfg.world.total_locations = 2500;
    cfg.world.multinational_count = 8;
    cfg.world.min_multinational_locations = 20;
    cfg.fraud.fraudster_count = 3;
    return cfg;
}

}  // namespace

TEST_SUITE("iostats") {

TEST_CASE("spill store sorts globally across concurrent writers") {
    auto dir = temp_dir("spill");
    SpillStore spill(dir, make_date(2000, 1, 1), make_date(2001, 12, 31));
    // Three writers interleave months and consumers.
    auto write_some = [&](uint32_t consumer) {
        SpillStore::Writer w(spill);
        for (int i = 0; i < 4000; ++i) {
            int64_t minutes =
                at_minute(make_date(2000 + (i % 2), 1 + (i % 12), 1 + (i % 27)), i % 1440)
                    .minutes;
            w.add(make_event(minutes, consumer, static_cast<uint32_t>(i)));
        }
    };
    std::thread t1(write_some, 1), t2(write_some, 2), t3(write_some, 3);
    t1.join();
    t2.join();
    t3.join();

    std::vector<TransactionEvent> seen;
    spill.for_each_sorted([&](const TransactionEvent& e) { seen.push_back(e); });
    CHECK(seen.size() == 12000);
    CHECK(spill.total_records() == 12000);
    for (size_t i = 1; i < seen.size(); ++i) CHECK(event_order(seen[i - 1], seen[i]));
}

TEST_CASE("transaction csv: exact header, empty file, row round trip") {
    auto dir = temp_dir("csv");
    auto w = quoted_world();
    {
        TransactionCsvWriter tx(dir + "/transactions.csv", w, false);
    }
    {
        std::ifstream in(dir + "/transactions.csv");
        std::string header;
        std::getline(in, header);
        CHECK(header ==
              "transaction_id,consumer_id,card_id,timestamp,amount,gs_name,merchant_id,"
              "merchant_name,merchant_city,merchant_state,merchant_country,mcc,channel,is_fraud");
        std::string rest;
        CHECK(!std::getline(in, rest));
    }

    {
        TransactionCsvWriter tx(dir + "/transactions.csv", w, false);
        TransactionEvent e = make_event(at_minute(make_date(2015, 3, 14), 9 * 60 + 26).minutes,
                                        7, 0, 314159);
        e.gs_id = static_cast<uint16_t>(world::Catalog::embedded().index_of("casual restaurant meal"));
        e.is_fraud = true;
        CHECK(tx.write(e) == 1);
        TransactionEvent cash = e;
        cash.card_id = kCashInstrument;
        cash.channel = Channel::Cash;
        cash.is_fraud = false;
        CHECK(tx.write(cash) == 2);
        TransactionEvent online = e;
        online.location_id = kOnlineLocation;
        online.channel = Channel::Online;
        online.is_fraud = false;
        tx.write(online);
    }
    CsvReader r(dir + "/transactions.csv");
    std::vector<std::string> row;
    REQUIRE(r.next_row(row));  // header
    REQUIRE(r.next_row(row));
    REQUIRE(row.size() == 14);
    CHECK(row[0] == "1");
    CHECK(row[1] == "7");
    CHECK(row[2] == "42");
    CHECK(row[3] == "2015-03-14T09:26");
    CHECK(row[4] == "3141.59");
    CHECK(row[5] == "casual restaurant meal");
    CHECK(row[7] == "Say \"Cheese\", Deli");  // quoting survived
    CHECK(row[8] == "Комма, Town");
    CHECK(row[9] == "TX");
    CHECK(row[10] == "United States");
    CHECK(row[11] == "5812");
    CHECK(row[12] == "SWIPE");
    CHECK(row[13] == "1");
    DateTime back{};
    CHECK(parse_iso_minute(row[3], back));
    CHECK(back.minutes == at_minute(make_date(2015, 3, 14), 9 * 60 + 26).minutes);

    REQUIRE(r.next_row(row));
    CHECK(row[2] == "");  // cash rows carry no card id
    CHECK(row[12] == "CASH");
    REQUIRE(r.next_row(row));
    CHECK(row[8] == "");  // online rows have no physical location
    CHECK(row[9] == "");
    CHECK(row[10] == "ONLINE");
    CHECK(!r.next_row(row));
}

TEST_CASE("gzip sink round-trips through the reader") {
    auto dir = temp_dir("gz");
    auto w = quoted_world();
    {
        TransactionCsvWriter tx(dir + "/transactions.csv.gz", w, true);
        tx.write(make_event(at_minute(make_date(2010, 6, 1), 100).minutes, 1, 0));
    }
    CsvReader r(dir + "/transactions.csv.gz");
    std::vector<std::string> row;
    REQUIRE(r.next_row(row));
    REQUIRE(r.next_row(row));
    CHECK(row[4] == "10.00");
    CHECK(!r.next_row(row));
}

TEST_CASE("csv reader flags malformed quoting with a row number") {
    auto dir = temp_dir("bad");
    std::ofstream out(dir + "/bad.csv");
    out << "a,b\n1,\"unterminated\n";
    out.close();
    CsvReader r(dir + "/bad.csv");
    std::vector<std::string> row;
    REQUIRE(r.next_row(row));
    CHECK_THROWS_WITH_AS(r.next_row(row), doctest::Contains("row 2"), ParseError);
}

TEST_CASE("summarize a hand-built single-transaction dataset") {
    auto dir = temp_dir("single");
    std::ofstream bios(dir + "/bios.csv");
    bios << "consumer_id,name,gender,birth_date,city,state,zipcode,latitude,longitude,"
            "occupation,retirement_age,annual_income,fico_score,debt_fraction_of_income,"
            "transactions_per_year_mean,mean_annual_weekend_getaways,mean_annual_vacations,"
            "mean_vacation_duration,mean_annual_business_trips,mean_business_trip_duration,"
            "p_foreign_weekend_getaway,p_foreign_vacation,p_foreign_business_trip,entry_date,"
            "cards\n";
    bios << "1,Jane Doe,F,1970-01-01,Austin,TX,78701,30.27,-97.74,Teacher,65,62000.00,712.0,"
            "0.3000,430.00,2.000,1.600,6.00,1.500,2.50,0.0500,0.1800,0.1200,1988-01-01,1\n";
    bios.close();
    std::ofstream cards(dir + "/cards.csv");
    cards << "card_id,consumer_id,account_id,slot,kind,brand,pan,expiry,cvv,has_chip,"
             "acquired_date,valid_until,credit_limit,balance_fraction,years_since_pin_change\n";
    cards << "42,1,256,0,credit,Visa,4000000000000002,04/2020,123,1,2016-01-01,2020-04-30,"
             "12000.00,0.3500,3.00\n";
    cards.close();
    std::ofstream tx(dir + "/transactions.csv");
    tx << "transaction_id,consumer_id,card_id,timestamp,amount,gs_name,merchant_id,"
          "merchant_name,merchant_city,merchant_state,merchant_country,mcc,channel,is_fraud\n";
    tx << "1,1,42,2017-05-02T12:30,10.00,groceries,9,Corner Market,Austin,TX,United States,"
          "5411,CHIP,0\n";
    tx.close();

    auto rep = summarize(dir);
    CHECK(rep.total_rows == 1);
    CHECK(rep.per_tx_amount.mean == doctest::Approx(10.0));
    CHECK(rep.per_tx_amount.count == 1);
    CHECK(rep.count_by_channel.at("CHIP") == 1);
    CHECK(rep.count_by_instrument.at("credit") == 1);
    CHECK(rep.count_by_state.at("TX") == 1);
    CHECK(rep.count_by_mcc.at(5411) == 1);
    CHECK(rep.metric("bio.fico_score.mean") == doctest::Approx(712.0));
    CHECK(rep.metric("tx.total_rows") == 1);
    CHECK(rep.metric("tx.annual_per_consumer.mean") == doctest::Approx(1.0));
    CHECK_THROWS_AS(rep.metric("no.such.metric"), population::ConfigError);
}

TEST_CASE("summarize rejects malformed rows with their row number") {
    auto dir = temp_dir("malformed");
    std::ofstream bios(dir + "/bios.csv");
    bios << "consumer_id,gender,cards,retirement_age,annual_income,fico_score,"
            "debt_fraction_of_income,transactions_per_year_mean,mean_annual_weekend_getaways,"
            "mean_annual_vacations,mean_vacation_duration,mean_annual_business_trips,"
            "mean_business_trip_duration,p_foreign_weekend_getaway,p_foreign_vacation,"
            "p_foreign_business_trip\n";
    bios << "1,F,1,65,62000,712,0.3,430,2,1.6,6,1.5,2.5,0.05,0.18,0.12\n";
    bios << "2,M,oops,65,62000,712,0.3,430,2,1.6,6,1.5,2.5,0.05,0.18,0.12\n";
    bios.close();
    CHECK_THROWS_WITH_AS(summarize(dir), doctest::Contains("row 3"), ParseError);
}

TEST_CASE("end-to-end micro run: partitions, round trip, determinism") {
    auto dir = temp_dir("micro");
    auto cfg = micro_config(dir);
    auto manifest = simulator::run_generation(cfg);
    CHECK(manifest.transaction_rows > 10000);
    CHECK(manifest.bio_rows == 40);

    auto rep = summarize(dir);
    CHECK(rep.total_rows == manifest.transaction_rows);

    // Partition consistency: channels, instruments, MCCs all sum to total.
    uint64_t by_channel = 0, by_instrument = 0, by_mcc = 0, by_country = 0;
    int64_t cents_by_country = 0;
    for (const auto& [k, v] : rep.count_by_channel) by_channel += v;
    for (const auto& [k, v] : rep.count_by_instrument) by_instrument += v;
    for (const auto& [k, v] : rep.count_by_mcc) by_mcc += v;
    for (const auto& [k, v] : rep.count_by_country) by_country += v;
    for (const auto& [k, v] : rep.cents_by_country) cents_by_country += v;
    CHECK(by_channel == rep.total_rows);
    CHECK(by_instrument == rep.total_rows);
    CHECK(by_mcc == rep.total_rows);
    CHECK(by_country == rep.total_rows);
    CHECK(cents_by_country == rep.total_cents);

    // The summary is a pure fold: running it twice gives identical JSON.
    CHECK(summarize(dir).to_json() == rep.to_json());

    // Labels join: every label row is a mechanism-1 fraud row.
    std::set<uint64_t> fraud_tx;
    {
        CsvReader r(dir + "/transactions.csv");
        std::vector<std::string> row;
        r.next_row(row);
        auto ts_prev = std::string();
        while (r.next_row(row)) {
            if (row[13] == "1") {
                uint64_t id = std::stoull(row[0]);
                fraud_tx.insert(id);
            }
            // Global timestamp ordering in the merged file.
            CHECK(row[3] >= ts_prev);
            ts_prev = row[3];
        }
    }
    uint64_t label_rows = 0;
    {
        CsvReader r(dir + "/labels.csv");
        std::vector<std::string> row;
        r.next_row(row);
        while (r.next_row(row)) {
            ++label_rows;
            CHECK(fraud_tx.count(std::stoull(row[0])) == 1);
            CHECK(std::stoul(row[1]) >= 1);
        }
    }
    CHECK(label_rows == manifest.label_rows);
    CHECK(label_rows > 0);
    CHECK(label_rows < fraud_tx.size());  // mechanism-2 rows carry no label

    // Byte determinism across reruns.
    auto dir2 = temp_dir("micro2");
    auto cfg2 = micro_config(dir2);
    auto manifest2 = simulator::run_generation(cfg2);
    CHECK(manifest2.transactions_fnv64 == manifest.transactions_fnv64);
    CHECK(manifest2.bios_fnv64 == manifest.bios_fnv64);
    CHECK(manifest2.cards_fnv64 == manifest.cards_fnv64);
    CHECK(manifest2.labels_fnv64 == manifest.labels_fnv64);

    // Calibration on the spec's worked examples.
    auto cal = calibrate(rep, {{"bio.fico_score.mean", rep.metric("bio.fico_score.mean"), 0.0}});
    CHECK(cal.all_pass);
    auto cal2 = calibrate(rep, {{"bio.fico_score.mean", 712.0, 5.0}});
    (void)cal2;  // small n; just exercises the path
    auto cal3 = calibrate(rep, {{"fraud.online_share_2016plus", 0.70, 0.05}});
    SummaryReport fake;
    fake.fraud_rows_recent = 100;
    fake.fraud_online_rows_recent = 62;
    auto cal4 = calibrate(fake, {{"fraud.online_share_2016plus", 0.70, 0.05}});
    CHECK(!cal4.all_pass);
    CHECK(cal4.results[0].deviation == doctest::Approx(0.08));
    CHECK_THROWS_AS(calibrate(rep, {{"bogus.metric", 1.0, 1.0}}), population::ConfigError);
}

TEST_CASE("worker count does not change output bytes") {
    auto dir1 = temp_dir("w1");
    auto cfg1 = micro_config(dir1, 77);
    cfg1.workers = 1;
    auto m1 = simulator::run_generation(cfg1);

    auto dir4 = temp_dir("w4");
    auto cfg4 = micro_config(dir4, 77);
    cfg4.workers = 4;
    auto m4 = simulator::run_generation(cfg4);

    CHECK(m1.transactions_fnv64 == m4.transactions_fnv64);
    CHECK(m1.labels_fnv64 == m4.labels_fnv64);
    CHECK(m1.bios_fnv64 == m4.bios_fnv64);
    CHECK(m1.cards_fnv64 == m4.cards_fnv64);
    CHECK(m1.transaction_rows == m4.transaction_rows);
}

TEST_CASE("dry run estimates within 2x of an actual micro run") {
    auto dir = temp_dir("dry");
    auto cfg = micro_config(dir, 5);
    auto est = simulator::dry_run(cfg);
    auto manifest = simulator::run_generation(cfg);
    double ratio = static_cast<double>(est.estimated_bytes) /
                   static_cast<double>(manifest.transactions_bytes);
    CHECK(ratio > 0.5);
    CHECK(ratio < 2.0);
}

}  // TEST_SUITE
