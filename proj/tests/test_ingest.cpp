#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "netfc/ingest.hpp"

using namespace netfc;

namespace {

std::vector<PacketRecord> records_at(const std::vector<double>& times) {
    std::vector<PacketRecord> out;
    for (std::size_t i = 0; i < times.size(); ++i)
        out.push_back({i + 1, times[i], "10.0.0.2", "10.0.0.9", "TCP", ""});
    return out;
}

} // namespace

TEST_CASE("parse_capture_csv maps fields directly") {
    std::istringstream in("1,0.000123,10.0.0.2,10.0.0.9,TCP,\"len=1500\"\n");
    const auto recs = parse_capture_csv(in);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].seq == 1);
    CHECK(recs[0].time == 0.000123);
    CHECK(recs[0].source == "10.0.0.2");
    CHECK(recs[0].destination == "10.0.0.9");
    CHECK(recs[0].protocol == "TCP");
    CHECK(recs[0].info == "len=1500");
}

TEST_CASE("parse_capture_csv skips a header and honours RFC-4180 quoting") {
    std::istringstream in("No.,Time,Source,Destination,Protocol,Info\n"
                          "1,0.5,a,b,TCP,\"x, \"\"y\"\"\"\n"
                          "2,1.5,a,b,UDP\n");
    const auto recs = parse_capture_csv(in);
    REQUIRE(recs.size() == 2);
    CHECK(recs[0].info == "x, \"y\"");
    CHECK(recs[1].info.empty()); // missing 6th column
}

TEST_CASE("parse_capture_csv rejects degenerate inputs") {
    std::istringstream header_only("No.,Time,Source,Destination,Protocol,Info\n");
    CHECK_THROWS_AS(parse_capture_csv(header_only), empty_input);

    std::istringstream bad_time("1,0.1,a,b,TCP,x\n2,0.2,a,b,TCP,x\n3,abc,10.0.0.2,10.0.0.9,UDP,x\n");
    try {
        parse_capture_csv(bad_time);
        FAIL("expected malformed_row");
    } catch (const malformed_row& e) {
        CHECK(e.line_no() == 3);
    }

    std::istringstream short_row("1,0.1,a,b\n");
    CHECK_THROWS_AS(parse_capture_csv(short_row), malformed_row);
}

TEST_CASE("filter_transport keeps the allowed protocols in order") {
    std::vector<PacketRecord> recs{{1, 0.1, "a", "b", "TCP", ""},
                                   {2, 0.2, "a", "b", "UDP", ""},
                                   {3, 0.3, "a", "b", "ICMP", ""}};
    const auto kept = filter_transport(recs, {"TCP", "UDP"});
    REQUIRE(kept.size() == 2);
    CHECK(kept[0].protocol == "TCP");
    CHECK(kept[1].protocol == "UDP");

    std::vector<PacketRecord> none{{1, 0.1, "a", "b", "ICMP", ""}, {2, 0.2, "a", "b", "ARP", ""}};
    CHECK(filter_transport(none, {"TCP", "UDP"}).empty());

    std::vector<PacketRecord> lower{{1, 0.1, "a", "b", "tcp", ""}};
    CHECK(filter_transport(lower, {"TCP"}).size() == 1);
}

TEST_CASE("filter_transport is idempotent") {
    std::vector<PacketRecord> recs{{1, 0.1, "a", "b", "TCP", ""},
                                   {2, 0.2, "a", "b", "BITTORRENT", ""},
                                   {3, 0.3, "a", "b", "udp", ""}};
    const auto once = filter_transport(recs, {"TCP", "UDP"});
    const auto twice = filter_transport(once, {"TCP", "UDP"});
    REQUIRE(once.size() == twice.size());
    for (std::size_t i = 0; i < once.size(); ++i) CHECK(once[i].seq == twice[i].seq);
}

TEST_CASE("merge_captures produces a stable time-sorted sequence") {
    const auto merged =
        merge_captures({records_at({0.1, 5.0}), records_at({3600.2})});
    REQUIRE(merged.size() == 3);
    CHECK(merged[0].time == 0.1);
    CHECK(merged[2].time == 3600.2);

    const auto reordered = merge_captures({records_at({2.0}), records_at({1.0})});
    CHECK(reordered[0].time == 1.0);
    CHECK(reordered[1].time == 2.0);

    try {
        merge_captures({records_at({5.0, 3.0})});
        FAIL("expected non_monotonic_part");
    } catch (const non_monotonic_part& e) {
        CHECK(e.part_index() == 0);
    }
}

TEST_CASE("merge_captures output is non-decreasing in time") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0, 100);
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<std::vector<PacketRecord>> parts;
        for (int p = 0; p < 3; ++p) {
            std::vector<double> times;
            for (int i = 0; i < 50; ++i) times.push_back(u(rng));
            std::sort(times.begin(), times.end());
            parts.push_back(records_at(times));
        }
        const auto merged = merge_captures(parts);
        for (std::size_t i = 1; i < merged.size(); ++i)
            REQUIRE(merged[i].time >= merged[i - 1].time);
    }
}

TEST_CASE("bin_counts assigns half-open bins anchored at zero") {
    CHECK(bin_counts(records_at({0.5, 10.2, 31.0}), 30).counts == std::vector<std::uint64_t>{2, 1});
    CHECK(bin_counts(records_at({0.1, 95.0}), 30).counts == std::vector<std::uint64_t>{1, 0, 0, 1});
    CHECK(bin_counts(records_at({29.999, 30.0}), 30).counts == std::vector<std::uint64_t>{1, 1});
    CHECK_THROWS_AS(bin_counts({}, 30), empty_input);
}

TEST_CASE("bin_counts conserves the packet count") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0, 500);
    for (int rep = 0; rep < 50; ++rep) {
        std::vector<double> times;
        const int n = 1 + static_cast<int>(rng() % 200);
        for (int i = 0; i < n; ++i) times.push_back(u(rng));
        const auto recs = records_at(times);
        for (double step : {1.0, 7.5, 30.0, 60.0}) {
            const auto binned = bin_counts(recs, step);
            std::uint64_t total = 0;
            for (auto c : binned.counts) total += c;
            REQUIRE(total == recs.size());
        }
    }
}

TEST_CASE("halving the step refines bins exactly") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(0, 300);
    std::vector<double> times;
    for (int i = 0; i < 400; ++i) times.push_back(u(rng));
    const auto recs = records_at(times);
    const auto coarse = bin_counts(recs, 30);
    const auto fine = bin_counts(recs, 15);
    for (std::size_t k = 0; k < coarse.counts.size(); ++k) {
        std::uint64_t sum = fine.counts[2 * k];
        if (2 * k + 1 < fine.counts.size()) sum += fine.counts[2 * k + 1];
        REQUIRE(coarse.counts[k] == sum);
    }
}
