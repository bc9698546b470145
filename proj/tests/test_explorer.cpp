#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <sstream>
#include <vector>

#include "austrian/dynamics.hpp"
#include "austrian/explorer.hpp"
#include "austrian/predictor.hpp"

using austrian::AustrianPartition;
using austrian::ConnectivityReport;
using austrian::SweepRow;

namespace {

// Per-state transients recomputed one trajectory at a time, no memoization.
std::map<long long, long long> direct_transient_histogram(long long n, int L) {
    std::map<long long, long long> histogram;
    for (const auto& state : austrian::enumerate_all(n, L)) {
        ++histogram[austrian::find_cycle(state).transient_length];
    }
    return histogram;
}

}  // namespace

TEST_CASE("one pass over the cell matches trajectory-by-trajectory results") {
    for (long long n : {0LL, 3LL, 9LL, 12LL}) {
        for (int L : {1, 2, 3, 4}) {
            const auto report = austrian::verify_connectivity(n, L);
            const auto expected = direct_transient_histogram(n, L);
            CHECK(report.transient_histogram == expected);
            CHECK(report.max_transient == expected.rbegin()->first);
            long long states = 0;
            for (const auto& [transient, count] : expected) states += count;
            CHECK(report.state_count == states);
        }
    }
}

TEST_CASE("the deck-22 capacity-5 cell in full") {
    const auto report = austrian::verify_connectivity(22, 5);
    CHECK(report.n == 22);
    CHECK(report.L == 5);
    CHECK(report.state_count == 973);
    CHECK(report.connected);
    CHECK(report.max_transient == 9);
    REQUIRE(report.canonical_cycle.size() == 3);
    CHECK(report.canonical_cycle[0] ==
          AustrianPartition::from_parts(0, {5, 5, 4, 3, 2, 2, 1}, 5));
    CHECK(report.canonical_cycle[1] ==
          AustrianPartition::from_parts(2, {5, 4, 4, 3, 2, 1, 1}, 5));

    long long histogram_total = 0;
    for (const auto& [transient, count] : report.transient_histogram) {
        histogram_total += count;
        CHECK(transient <= report.max_transient);
    }
    CHECK(histogram_total == 973);
    // exactly the three cycle states sit at transient zero
    CHECK(report.transient_histogram.at(0) == 3);
}

TEST_CASE("the four-state cell of deck 3, capacity 2") {
    const auto report = austrian::verify_connectivity(3, 2);
    CHECK(report.state_count == 4);
    CHECK(report.connected);
    CHECK(report.max_transient == 2);
    CHECK(report.transient_histogram ==
          std::map<long long, long long>{{0, 1}, {1, 1}, {2, 2}});
    REQUIRE(report.canonical_cycle.size() == 1);
    CHECK(report.canonical_cycle[0] == AustrianPartition::from_parts(0, {2, 1}, 2));
}

TEST_CASE("sweep rows carry the cross-checked prediction, in grid order") {
    const auto rows = austrian::sweep(0, 12, 1, 3, 1);
    REQUIRE(rows.size() == 13 * 3);
    std::size_t i = 0;
    for (int L = 1; L <= 3; ++L) {
        for (long long n = 0; n <= 12; ++n, ++i) {
            const SweepRow& row = rows[i];
            CHECK(row.n == n);
            CHECK(row.L == L);
            CHECK(row.error.empty());
            CHECK(row.connected);
            CHECK(row.matches_prediction);
            const auto report = austrian::verify_connectivity(n, L);
            CHECK(row.state_count == report.state_count);
            CHECK(row.period == static_cast<long long>(report.canonical_cycle.size()));
            CHECK(row.max_transient == report.max_transient);
            CHECK(row.fraction == austrian::predict_cycle(n, L).fraction);
        }
    }

    SUBCASE("thread count changes nothing observable") {
        const auto parallel = austrian::sweep(0, 12, 1, 3, 4);
        REQUIRE(parallel.size() == rows.size());
        for (std::size_t k = 0; k < rows.size(); ++k) {
            CHECK(austrian::sweep_csv_row(parallel[k]) == austrian::sweep_csv_row(rows[k]));
        }
    }
    SUBCASE("sink receives rows in the same order as the vector form") {
        std::vector<std::string> lines;
        austrian::sweep(0, 12, 1, 3,
                        [&lines](const SweepRow& row) {
                            lines.push_back(austrian::sweep_csv_row(row));
                        },
                        3);
        REQUIRE(lines.size() == rows.size());
        for (std::size_t k = 0; k < rows.size(); ++k) {
            CHECK(lines[k] == austrian::sweep_csv_row(rows[k]));
        }
    }
}

TEST_CASE("sweep CSV shape") {
    CHECK(austrian::sweep_csv_header() ==
          "n,L,state_count,period,fraction,max_transient,connected");
    const auto rows = austrian::sweep(22, 22, 5, 5, 1);
    REQUIRE(rows.size() == 1);
    CHECK(austrian::sweep_csv_row(rows[0]) == "22,5,973,3,4/3,9,true");
}

TEST_CASE("DOT export draws the whole cell") {
    const std::string dot = austrian::export_state_graph(3, 2);
    CHECK(dot ==
          "digraph states {\n"
          "  label=\"n=3 L=2\";\n"
          "  s0 [label=\"(0; 1,1,1)\"];\n"
          "  s1 [label=\"(0; 2,1)\",shape=doublecircle];\n"
          "  s2 [label=\"(1; 1,1)\"];\n"
          "  s3 [label=\"(1; 2)\"];\n"
          "  s0 -> s3;\n"
          "  s1 -> s1;\n"
          "  s2 -> s3;\n"
          "  s3 -> s1;\n"
          "}\n");

    SUBCASE("every state has exactly one outgoing edge") {
        const std::string bigger = austrian::export_state_graph(9, 3);
        const long long states =
            static_cast<long long>(austrian::enumerate_all(9, 3).size());
        long long edges = 0;
        for (std::size_t at = bigger.find(" -> "); at != std::string::npos;
             at = bigger.find(" -> ", at + 1)) {
            ++edges;
        }
        CHECK(edges == states);
    }
    SUBCASE("the node cap is enforced before doing any work") {
        CHECK_THROWS_AS(austrian::export_state_graph(22, 5, 100), austrian::TooLarge);
        CHECK_NOTHROW(austrian::export_state_graph(22, 5, 973));
    }
}
