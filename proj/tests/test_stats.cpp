#include <doctest.h>

#include <map>

#include "ppmx/stats.hpp"

using namespace ppmx;

namespace {

run_stats classic_stats(std::uint64_t nodes, double bps, int order = 0) {
    run_stats s;
    s.mode = trie_mode::classic;
    s.order = order;
    s.node_count = nodes;
    s.normalized_nodes = static_cast<double>(nodes);
    s.bits_per_symbol = bps;
    return s;
}

run_stats ccm_stats(double y, double bps, int bits) {
    run_stats s;
    s.mode = trie_mode::ccm;
    s.order = bits;
    s.normalized_nodes = y;
    s.bits_per_symbol = bps;
    return s;
}

// Reference trade-off table for one large English text file: classic trie
// sizes/ratios at orders 1..6 against ccm runs at the bit-orders that fit
// under them. Used as frozen inputs for the gain arithmetic.
const std::map<int, double> classic_nodes = {{1, 83},      {2, 1909},   {3, 15205},
                                             {4, 65161},   {5, 189280}, {6, 417272}};
const std::map<int, double> ccm_norm_nodes = {{6, 65},      {10, 1017},  {14, 10612},
                                              {18, 61910},  {21, 168448}, {24, 369295}};

} // namespace

TEST_CASE("rounding is half-up to two decimals") {
    CHECK(round2(1.125) == doctest::Approx(1.13));
    CHECK(round2(-1.125) == doctest::Approx(-1.12)); // half-up = toward +inf
    CHECK(round2(2.2204) == doctest::Approx(2.22));
    CHECK(round2(-1.808) == doctest::Approx(-1.81));
    CHECK(round2(21.687) == doctest::Approx(21.69));
    CHECK(round2(0.0) == 0.0);
}

TEST_CASE("gain arithmetic on frozen reference inputs") {
    SUBCASE("order 1 vs 6 bits") {
        const auto row = gains(classic_stats(83, 3.603, 1), ccm_stats(65, 3.523, 6));
        CHECK(row.memory_gain_pct == doctest::Approx(21.69));
        CHECK(row.compression_gain_pct == doctest::Approx(2.22));
        CHECK(row.classic_order == 1);
        CHECK(row.ccm_bits == 6);
    }
    SUBCASE("order 4 vs 18 bits") {
        const auto row = gains(classic_stats(65161, 2.323), ccm_stats(61910, 2.365, 18));
        CHECK(row.memory_gain_pct == doctest::Approx(4.99));
        CHECK(row.compression_gain_pct == doctest::Approx(-1.81));
    }
    SUBCASE("order 2 vs 10 bits") {
        const auto row = gains(classic_stats(1909, 2.907), ccm_stats(1017, 2.860, 10));
        CHECK(row.memory_gain_pct == doctest::Approx(46.73));
        CHECK(row.compression_gain_pct == doctest::Approx(1.62));
    }
    SUBCASE("identical runs gain nothing") {
        const auto row = gains(classic_stats(1000, 2.5), ccm_stats(1000, 2.5, 12));
        CHECK(row.memory_gain_pct == 0.0);
        CHECK(row.compression_gain_pct == 0.0);
    }
}

TEST_CASE("gains reject zero denominators") {
    CHECK_THROWS_AS(gains(classic_stats(0, 2.5), ccm_stats(10, 2.0, 6)), error);
    CHECK_THROWS_AS(gains(classic_stats(10, 0.0), ccm_stats(10, 2.0, 6)), error);
}

TEST_CASE("pick_ccm_order takes the largest ccm trie that still fits") {
    CHECK(pick_ccm_order(classic_nodes, ccm_norm_nodes, 3) == 14);
    CHECK(pick_ccm_order(classic_nodes, ccm_norm_nodes, 1) == 6);
    CHECK(pick_ccm_order(classic_nodes, ccm_norm_nodes, 6) == 24);

    SUBCASE("no qualifying order is a typed error") {
        const std::map<int, double> oversized = {{6, 100.0}, {10, 200.0}};
        try {
            pick_ccm_order(classic_nodes, oversized, 1);
            FAIL_CHECK("expected throw");
        } catch (const error& e) {
            CHECK(e.code() == errc::no_tradeoff);
        }
    }

    SUBCASE("missing classic order is a config error") {
        CHECK_THROWS_AS(pick_ccm_order(classic_nodes, ccm_norm_nodes, 9), error);
    }

    SUBCASE("single qualifying entry wins") {
        const std::map<int, double> one = {{8, 50.0}};
        CHECK(pick_ccm_order(classic_nodes, one, 1) == 8);
    }

    SUBCASE("adding a larger qualifying order never lowers the answer") {
        std::map<int, double> sizes = {{6, 65.0}};
        const int before = pick_ccm_order(classic_nodes, sizes, 2);
        sizes[10] = 1017.0;
        CHECK(pick_ccm_order(classic_nodes, sizes, 2) >= before);
    }
}
