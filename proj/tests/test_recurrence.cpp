#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "seriate/recurrence.hpp"
#include "seriate/reference.hpp"
#include "seriate/rng.hpp"
#include "seriate/scan.hpp"

using namespace seriate;

namespace {
SymbolSequence text(const Alphabet a, const std::string& s) {
    return make_sequence(a, parse_block(a, s).pattern);
}
const Alphabet kBin{2};
} // namespace

TEST_CASE("return gaps are consecutive differences") {
    const SymbolSequence seq = text(kBin, "10010010");  // block 1 at 0, 3, 6
    const auto occ = scan_occurrences(seq, parse_block(kBin, "1"));
    REQUIRE(occ.positions == std::vector<std::int64_t>{0, 3, 6});
    const GapList g = return_gaps(occ);
    CHECK(g.gaps == std::vector<std::int64_t>{3, 3});
    CHECK(g.mu_hat == doctest::Approx(3.0 / 8.0));

    const auto single = scan_occurrences(seq, parse_block(kBin, "10010010"));
    CHECK_THROWS_AS(return_gaps(single), std::invalid_argument);
}

TEST_CASE("entry times use strict waiting and count censored origins") {
    const SymbolSequence seq = text(kBin, "0010");
    const Block b = parse_block(kBin, "1");
    const auto occ = scan_occurrences(seq, b);
    const EntryTimes e = entry_times(seq, b, occ, 1);
    // origins 0..3; sole occurrence at 2: tau(0)=2, tau(1)=1; 2 and 3 censored
    CHECK(e.times == std::vector<std::int64_t>{2, 1});
    CHECK(e.censored == 2);
}

TEST_CASE("entry times match the naive reference across strides") {
    Rng rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        const std::int64_t T = 100 + static_cast<std::int64_t>(rng.next_below(900));
        std::vector<std::uint8_t> data(static_cast<std::size_t>(T));
        for (auto& s : data) s = static_cast<std::uint8_t>(rng.next_below(2));
        const SymbolSequence seq = make_sequence(kBin, data);
        const Block b = parse_block(kBin, trial % 2 ? "01" : "110");
        const auto occ = scan_occurrences(seq, b);
        for (const std::int64_t stride : {std::int64_t{1}, std::int64_t{2}, std::int64_t{7}}) {
            const EntryTimes fast = entry_times(seq, b, occ, stride);
            const auto slow = reference::entry_times_naive(seq, b, stride);
            CHECK(fast.times == slow.times);
            CHECK(fast.censored == slow.censored);
        }
    }
}

TEST_CASE("return gaps match the naive reference") {
    Rng rng(32);
    std::vector<std::uint8_t> data(2000);
    for (auto& s : data) s = static_cast<std::uint8_t>(rng.next_below(2));
    const SymbolSequence seq = make_sequence(kBin, data);
    for (const char* pat : {"1", "01", "101"}) {
        const Block b = parse_block(kBin, pat);
        const auto occ = scan_occurrences(seq, b);
        CHECK(return_gaps(occ).gaps == reference::return_gaps_naive(seq, b));
    }
}

TEST_CASE("empirical cdf is a right-continuous step function") {
    const EmpiricalCdf F = ecdf({2, 3, 3, 7}, 0.5, CdfKind::return_time);
    CHECK(F.jumps == std::vector<double>{1.0, 1.5, 3.5});
    CHECK(F.cum == std::vector<double>{0.25, 0.75, 1.0});
    CHECK(F.n_samples == 4);
    CHECK(F.eval(0.99) == 0.0);
    CHECK(F.eval(1.0) == 0.25);
    CHECK(F.eval_left(1.0) == 0.0);
    CHECK(F.eval(2.0) == 0.75);
    CHECK(F.eval_left(1.5) == 0.25);
    CHECK(F.eval(100.0) == 1.0);
    CHECK_THROWS_AS(ecdf({}, 0.5, CdfKind::return_time), std::invalid_argument);
    CHECK_THROWS_AS(ecdf({1}, 0.0, CdfKind::return_time), std::invalid_argument);
}

TEST_CASE("kac statistic is exact on a periodic word") {
    // word 01 repeated k times: the block 01 occurs at every even position,
    // all gaps are 2, mu_hat = k/(2k-1), so the statistic is 2k/(2k-1)
    const std::int64_t k = 10;
    std::string w;
    for (std::int64_t i = 0; i < k; ++i) w += "01";
    const SymbolSequence seq = text(kBin, w);
    const auto occ = scan_occurrences(seq, parse_block(kBin, "01"));
    REQUIRE(occ.count() == k);
    const double kac = kac_statistic(return_gaps(occ));
    CHECK(kac == doctest::Approx(2.0 * k / (2.0 * k - 1.0)).epsilon(1e-12));
}

TEST_CASE("cluster statistics: identities and an exact case") {
    SUBCASE("all-ones sequence fills every window") {
        const SymbolSequence seq = text(kBin, "111111111111");
        const Block b = parse_block(kBin, "1");
        const auto occ = scan_occurrences(seq, b);
        for (const double t : {0.5, 1.0, 2.0}) {
            const ClusterStats c = cluster_stats(seq, b, occ, t);
            // mu_hat = 1: the window holds floor(t)+1 positions, all occupied
            CHECK(c.window == static_cast<std::int64_t>(std::floor(t)) + 1);
            CHECK(c.p_pos == 1.0);
            CHECK(c.mean_I == doctest::Approx(static_cast<double>(c.window)));
            CHECK(c.mean_I_given_pos == doctest::Approx(static_cast<double>(c.window)));
        }
    }
    SUBCASE("sample identity mean = conditional mean * positive fraction") {
        Rng rng(99);
        std::vector<std::uint8_t> data(3000);
        for (auto& s : data) s = static_cast<std::uint8_t>(rng.next_below(2));
        const SymbolSequence seq = make_sequence(kBin, data);
        const Block b = parse_block(kBin, "101");
        const auto occ = scan_occurrences(seq, b);
        for (const double t : {0.3, 1.0, 2.5}) {
            const ClusterStats c = cluster_stats(seq, b, occ, t);
            CHECK(c.mean_I ==
                  doctest::Approx(c.mean_I_given_pos * c.p_pos).epsilon(1e-12));
        }
    }
    SUBCASE("window counts match the naive reference") {
        Rng rng(100);
        std::vector<std::uint8_t> data(800);
        for (auto& s : data) s = static_cast<std::uint8_t>(rng.next_below(2));
        const SymbolSequence seq = make_sequence(kBin, data);
        const Block b = parse_block(kBin, "01");
        const auto occ = scan_occurrences(seq, b);
        const ClusterStats c = cluster_stats(seq, b, occ, 1.0);
        const auto counts =
            reference::window_counts_naive(seq, b, c.window - 1, 1);
        REQUIRE(static_cast<std::int64_t>(counts.size()) == c.origins);
        double total = 0.0;
        std::int64_t positive = 0;
        for (const std::int64_t v : counts) {
            total += static_cast<double>(v);
            positive += v > 0 ? 1 : 0;
        }
        CHECK(c.mean_I == doctest::Approx(total / static_cast<double>(counts.size())));
        CHECK(c.p_pos ==
              doctest::Approx(static_cast<double>(positive) / static_cast<double>(counts.size())));
    }
}

TEST_CASE("ks distance") {
    const EmpiricalCdf F = ecdf({1, 2, 3, 4}, 0.5, CdfKind::return_time);
    SUBCASE("distance to itself is zero") {
        const double d = ks_distance(F, [&](double t) { return F.eval(t); });
        CHECK(d == 0.0);
    }
    SUBCASE("degenerate law vs exponential") {
        const EmpiricalCdf G = ecdf({2}, 0.5, CdfKind::return_time);  // single jump at 1
        const double d = ks_distance(G, [](double t) { return 1.0 - std::exp(-t); });
        // just below the jump the gap is 1 - e^{-1}
        CHECK(d == doctest::Approx(1.0 - std::exp(-1.0)));
    }
}
