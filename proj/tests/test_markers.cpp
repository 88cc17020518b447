#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "seriate/markers.hpp"

using namespace seriate;

TEST_CASE("sparse cuts respect the gap envelope") {
    for (const std::uint64_t seed : {1ull, 2ull, 77ull}) {
        for (const std::int64_t r : {std::int64_t{3}, std::int64_t{10}}) {
            const auto cuts = sparse_cuts(100000, r, seed);
            REQUIRE(!cuts.empty());
            CHECK(cuts.front() >= 0);
            CHECK(cuts.front() < r * r);
            for (std::size_t i = 1; i < cuts.size(); ++i) {
                const std::int64_t gap = cuts[i] - cuts[i - 1];
                CHECK(gap >= r * r);
                CHECK(gap <= 2 * r * r);
            }
            CHECK(cuts.back() < 100000);
            // deterministic
            CHECK(cuts == sparse_cuts(100000, r, seed));
        }
    }
    CHECK(sparse_cuts(100000, 3, 1) != sparse_cuts(100000, 3, 2));
    CHECK_THROWS_AS(sparse_cuts(9, 3, 1), std::invalid_argument);
}

TEST_CASE("gap subdivision: worked examples") {
    CHECK(subdivide_gap(10, 3) == std::vector<std::int64_t>{3, 3, 4});
    CHECK(subdivide_gap(18, 4) == std::vector<std::int64_t>{4, 4, 5, 5});
    CHECK(subdivide_gap(9, 3) == std::vector<std::int64_t>{3, 3, 3});
    CHECK_THROWS_AS(subdivide_gap(8, 3), std::invalid_argument);
}

TEST_CASE("gap subdivision: structure for all feasible sizes") {
    for (std::int64_t r = 2; r <= 12; ++r) {
        for (std::int64_t m = r * r; m <= 3 * r * r; ++m) {
            const auto parts = subdivide_gap(m, r);
            CHECK(std::accumulate(parts.begin(), parts.end(), std::int64_t{0}) == m);
            bool seen_long = false;
            for (const std::int64_t p : parts) {
                CHECK((p == r || p == r + 1));
                if (p == r + 1) seen_long = true;
                if (seen_long) CHECK(p == r + 1);  // long parts sit at the end
            }
            // the number of r+1 parts is forced by m mod r, so this split
            // uses the fewest long parts any {r, r+1} split of m can have
            const std::int64_t longs =
                static_cast<std::int64_t>(std::count(parts.begin(), parts.end(), r + 1));
            CHECK(longs == m % r);
        }
    }
}

TEST_CASE("marker grid has gaps r or r+1 and covers the whole range") {
    for (const std::uint64_t seed : {5ull, 6ull}) {
        for (const std::int64_t r : {std::int64_t{4}, std::int64_t{9}, std::int64_t{20}}) {
            const std::int64_t T = 200000;
            const MarkerSet ms = build_markers(T, r, seed);
            CHECK(ms.r == r);
            CHECK(ms.length == T);
            REQUIRE(ms.positions.size() >= 2);
            CHECK(ms.positions.front() >= 0);
            CHECK(ms.positions.front() < r);  // head stub steps down in r: offset < r
            CHECK(ms.positions.back() < T);
            CHECK(T - ms.positions.back() <= r + 1);
            for (std::size_t i = 1; i < ms.positions.size(); ++i) {
                const std::int64_t gap = ms.positions[i] - ms.positions[i - 1];
                CHECK(gap >= r);
                CHECK(gap <= r + 1);
            }
            CHECK(ms.positions == build_markers(T, r, seed).positions);
        }
    }
}

TEST_CASE("marker grid requires room for one cut") {
    CHECK_THROWS_AS(build_markers(16, 4, 1), std::invalid_argument);
    CHECK_NOTHROW(build_markers(17, 4, 1));
}
