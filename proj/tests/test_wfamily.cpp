#include <doctest.h>

#include <set>
#include <stdexcept>

#include "seriate/process.hpp"
#include "seriate/scan.hpp"
#include "seriate/wfamily.hpp"

using namespace seriate;

TEST_CASE("family blocks have the anchored shape") {
    const WFamily f = make_w_family(3, 9, 42);
    CHECK(f.L == 9);
    CHECK(f.m == 4);
    CHECK(f.K == 3);
    REQUIRE(f.blocks.size() == 3);
    std::set<std::string> distinct;
    for (const Block& w : f.blocks) {
        REQUIRE(w.length() == 9);
        CHECK(w.pattern[0] == 1);
        CHECK(w.pattern[4] == 1);
        for (int j = 5; j < 9; ++j) CHECK(w.pattern[j] == 0);
        bool interior_one = false;
        for (int j = 1; j < 4; ++j) interior_one |= w.pattern[j] == 1;
        CHECK(interior_one);  // the all-zero interior is excluded
        distinct.insert(format_block(w));
    }
    CHECK(distinct.size() == 3);
}

TEST_CASE("family size is limited by the candidate pool") {
    // L = 7: interior has 2 free bits, pool = 3
    CHECK_NOTHROW(make_w_family(3, 7, 1));
    CHECK_THROWS_AS(make_w_family(4, 7, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_w_family(2, 6, 1), std::invalid_argument);  // even L
    CHECK_THROWS_AS(make_w_family(2, 3, 1), std::invalid_argument);  // too short
    CHECK_THROWS_AS(make_w_family(0, 7, 1), std::invalid_argument);
}

TEST_CASE("no member can overlap another at any shift") {
    for (const std::int64_t L : {std::int64_t{7}, std::int64_t{11}}) {
        const std::int64_t pool = (std::int64_t{1} << ((L - 3) / 2)) - 1;
        const WFamily f = make_w_family(pool, L, 9);  // the whole pool at once
        CHECK(family_has_no_overlaps(f));
    }
    // sanity: a deliberately overlap-prone pair is caught
    WFamily broken;
    broken.L = 4;
    broken.m = 2;
    broken.K = 2;
    const Alphabet a{2};
    broken.blocks = {make_block(a, {1, 0, 1, 0}), make_block(a, {1, 0, 1, 0})};
    CHECK(!family_has_no_overlaps(broken));  // shift 2 chains 1010 into 1010
}

TEST_CASE("choice is deterministic and seed-sensitive") {
    const WFamily a = make_w_family(4, 11, 1);
    const WFamily b = make_w_family(4, 11, 1);
    for (int i = 0; i < 4; ++i)
        CHECK(format_block(a.blocks[i]) == format_block(b.blocks[i]));

    // different seeds reach different families often enough to test once
    const WFamily c = make_w_family(4, 11, 2);
    bool any_diff = false;
    for (int i = 0; i < 4; ++i)
        any_diff |= format_block(a.blocks[i]) != format_block(c.blocks[i]);
    CHECK(any_diff);
}

TEST_CASE("with a base sequence the family avoids frequent candidates") {
    // build a sequence stuffed with one candidate: 1 01 1 000 (L=7, interior 01)
    const Alphabet a{2};
    std::vector<std::uint8_t> data;
    const std::vector<std::uint8_t> frequent{1, 0, 1, 1, 0, 0, 0};
    for (int i = 0; i < 300; ++i)
        data.insert(data.end(), frequent.begin(), frequent.end());
    const SymbolSequence seq = make_sequence(a, data);

    // pool is {00? no - interiors 01, 10, 11}; pick 2 of 3: the stuffed one loses
    const WFamily f = make_w_family(2, 7, 3, &seq);
    for (const Block& w : f.blocks)
        CHECK(format_block(w) != std::string("1011000"));
}
