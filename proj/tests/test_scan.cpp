#include <doctest.h>

#include <map>
#include <stdexcept>
#include <string>

#include "seriate/reference.hpp"
#include "seriate/rng.hpp"
#include "seriate/scan.hpp"

using namespace seriate;

namespace {
SymbolSequence text(const Alphabet a, const std::string& s) {
    return make_sequence(a, parse_block(a, s).pattern);
}
} // namespace

TEST_CASE("occurrence scan, small cases") {
    const Alphabet a{2};
    CHECK(scan_occurrences(text(a, "0101"), parse_block(a, "01")).positions ==
          std::vector<std::int64_t>{0, 2});
    CHECK(scan_occurrences(text(a, "1111"), parse_block(a, "11")).positions ==
          std::vector<std::int64_t>{0, 1, 2});
    CHECK(scan_occurrences(text(a, "0101"), parse_block(a, "011")).positions.empty());
    CHECK(scan_occurrences(text(a, "01"), parse_block(a, "0101")).positions.empty());

    const auto occ = scan_occurrences(text(a, "0101"), parse_block(a, "01"));
    CHECK(occ.sequence_length == 4);
    CHECK(occ.block_length == 2);
    CHECK(occ.slots() == 3);
    CHECK(empirical_measure(occ) == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("scan rejects mismatched alphabets") {
    CHECK_THROWS_AS(scan_occurrences(text(Alphabet{2}, "0101"), parse_block(Alphabet{3}, "01")),
                    std::invalid_argument);
}

TEST_CASE("empirical measure needs a fitting block") {
    const auto occ = scan_occurrences(text(Alphabet{2}, "01"), parse_block(Alphabet{2}, "0101"));
    CHECK_THROWS_AS(empirical_measure(occ), std::invalid_argument);
}

TEST_CASE("scan matches the naive reference on random inputs") {
    Rng rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const std::uint32_t l = 2 + static_cast<std::uint32_t>(rng.next_below(3));
        const std::int64_t T = 50 + static_cast<std::int64_t>(rng.next_below(2000));
        std::vector<std::uint8_t> data(static_cast<std::size_t>(T));
        for (auto& s : data) s = static_cast<std::uint8_t>(rng.next_below(l));
        const SymbolSequence seq = make_sequence(Alphabet{l}, data);

        const std::int64_t n = 1 + static_cast<std::int64_t>(rng.next_below(6));
        std::vector<std::uint8_t> pat(static_cast<std::size_t>(n));
        for (auto& s : pat) s = static_cast<std::uint8_t>(rng.next_below(l));
        const Block b = make_block(Alphabet{l}, pat);

        CHECK(scan_occurrences(seq, b).positions == reference::scan_positions_naive(seq, b));
    }
}

TEST_CASE("block enumeration agrees with direct scans") {
    const Alphabet a{2};
    const SymbolSequence seq = text(a, "0110100110010110");

    const auto groups = enumerate_blocks(seq, 3);
    std::int64_t total = 0;
    for (const auto& [block, occ] : groups) {
        total += occ.count();
        CHECK(occ.positions == scan_occurrences(seq, block).positions);
    }
    // every window lands in exactly one group
    CHECK(total == seq.length() - 3 + 1);

    // ordering follows first occurrence, and min_count filters whole groups
    const auto filtered = enumerate_blocks(seq, 3, 3);
    for (const auto& [block, occ] : filtered) CHECK(occ.count() >= 3);
    for (std::size_t i = 1; i < groups.size(); ++i)
        CHECK(groups[i - 1].second.positions.front() < groups[i].second.positions.front());
}

TEST_CASE("enumeration matches a brute-force window census on random input") {
    Rng rng(7);
    std::vector<std::uint8_t> data(400);
    for (auto& s : data) s = static_cast<std::uint8_t>(rng.next_below(2));
    const SymbolSequence seq = make_sequence(Alphabet{2}, data);
    for (const std::int64_t n : {std::int64_t{1}, std::int64_t{2}, std::int64_t{5}, std::int64_t{9}}) {
        std::map<std::string, std::int64_t> counts;
        for (std::int64_t i = 0; i + n <= seq.length(); ++i) {
            std::string key;
            for (std::int64_t j = 0; j < n; ++j)
                key.push_back(static_cast<char>('0' + seq.data[static_cast<std::size_t>(i + j)]));
            ++counts[key];
        }
        const auto groups = enumerate_blocks(seq, n);
        CHECK(groups.size() == counts.size());
        for (const auto& [block, occ] : groups) {
            const auto it = counts.find(format_block(block));
            REQUIRE(it != counts.end());
            CHECK(it->second == occ.count());
        }
    }
}

TEST_CASE("hamming fraction") {
    const Alphabet a{2};
    CHECK(hamming_fraction(text(a, "0101"), text(a, "0101")) == 0.0);
    CHECK(hamming_fraction(text(a, "0101"), text(a, "0111")) == doctest::Approx(0.25));
    CHECK(hamming_fraction(text(a, "0000"), text(a, "1111")) == 1.0);
    CHECK_THROWS_AS(hamming_fraction(text(a, "01"), text(a, "011")), std::invalid_argument);
    CHECK_THROWS_AS(hamming_fraction(text(a, "01"), text(Alphabet{3}, "01")),
                    std::invalid_argument);
}
