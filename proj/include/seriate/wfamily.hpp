#pragma once
#include <cstdint>
#include <optional>
#include <vector>

#include "seriate/sequence.hpp"

namespace seriate {

// K distinct binary blocks of odd length L = 2m+1, each shaped
//
//   1 | w' (m-1 bits) | 1 | 0^m
//
// The trailing zero run is as long as the whole prefix, so no family member
// can occur shifted 0 < s < L across another: either the second block's
// leading 1 would land in the first one's zero tail (s in [m+1, L-1]) or its
// middle 1 would (s in [1, m]).  make_w_family still brute-force checks this.
// The all-zero w' is excluded, leaving 2^(m-1) - 1 candidates.
struct WFamily {
    std::int64_t L = 0;
    std::int64_t m = 0;  // (L-1)/2
    std::int64_t K = 0;
    std::vector<Block> blocks;
};

// Picks K of the candidates.  With base_seq given, candidates are ranked by
// occurrence count in it (ascending, ties by w' value) so the family carries
// as little pre-existing mass as possible; without it the choice is a seeded
// shuffle.  Throws if K exceeds the candidate pool or L is not odd >= 5.
WFamily make_w_family(std::int64_t K, std::int64_t L, std::uint64_t seed,
                      const SymbolSequence* base_seq = nullptr);

// Exhaustive shift check: true iff no member can overlap another at any
// shift 0 < s < L in any ambient sequence.
bool family_has_no_overlaps(const WFamily& f);

} // namespace seriate
