#pragma once
#include <cstdint>
#include <vector>

#include "seriate/sequence.hpp"

namespace seriate::reference {

// Serial brute-force implementations of the scanning kernels.  These are the
// oracles the parallel kernels are tested against (and the baseline the
// benchmark compares), so they must stay obviously correct: straight loops,
// no shared state with the production paths, no occurrence-list reuse.

// O(T*n) position-by-position comparison.
std::vector<std::int64_t> scan_positions_naive(const SymbolSequence& seq, const Block& b);

// Gap between each occurrence and the next, found by re-scanning forward from
// every occurrence (does not trust any precomputed list).
std::vector<std::int64_t> return_gaps_naive(const SymbolSequence& seq, const Block& b);

// For origins 0, stride, 2*stride, ...: the least k >= 1 such that b occurs
// at origin+k, scanning forward one position at a time.  Origins with no
// later occurrence are dropped; the second member reports how many.
struct EntryTimesNaive {
    std::vector<std::int64_t> times;
    std::int64_t censored = 0;
};
EntryTimesNaive entry_times_naive(const SymbolSequence& seq, const Block& b,
                                  std::int64_t stride = 1);

// Occurrence count of b inside [origin, origin+window_offsets], re-scanning
// the window for every origin.
std::vector<std::int64_t> window_counts_naive(const SymbolSequence& seq, const Block& b,
                                              std::int64_t window_offsets,
                                              std::int64_t stride = 1);

} // namespace seriate::reference
