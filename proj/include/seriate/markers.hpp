#pragma once
#include <cstdint>
#include <vector>

namespace seriate {

// Marker grid with consecutive interior gaps in {r, r+1}.  Built by dropping
// sparse seeded cuts with gaps in [r^2, 2r^2] and subdividing every cut-to-cut
// stretch; the stubs before the first cut and after the last are filled with
// plain steps of r, so the boundary gaps at 0 and T are < r.  Deterministic
// in (length, r, seed).
struct MarkerSet {
    std::int64_t r = 0;
    std::vector<std::int64_t> positions;  // strictly increasing, in [0, length)
    std::int64_t length = 0;
};

// Seeded cut positions with consecutive differences in [r^2, 2r^2]; the first
// cut lands in [0, r^2).  Requires length > r^2 so at least one cut exists.
std::vector<std::int64_t> sparse_cuts(std::int64_t length, std::int64_t r,
                                      std::uint64_t seed);

// Split m into parts r and r+1 with the fewest possible r+1 parts, longer
// parts last: a parts of r then b = m mod r parts of r+1.  Requires m >= r^2
// (below that some m have no such split).
std::vector<std::int64_t> subdivide_gap(std::int64_t m, std::int64_t r);

MarkerSet build_markers(std::int64_t length, std::int64_t r, std::uint64_t seed);

} // namespace seriate
