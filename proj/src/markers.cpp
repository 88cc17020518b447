#include "seriate/markers.hpp"

#include <stdexcept>

#include "seriate/rng.hpp"

namespace seriate {

std::vector<std::int64_t> sparse_cuts(std::int64_t length, std::int64_t r,
                                      std::uint64_t seed) {
    if (r < 2) throw std::invalid_argument("sparse_cuts: r must be >= 2");
    const std::int64_t r2 = r * r;
    if (length <= r2) throw std::invalid_argument("sparse_cuts: length must exceed r^2");
    Rng rng(seed);
    std::vector<std::int64_t> cuts;
    std::int64_t pos = static_cast<std::int64_t>(rng.next_below(static_cast<std::uint64_t>(r2)));
    while (pos < length) {
        cuts.push_back(pos);
        pos += r2 + static_cast<std::int64_t>(rng.next_below(static_cast<std::uint64_t>(r2 + 1)));
    }
    return cuts;
}

std::vector<std::int64_t> subdivide_gap(std::int64_t m, std::int64_t r) {
    if (r < 2) throw std::invalid_argument("subdivide_gap: r must be >= 2");
    if (m < r * r) throw std::invalid_argument("subdivide_gap: m must be >= r^2");
    const std::int64_t b = m % r;            // minimal count of r+1 parts
    const std::int64_t a = (m - b * (r + 1)) / r;
    std::vector<std::int64_t> parts;
    parts.reserve(static_cast<std::size_t>(a + b));
    parts.insert(parts.end(), static_cast<std::size_t>(a), r);
    parts.insert(parts.end(), static_cast<std::size_t>(b), r + 1);
    return parts;
}

MarkerSet build_markers(std::int64_t length, std::int64_t r, std::uint64_t seed) {
    MarkerSet ms;
    ms.r = r;
    ms.length = length;
    const std::vector<std::int64_t> cuts = sparse_cuts(length, r, seed);

    // lead-in: steps of r backwards from the first cut
    std::vector<std::int64_t> head;
    for (std::int64_t p = cuts.front() - r; p >= 0; p -= r) head.push_back(p);
    ms.positions.assign(head.rbegin(), head.rend());

    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
        ms.positions.push_back(cuts[c]);
        std::int64_t p = cuts[c];
        for (std::int64_t part : subdivide_gap(cuts[c + 1] - cuts[c], r)) {
            p += part;
            if (p < cuts[c + 1]) ms.positions.push_back(p);
        }
    }
    ms.positions.push_back(cuts.back());

    // tail: steps of r up to the end of the window
    for (std::int64_t p = cuts.back() + r; p < length; p += r) ms.positions.push_back(p);
    return ms;
}

} // namespace seriate
