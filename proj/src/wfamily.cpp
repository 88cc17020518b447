#include "seriate/wfamily.hpp"

#include <algorithm>
#include <stdexcept>

#include "seriate/rng.hpp"
#include "seriate/scan.hpp"

namespace seriate {

static Block candidate_block(std::int64_t L, std::int64_t m, std::uint64_t wbits,
                             Alphabet a) {
    std::vector<std::uint8_t> pat(static_cast<std::size_t>(L), 0);
    pat[0] = 1;
    for (std::int64_t i = 0; i < m - 1; ++i)
        pat[static_cast<std::size_t>(1 + i)] =
            static_cast<std::uint8_t>((wbits >> (m - 2 - i)) & 1u);
    pat[static_cast<std::size_t>(m)] = 1;
    return Block{a, std::move(pat)};
}

WFamily make_w_family(std::int64_t K, std::int64_t L, std::uint64_t seed,
                      const SymbolSequence* base_seq) {
    if (L < 5 || L % 2 == 0)
        throw std::invalid_argument("make_w_family: L must be odd and >= 5");
    if (K < 1) throw std::invalid_argument("make_w_family: K must be >= 1");
    const std::int64_t m = (L - 1) / 2;
    const std::int64_t pool = (std::int64_t(1) << (m - 1)) - 1;  // w' != 0...0
    if (K > pool)
        throw std::invalid_argument("make_w_family: K exceeds 2^((L-3)/2) - 1 candidates");

    const Alphabet a = base_seq ? base_seq->alphabet : Alphabet{2};
    std::vector<std::uint64_t> order;
    order.reserve(static_cast<std::size_t>(pool));
    for (std::int64_t w = 1; w <= pool; ++w) order.push_back(static_cast<std::uint64_t>(w));

    if (base_seq) {
        // prefer the blocks the input uses least; ties resolved by w' value
        std::vector<std::pair<std::int64_t, std::uint64_t>> ranked;
        ranked.reserve(order.size());
        for (std::uint64_t w : order) {
            const Block b = candidate_block(L, m, w, a);
            ranked.emplace_back(scan_occurrences(*base_seq, b).count(), w);
        }
        std::sort(ranked.begin(), ranked.end());
        order.clear();
        for (const auto& [cnt, w] : ranked) order.push_back(w);
    } else {
        Rng rng(seed);
        for (std::size_t i = order.size(); i > 1; --i)
            std::swap(order[i - 1], order[rng.next_below(i)]);
    }

    WFamily f;
    f.L = L;
    f.m = m;
    f.K = K;
    for (std::int64_t k = 0; k < K; ++k)
        f.blocks.push_back(candidate_block(L, m, order[static_cast<std::size_t>(k)], a));

    if (!family_has_no_overlaps(f))
        throw std::logic_error("make_w_family: overlap check failed");
    return f;
}

bool family_has_no_overlaps(const WFamily& f) {
    const std::int64_t L = f.L;
    for (const Block& x : f.blocks) {
        for (const Block& y : f.blocks) {
            for (std::int64_t s = 1; s < L; ++s) {
                // can y occur at shift s over x?  only if the overlapping
                // region is consistent symbol by symbol
                bool compatible = true;
                for (std::int64_t i = s; i < L; ++i) {
                    if (x.pattern[static_cast<std::size_t>(i)] !=
                        y.pattern[static_cast<std::size_t>(i - s)]) {
                        compatible = false;
                        break;
                    }
                }
                if (compatible) return false;
            }
        }
    }
    return true;
}

} // namespace seriate
