#include "seriate/reference.hpp"

#include <stdexcept>

namespace seriate::reference {

static bool matches_at(const SymbolSequence& seq, const Block& b, std::int64_t i) {
    const std::int64_t n = b.length();
    if (i < 0 || i + n > seq.length()) return false;
    for (std::int64_t j = 0; j < n; ++j)
        if (seq.data[static_cast<std::size_t>(i + j)] != b.pattern[static_cast<std::size_t>(j)])
            return false;
    return true;
}

std::vector<std::int64_t> scan_positions_naive(const SymbolSequence& seq, const Block& b) {
    require_same_alphabet(seq.alphabet, b.alphabet);
    std::vector<std::int64_t> out;
    for (std::int64_t i = 0; i + b.length() <= seq.length(); ++i)
        if (matches_at(seq, b, i)) out.push_back(i);
    return out;
}

std::vector<std::int64_t> return_gaps_naive(const SymbolSequence& seq, const Block& b) {
    std::vector<std::int64_t> gaps;
    std::int64_t prev = -1;
    for (std::int64_t i = 0; i + b.length() <= seq.length(); ++i) {
        if (!matches_at(seq, b, i)) continue;
        if (prev >= 0) gaps.push_back(i - prev);
        prev = i;
    }
    return gaps;
}

EntryTimesNaive entry_times_naive(const SymbolSequence& seq, const Block& b,
                                  std::int64_t stride) {
    if (stride < 1) throw std::invalid_argument("entry_times_naive: stride must be >= 1");
    EntryTimesNaive out;
    for (std::int64_t o = 0; o < seq.length(); o += stride) {
        std::int64_t tau = -1;
        for (std::int64_t k = 1; o + k + b.length() <= seq.length() + 0; ++k) {
            if (matches_at(seq, b, o + k)) { tau = k; break; }
        }
        if (tau > 0)
            out.times.push_back(tau);
        else
            ++out.censored;
    }
    return out;
}

std::vector<std::int64_t> window_counts_naive(const SymbolSequence& seq, const Block& b,
                                              std::int64_t window_offsets,
                                              std::int64_t stride) {
    if (stride < 1 || window_offsets < 0)
        throw std::invalid_argument("window_counts_naive: bad stride or window");
    std::vector<std::int64_t> counts;
    for (std::int64_t o = 0; o + window_offsets + b.length() <= seq.length(); o += stride) {
        std::int64_t c = 0;
        for (std::int64_t k = 0; k <= window_offsets; ++k)
            if (matches_at(seq, b, o + k)) ++c;
        counts.push_back(c);
    }
    return counts;
}

} // namespace seriate::reference
