#include "seriate/scan.hpp"

#include <omp.h>

#include <cstring>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace seriate {

OccurrenceList scan_occurrences(const SymbolSequence& seq, const Block& b) {
    require_same_alphabet(seq.alphabet, b.alphabet);
    const std::int64_t T = seq.length();
    const std::int64_t n = b.length();
    OccurrenceList occ;
    occ.sequence_length = T;
    occ.block_length = n;
    if (n > T) return occ;  // no start slot; callers that need measure will reject

    const std::uint8_t* s = seq.data.data();
    const std::uint8_t* p = b.pattern.data();
    const std::int64_t last = T - n;

    const int nthreads = omp_get_max_threads();
    std::vector<std::vector<std::int64_t>> local(static_cast<std::size_t>(nthreads));

#pragma omp parallel num_threads(nthreads)
    {
        const int tid = omp_get_thread_num();
        auto& mine = local[static_cast<std::size_t>(tid)];
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i <= last; ++i) {
            if (s[i] != p[0]) continue;
            if (std::memcmp(s + i, p, static_cast<std::size_t>(n)) == 0) mine.push_back(i);
        }
    }
    // static schedule hands out ascending contiguous ranges per thread id,
    // so concatenation in thread order keeps positions sorted
    for (auto& v : local)
        occ.positions.insert(occ.positions.end(), v.begin(), v.end());
    return occ;
}

double empirical_measure(const OccurrenceList& occ) {
    if (occ.slots() <= 0)
        throw std::invalid_argument("empirical_measure: sequence shorter than block");
    return static_cast<double>(occ.count()) / static_cast<double>(occ.slots());
}

std::vector<std::pair<Block, OccurrenceList>>
enumerate_blocks(const SymbolSequence& seq, std::int64_t n, std::int64_t min_count) {
    if (n < 1) throw std::invalid_argument("enumerate_blocks: n must be >= 1");
    if (min_count < 1) throw std::invalid_argument("enumerate_blocks: min_count must be >= 1");
    const std::int64_t T = seq.length();
    std::vector<std::pair<Block, OccurrenceList>> out;
    if (n > T) return out;

    // group positions by exact window content; std::string keys keep short
    // windows in SSO storage and hash in one pass
    std::unordered_map<std::string, std::size_t> group_of;
    std::vector<std::vector<std::int64_t>> positions;
    group_of.reserve(1024);

    const char* raw = reinterpret_cast<const char*>(seq.data.data());
    std::string key;
    for (std::int64_t i = 0; i + n <= T; ++i) {
        key.assign(raw + i, static_cast<std::size_t>(n));
        auto [it, fresh] = group_of.try_emplace(key, positions.size());
        if (fresh) positions.emplace_back();
        positions[it->second].push_back(i);
    }

    // groups were created in first-occurrence order
    std::vector<const std::string*> key_of(positions.size(), nullptr);
    for (const auto& [k, g] : group_of) key_of[g] = &k;
    for (std::size_t g = 0; g < positions.size(); ++g) {
        if (static_cast<std::int64_t>(positions[g].size()) < min_count) continue;
        std::vector<std::uint8_t> pat(key_of[g]->begin(), key_of[g]->end());
        OccurrenceList occ;
        occ.positions = std::move(positions[g]);
        occ.sequence_length = T;
        occ.block_length = n;
        out.emplace_back(Block{seq.alphabet, std::move(pat)}, std::move(occ));
    }
    return out;
}

double hamming_fraction(const SymbolSequence& a, const SymbolSequence& b) {
    require_same_alphabet(a.alphabet, b.alphabet);
    if (a.length() != b.length())
        throw std::invalid_argument("hamming_fraction: length mismatch");
    if (a.length() == 0) throw std::invalid_argument("hamming_fraction: empty sequences");
    const std::int64_t T = a.length();
    const std::uint8_t* x = a.data.data();
    const std::uint8_t* y = b.data.data();
    std::int64_t diff = 0;
#pragma omp parallel for schedule(static) reduction(+ : diff)
    for (std::int64_t i = 0; i < T; ++i) diff += (x[i] != y[i]) ? 1 : 0;
    return static_cast<double>(diff) / static_cast<double>(T);
}

} // namespace seriate
