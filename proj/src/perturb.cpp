#include "seriate/perturb.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "seriate/scan.hpp"

namespace seriate {

void PerturbationPlan::validate() const {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("plan: epsilon must lie in (0,1)");
    if (!(delta > 0.0 && delta <= 1.0))
        throw std::invalid_argument("plan: delta must lie in (0,1]");
    const double need_k = 2.0 / (epsilon * epsilon);
    if (static_cast<double>(K) < need_k - 1e-9)
        throw std::invalid_argument("plan: K must be at least ceil(2/epsilon^2)");
    if (L < 5 || L % 2 == 0)
        throw std::invalid_argument("plan: L must be odd and at least 5");
    const std::int64_t half = (L - 3) / 2;
    if (half < 63) {
        const std::int64_t pool = (std::int64_t{1} << half) - 1;
        if (pool < K)
            throw std::invalid_argument("plan: family pool 2^((L-3)/2)-1 is smaller than K");
    }
    if (r < 2)
        throw std::invalid_argument("plan: r must be at least 2");
    if (static_cast<double>(r) * delta <= 2.0 * static_cast<double>(L))
        throw std::invalid_argument("plan: need r > 2L/delta so marker writes fit the budget");
    if (M < r + L + 1)
        throw std::invalid_argument("plan: M must be at least r+L+1 so every sector hosts a branded block");
    if (N < 2 * r + 2)
        throw std::invalid_argument("plan: N must be at least 2r+2");
}

std::int64_t PlanLayout::sector_of(std::int64_t pos, const PerturbationPlan& plan) const {
    auto it = std::upper_bound(anchors.begin(), anchors.end(), pos);
    if (it == anchors.begin() || pos >= core_hi)
        throw std::out_of_range("sector_of: position outside the core");
    const std::int64_t span_lo = *(it - 1);
    const std::int64_t k = (pos - span_lo) / plan.M;
    return std::min<std::int64_t>(k, plan.K - 1);
}

PlanLayout plan_layout(std::int64_t length, const PerturbationPlan& plan) {
    plan.validate();
    PlanLayout layout;
    layout.markers = build_markers(length, plan.r, plan.seed);
    const auto& pos = layout.markers.positions;

    const std::int64_t r1 = plan.r1();
    std::int64_t target = 0;
    while (target <= pos.back()) {
        auto it = std::lower_bound(pos.begin(), pos.end(), target);
        std::int64_t best;
        if (it == pos.end()) {
            best = pos.back();
        } else if (it == pos.begin()) {
            best = *it;
        } else {
            const std::int64_t hi = *it, lo = *(it - 1);
            best = (target - lo <= hi - target) ? lo : hi;
        }
        if (layout.anchors.empty() || best != layout.anchors.back())
            layout.anchors.push_back(best);
        target += r1;
    }
    if (layout.anchors.size() < 2)
        throw std::runtime_error("plan_layout: sequence too short for one full span of K*M");
    layout.core_lo = layout.anchors.front();
    layout.core_hi = layout.anchors.back();
    return layout;
}

namespace {

// Returns the family index whose block sits at `at`, or -1.  Shape first
// (two anchor ones, the zero run), then the interior bits looked up in the
// family table; symbols above 1 fail the shape test.
int match_family(const std::vector<std::uint8_t>& data, std::int64_t at, std::int64_t L,
                 const std::unordered_map<std::uint64_t, int>& table) {
    const std::int64_t m = (L - 1) / 2;
    if (data[at] != 1 || data[at + m] != 1) return -1;
    for (std::int64_t j = m + 1; j < L; ++j)
        if (data[at + j] != 0) return -1;
    std::uint64_t bits = 0;
    for (std::int64_t j = 1; j < m; ++j) {
        const std::uint8_t s = data[at + j];
        if (s > 1) return -1;
        bits = (bits << 1) | s;
    }
    auto it = table.find(bits);
    return it == table.end() ? -1 : it->second;
}

std::int64_t write_block(std::vector<std::uint8_t>& data, std::int64_t at, const Block& w) {
    std::int64_t changed = 0;
    for (std::size_t j = 0; j < w.pattern.size(); ++j) {
        if (data[at + static_cast<std::int64_t>(j)] != w.pattern[j]) {
            data[at + static_cast<std::int64_t>(j)] = w.pattern[j];
            ++changed;
        }
    }
    return changed;
}

} // namespace

PerturbResult perturb(const SymbolSequence& seq, const PerturbationPlan& plan) {
    plan.validate();
    if (seq.alphabet.size < 2)
        throw std::invalid_argument("perturb: alphabet must contain symbols 0 and 1");
    const std::int64_t T = seq.length();

    PlanLayout layout = plan_layout(T, plan);
    // family by seed alone, never ranked on the input: the choice must not
    // shift when the recode is applied a second time (idempotence)
    WFamily family = make_w_family(plan.K, plan.L, plan.seed);

    PlanReport report;
    report.plan = plan;
    report.length = T;
    report.n_markers = static_cast<std::int64_t>(layout.markers.positions.size());
    report.n_anchors = static_cast<std::int64_t>(layout.anchors.size());
    report.n_spans = report.n_anchors - 1;
    report.core_lo = layout.core_lo;
    report.core_hi = layout.core_hi;
    report.leading_excluded = layout.core_lo;
    report.trailing_excluded = T - layout.core_hi;
    report.sectors.assign(static_cast<std::size_t>(plan.K), SectorTally{});
    report.l_over_r = static_cast<double>(plan.L) / static_cast<double>(plan.r);
    report.edge_term = static_cast<double>(plan.L) / static_cast<double>(T);
    for (const Block& w : family.blocks) {
        report.family.push_back(format_block(w));
        const auto occ = scan_occurrences(seq, w);
        report.w_mass += empirical_measure(occ) * static_cast<double>(plan.L);
    }

    PerturbResult result{seq, 0.0, {}};
    auto& data = result.sequence.data;
    const auto& markers = layout.markers.positions;

    std::unordered_map<std::uint64_t, int> table;
    const std::int64_t m = plan.m();
    for (std::int64_t k = 0; k < plan.K; ++k) {
        std::uint64_t bits = 0;
        for (std::int64_t j = 1; j < m; ++j)
            bits = (bits << 1) | family.blocks[static_cast<std::size_t>(k)].pattern[static_cast<std::size_t>(j)];
        table.emplace(bits, static_cast<int>(k));
    }

    std::vector<std::int64_t> branded_min(static_cast<std::size_t>(plan.K),
                                          std::numeric_limits<std::int64_t>::max());
    auto next_marker = markers.begin();

    for (std::int64_t q = 0; q + 1 < report.n_anchors; ++q) {
        const std::int64_t span_lo = layout.anchors[static_cast<std::size_t>(q)];
        const std::int64_t span_hi = layout.anchors[static_cast<std::size_t>(q) + 1];
        next_marker = std::lower_bound(next_marker, markers.end(), span_lo);

        for (std::int64_t k = 0; k < plan.K; ++k) {
            const std::int64_t sec_lo = span_lo + k * plan.M;
            const std::int64_t sec_hi = (k == plan.K - 1) ? span_hi : span_lo + (k + 1) * plan.M;
            if (sec_lo >= span_hi) break;
            const Block& w = family.blocks[static_cast<std::size_t>(k)];
            auto& tally = report.sectors[static_cast<std::size_t>(k)];

            std::int64_t branded_here = 0;
            while (next_marker != markers.end() && *next_marker < sec_hi) {
                const std::int64_t mp = *next_marker;
                if (mp + plan.L <= sec_hi) {
                    report.branding_changed += write_block(data, mp, w);
                    ++report.branded;
                    ++branded_here;
                } else {
                    ++report.skipped_straddle;
                }
                ++next_marker;
            }
            tally.branded += branded_here;
            branded_min[static_cast<std::size_t>(k)] =
                std::min(branded_min[static_cast<std::size_t>(k)], branded_here);

            std::int64_t p = sec_lo;
            while (p + plan.L <= sec_hi) {
                const int j = match_family(data, p, plan.L, table);
                if (j >= 0 && j != static_cast<int>(k)) {
                    report.replacement_changed += write_block(data, p, w);
                    ++report.replaced;
                    ++tally.replacements;
                    p += plan.L;
                } else if (j >= 0) {
                    p += plan.L;
                } else {
                    ++p;
                }
            }
        }
    }

    for (std::int64_t k = 0; k < plan.K; ++k) {
        auto& tally = report.sectors[static_cast<std::size_t>(k)];
        tally.branded_min = branded_min[static_cast<std::size_t>(k)];
        tally.branded_mean = report.n_spans > 0
                                 ? static_cast<double>(tally.branded) / static_cast<double>(report.n_spans)
                                 : 0.0;
    }

    // audit: inside the core every surviving family occurrence must carry its
    // sector's brand unless it straddles a sector boundary
    std::int64_t foreign = 0;
    for (std::int64_t p = layout.core_lo; p + plan.L <= layout.core_hi; ++p) {
        const int j = match_family(data, p, plan.L, table);
        if (j < 0) continue;
        const std::int64_t k_first = layout.sector_of(p, plan);
        const std::int64_t k_last = layout.sector_of(p + plan.L - 1, plan);
        const bool same_span =
            *(std::upper_bound(layout.anchors.begin(), layout.anchors.end(), p) - 1) ==
            *(std::upper_bound(layout.anchors.begin(), layout.anchors.end(), p + plan.L - 1) - 1);
        if (!same_span || k_first != k_last)
            ++report.boundary_straddles;
        else if (j != static_cast<int>(k_first))
            ++foreign;
    }
    if (foreign != 0)
        throw std::logic_error("perturb: recode left a foreign family block inside a sector");

    for (std::int64_t p = 0; p < T; ++p)
        if (data[static_cast<std::size_t>(p)] != seq.data[static_cast<std::size_t>(p)])
            ++report.changed_positions;
    report.change_fraction = static_cast<double>(report.changed_positions) / static_cast<double>(T);

    result.change_fraction = report.change_fraction;
    result.report = std::move(report);
    return result;
}

namespace {

constexpr std::uint64_t kMersenne = (std::uint64_t{1} << 61) - 1;

inline std::uint64_t mod_m(std::uint64_t x) {
    // x < 2^62 assumed
    const std::uint64_t y = (x & kMersenne) + (x >> 61);
    return y >= kMersenne ? y - kMersenne : y;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    const unsigned __int128 t = static_cast<unsigned __int128>(a) * b;
    const std::uint64_t lo = static_cast<std::uint64_t>(t) & kMersenne;
    const std::uint64_t hi = static_cast<std::uint64_t>(t >> 61);
    const std::uint64_t s = lo + hi;
    return s >= kMersenne ? s - kMersenne : s;
}

inline std::uint64_t submod(std::uint64_t a, std::uint64_t b) {
    return a >= b ? a - b : a + kMersenne - b;
}

struct RollingHash {
    std::uint64_t base;
    std::uint64_t lead;  // base^(n-1) mod p
    std::uint64_t state = 0;

    RollingHash(std::uint64_t b, std::int64_t n) : base(b), lead(1) {
        for (std::int64_t i = 1; i < n; ++i) lead = mulmod(lead, base);
    }
    void init(const std::uint8_t* s, std::int64_t n) {
        state = 0;
        for (std::int64_t i = 0; i < n; ++i) state = mod_m(mulmod(state, base) + s[i] + 1);
    }
    void roll(std::uint8_t out, std::uint8_t in) {
        state = mod_m(mulmod(submod(state, mulmod(out + 1, lead)), base) + in + 1);
    }
};

struct Emit {
    std::uint64_t h1;
    std::uint64_t h2;
    std::int64_t pos;
};

// entry statistic over the core, from sorted occurrence positions: the
// fraction of uncensored origins o (core_lo <= o < last occurrence) with an
// occurrence inside (o, o+h].  Equivalent to the measure of the union of the
// intervals [q-h, q-1] clipped to the origin range.
double entry_fraction(const std::vector<std::int64_t>& qs, std::int64_t core_lo, std::int64_t h) {
    const std::int64_t last = qs.back();
    const std::int64_t denom = last - core_lo;
    if (denom <= 0) return 0.0;
    std::int64_t covered = 0;
    std::int64_t prev_end = core_lo - 1;  // highest covered origin so far
    for (const std::int64_t q : qs) {
        const std::int64_t a = std::max(q - h, core_lo);
        const std::int64_t b = std::min(q - 1, last - 1);
        if (b < a) continue;
        const std::int64_t from = std::max(a, prev_end + 1);
        if (b >= from) covered += b - from + 1;
        prev_end = std::max(prev_end, b);
    }
    return static_cast<double>(covered) / static_cast<double>(denom);
}

double return_fraction(const std::vector<std::int64_t>& qs, std::int64_t h) {
    std::int64_t hits = 0;
    for (std::size_t i = 1; i < qs.size(); ++i)
        if (qs[i] - qs[i - 1] <= h) ++hits;
    return static_cast<double>(hits) / static_cast<double>(qs.size() - 1);
}

} // namespace

VerificationReport verify_theorem(const SymbolSequence& seq, const PerturbationPlan& plan,
                                  std::int64_t n_lo, std::int64_t n_hi,
                                  std::int64_t min_count, double epsilon) {
    plan.validate();
    if (n_lo < plan.N)
        throw std::invalid_argument("verify_theorem: n_lo must be at least the plan's N");
    if (n_hi < n_lo)
        throw std::invalid_argument("verify_theorem: n_hi must be at least n_lo");
    if (min_count < 2)
        throw std::invalid_argument("verify_theorem: min_count must be at least 2");
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("verify_theorem: epsilon must lie in (0,1)");
    const std::int64_t n_cap = plan.N * plan.N;
    if (n_hi > n_cap) n_hi = n_cap;

    PlanLayout layout = plan_layout(seq.length(), plan);
    const std::int64_t core_lo = layout.core_lo;
    const std::int64_t core_hi = layout.core_hi;
    const std::int64_t core_len = core_hi - core_lo;
    const std::uint8_t* base = seq.data.data();

    VerificationReport report;
    report.epsilon = epsilon;
    report.threshold = epsilon * epsilon;
    report.n_lo = n_lo;
    report.n_hi = n_hi;
    report.min_count = min_count;
    report.core_lo = core_lo;
    report.core_hi = core_hi;
    report.worst.entry_value = -1.0;

    std::vector<std::uint64_t> h1s;
    std::vector<std::uint64_t> sorted;
    std::vector<std::uint64_t> hot;
    std::vector<Emit> emits;

    for (std::int64_t n = n_lo; n <= n_hi; ++n) {
        const std::int64_t slots = core_len - n + 1;
        if (slots < min_count) break;
        ++report.lengths_scanned;

        RollingHash ha(131, n), hb(16369, n);
        h1s.resize(static_cast<std::size_t>(slots));
        ha.init(base + core_lo, n);
        h1s[0] = ha.state;
        for (std::int64_t i = 1; i < slots; ++i) {
            ha.roll(base[core_lo + i - 1], base[core_lo + i + n - 1]);
            h1s[static_cast<std::size_t>(i)] = ha.state;
        }

        sorted = h1s;
        std::sort(sorted.begin(), sorted.end());
        hot.clear();
        for (std::size_t i = 0; i < sorted.size();) {
            std::size_t j = i;
            while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
            if (static_cast<std::int64_t>(j - i) >= min_count) hot.push_back(sorted[i]);
            i = j;
        }
        if (hot.empty()) continue;

        emits.clear();
        hb.init(base + core_lo, n);
        for (std::int64_t i = 0; i < slots; ++i) {
            if (i > 0) hb.roll(base[core_lo + i - 1], base[core_lo + i + n - 1]);
            const std::uint64_t h1 = h1s[static_cast<std::size_t>(i)];
            if (std::binary_search(hot.begin(), hot.end(), h1))
                emits.push_back(Emit{h1, hb.state, core_lo + i});
        }
        std::sort(emits.begin(), emits.end(), [](const Emit& a, const Emit& b) {
            if (a.h1 != b.h1) return a.h1 < b.h1;
            if (a.h2 != b.h2) return a.h2 < b.h2;
            return a.pos < b.pos;
        });

        BlockFinding length_worst;
        length_worst.n = n;
        length_worst.entry_value = -1.0;
        std::vector<std::int64_t> qs;
        for (std::size_t i = 0; i < emits.size();) {
            std::size_t j = i;
            while (j < emits.size() && emits[j].h1 == emits[i].h1 && emits[j].h2 == emits[i].h2) ++j;
            const std::int64_t count = static_cast<std::int64_t>(j - i);
            if (count >= min_count) {
                qs.clear();
                for (std::size_t t = i; t < j; ++t) qs.push_back(emits[t].pos);
                const double mu = static_cast<double>(count) / static_cast<double>(slots);
                const std::int64_t h = static_cast<std::int64_t>(std::floor(epsilon / mu));
                BlockFinding f;
                f.n = n;
                f.count = count;
                f.mu_hat = mu;
                f.entry_value = entry_fraction(qs, core_lo, h);
                f.return_value = return_fraction(qs, h);
                // origins are all core positions (matching entry_times), not just
                // window slots: everything at or past the last occurrence is censored
                f.censored = core_hi - qs.back();
                ++report.blocks_checked;
                if (f.entry_value > length_worst.entry_value) {
                    const std::uint8_t* from = base + qs.front();
                    f.block = format_block(make_block(
                        seq.alphabet, std::vector<std::uint8_t>(from, from + n)));
                    length_worst = f;
                }
            }
            i = j;
        }
        if (length_worst.entry_value >= 0.0) {
            report.per_length_worst.push_back(length_worst);
            if (length_worst.entry_value > report.worst.entry_value) report.worst = length_worst;
        }
    }

    if (report.blocks_checked == 0)
        throw std::runtime_error("verify_theorem: no block reaches min_count anywhere in the range");

    // spot-check: every reported occurrence of the worst block must really
    // carry its content (guards the hash grouping)
    {
        Block wb = parse_block(seq.alphabet, report.worst.block);
        const auto occ = scan_occurrences(seq, wb);
        std::int64_t inside = 0;
        for (const std::int64_t p : occ.positions)
            if (p >= core_lo && p + report.worst.n <= core_hi) ++inside;
        if (inside != report.worst.count)
            throw std::logic_error("verify_theorem: hash grouping disagrees with a direct scan");
    }

    report.pass = report.worst.entry_value < report.threshold;
    return report;
}

} // namespace seriate
