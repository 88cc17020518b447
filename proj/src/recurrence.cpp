#include "seriate/recurrence.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "seriate/scan.hpp"

namespace seriate {

double EmpiricalCdf::eval(double t) const {
    auto it = std::upper_bound(jumps.begin(), jumps.end(), t);
    if (it == jumps.begin()) return 0.0;
    return cum[static_cast<std::size_t>(it - jumps.begin()) - 1];
}

double EmpiricalCdf::eval_left(double t) const {
    auto it = std::lower_bound(jumps.begin(), jumps.end(), t);
    if (it == jumps.begin()) return 0.0;
    return cum[static_cast<std::size_t>(it - jumps.begin()) - 1];
}

GapList return_gaps(const OccurrenceList& occ) {
    if (occ.count() < 2)
        throw std::invalid_argument("return_gaps: need at least two occurrences");
    GapList g;
    g.mu_hat = empirical_measure(occ);
    g.gaps.resize(static_cast<std::size_t>(occ.count() - 1));
    for (std::size_t i = 0; i + 1 < occ.positions.size(); ++i)
        g.gaps[i] = occ.positions[i + 1] - occ.positions[i];
    return g;
}

EntryTimes entry_times(const SymbolSequence& seq, const Block& b,
                       const OccurrenceList& occ, std::int64_t stride) {
    require_same_alphabet(seq.alphabet, b.alphabet);
    if (stride < 1) throw std::invalid_argument("entry_times: stride must be >= 1");
    if (occ.sequence_length != seq.length() || occ.block_length != b.length())
        throw std::invalid_argument("entry_times: occurrence list does not match inputs");

    EntryTimes out;
    out.stride = stride;
    out.mu_hat = empirical_measure(occ);
    const std::int64_t T = seq.length();
    const auto& pos = occ.positions;
    if (pos.empty()) {
        out.censored = (T + stride - 1) / stride;
        return out;
    }
    const std::int64_t last = pos.back();
    const std::int64_t n_origins = (T + stride - 1) / stride;
    // origins at or past the last occurrence see nothing ahead: censored
    const std::int64_t live = std::min<std::int64_t>(n_origins, last / stride + (last % stride ? 1 : 0));
    out.censored = n_origins - live;
    out.times.resize(static_cast<std::size_t>(live));

#pragma omp parallel for schedule(static)
    for (std::int64_t oi = 0; oi < live; ++oi) {
        const std::int64_t o = oi * stride;
        // first occurrence strictly after o
        auto it = std::upper_bound(pos.begin(), pos.end(), o);
        out.times[static_cast<std::size_t>(oi)] = *it - o;
    }
    return out;
}

EmpiricalCdf ecdf(const std::vector<std::int64_t>& samples, double mu_hat, CdfKind kind) {
    if (samples.empty()) throw std::invalid_argument("ecdf: no samples");
    if (!(mu_hat > 0.0)) throw std::invalid_argument("ecdf: mu_hat must be positive");
    std::vector<std::int64_t> sorted = samples;
    std::sort(sorted.begin(), sorted.end());
    EmpiricalCdf F;
    F.kind = kind;
    F.mu_hat = mu_hat;
    F.n_samples = static_cast<std::int64_t>(sorted.size());
    const double inv = 1.0 / static_cast<double>(sorted.size());
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        F.jumps.push_back(mu_hat * static_cast<double>(sorted[i]));
        F.cum.push_back(static_cast<double>(j) * inv);
        i = j;
    }
    return F;
}

double kac_statistic(const GapList& g) {
    if (g.gaps.empty()) throw std::invalid_argument("kac_statistic: no gaps");
    long double sum = 0.0L;
    for (std::int64_t v : g.gaps) sum += static_cast<long double>(v);
    return g.mu_hat * static_cast<double>(sum / static_cast<long double>(g.gaps.size()));
}

ClusterStats cluster_stats(const SymbolSequence& seq, const Block& b,
                           const OccurrenceList& occ, double t, std::int64_t stride) {
    require_same_alphabet(seq.alphabet, b.alphabet);
    if (stride < 1) throw std::invalid_argument("cluster_stats: stride must be >= 1");
    if (!(t > 0.0)) throw std::invalid_argument("cluster_stats: t must be positive");
    const double mu = empirical_measure(occ);
    if (!(mu > 0.0)) throw std::invalid_argument("cluster_stats: block never occurs");

    const std::int64_t w_off = static_cast<std::int64_t>(std::floor(t / mu));
    const std::int64_t T = seq.length();
    const std::int64_t n = b.length();
    // only origins whose whole window of occurrences is observable
    const std::int64_t o_max = T - w_off - n;
    if (o_max < 0) throw std::invalid_argument("cluster_stats: window exceeds sequence");
    const std::int64_t n_origins = o_max / stride + 1;

    const auto& pos = occ.positions;
    std::int64_t total = 0, positive = 0;
#pragma omp parallel for schedule(static) reduction(+ : total, positive)
    for (std::int64_t oi = 0; oi < n_origins; ++oi) {
        const std::int64_t o = oi * stride;
        auto lo = std::lower_bound(pos.begin(), pos.end(), o);
        auto hi = std::upper_bound(lo, pos.end(), o + w_off);
        const std::int64_t c = hi - lo;
        total += c;
        positive += (c > 0) ? 1 : 0;
    }

    ClusterStats cs;
    cs.t = t;
    cs.window = w_off + 1;
    cs.origins = n_origins;
    cs.mean_I = static_cast<double>(total) / static_cast<double>(n_origins);
    cs.p_pos = static_cast<double>(positive) / static_cast<double>(n_origins);
    cs.mean_I_given_pos =
        positive > 0 ? static_cast<double>(total) / static_cast<double>(positive) : 0.0;
    return cs;
}

double ks_distance(const EmpiricalCdf& F, const std::function<double(double)>& G) {
    if (F.jumps.empty()) throw std::invalid_argument("ks_distance: empty CDF");
    double sup = 0.0;
    for (std::size_t i = 0; i < F.jumps.size(); ++i) {
        const double t = F.jumps[i];
        const double lo = i ? F.cum[i - 1] : 0.0;
        sup = std::max(sup, std::abs(F.cum[i] - G(t)));
        // left limits on both sides, so a step-valued G is not charged F's jump mass
        const double g_left = G(std::nextafter(t, -std::numeric_limits<double>::infinity()));
        sup = std::max(sup, std::abs(lo - g_left));
    }
    return sup;
}

} // namespace seriate
