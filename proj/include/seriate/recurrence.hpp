#pragma once
#include <cstdint>
#include <functional>
#include <vector>

#include "seriate/sequence.hpp"

namespace seriate {

// Consecutive-occurrence gaps plus the empirical measure used to normalize
// them.  Kac's theorem says mu * gap has mean 1 for a stationary source, so
// mu_hat travels with the gaps.
struct GapList {
    std::vector<std::int64_t> gaps;
    double mu_hat = 0.0;
};

// Waiting times tau >= 1 from sampled origins to the next occurrence start.
// Origins that see no later occurrence are dropped and counted as censored.
struct EntryTimes {
    std::vector<std::int64_t> times;
    std::int64_t censored = 0;
    std::int64_t stride = 1;
    double mu_hat = 0.0;
};

enum class CdfKind { return_time, entry_time };

// Right-continuous step CDF on the normalized time axis s = mu_hat * tau.
struct EmpiricalCdf {
    CdfKind kind = CdfKind::return_time;
    std::vector<double> jumps;  // sorted distinct normalized times
    std::vector<double> cum;    // fraction of samples <= jumps[i]
    std::int64_t n_samples = 0;
    double mu_hat = 0.0;

    double eval(double t) const;       // F(t)
    double eval_left(double t) const;  // lim_{s->t^-} F(s)
};

// Sliding-window occurrence counts I at scale t: the window spans offsets
// 0..floor(t/mu_hat) inclusive, i.e. `window` positions.  The exact sample
// identity mean_I == mean_I_given_pos * p_pos holds by construction
// (integer tallies divided out); mean_I_given_pos is 0 when p_pos is 0.
struct ClusterStats {
    double t = 0.0;
    std::int64_t window = 0;  // floor(t/mu_hat) + 1 window positions
    std::int64_t origins = 0;
    double mean_I = 0.0;
    double p_pos = 0.0;
    double mean_I_given_pos = 0.0;
};

// Gaps between consecutive entries of occ; needs >= 2 occurrences.
GapList return_gaps(const OccurrenceList& occ);

// Entry (hitting) times from origins 0, stride, 2*stride, ... using the
// occurrence list for b in seq.  OpenMP-parallel over origin chunks.
EntryTimes entry_times(const SymbolSequence& seq, const Block& b,
                       const OccurrenceList& occ, std::int64_t stride = 1);

EmpiricalCdf ecdf(const std::vector<std::int64_t>& samples, double mu_hat, CdfKind kind);

// mu_hat * mean gap; ~1 for any stationary source (Kac).
double kac_statistic(const GapList& g);

// Window statistics at scale t over origins where the whole window (plus a
// final block) fits in the sequence.  Requires t >= mu_hat... the window must
// contain at least one position, which floor(t/mu_hat)+1 always does.
ClusterStats cluster_stats(const SymbolSequence& seq, const Block& b,
                           const OccurrenceList& occ, double t,
                           std::int64_t stride = 1);

// sup over the jump points of F of |F - G|, with G also probed just below
// each jump (the two-sided check a step-function supremum needs).
double ks_distance(const EmpiricalCdf& F, const std::function<double(double)>& G);

} // namespace seriate
