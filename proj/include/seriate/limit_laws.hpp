#pragma once
#include <string>
#include <vector>

#include "seriate/recurrence.hpp"

namespace seriate {

// 1 - e^{-t}: the law that entry and return statistics share in the
// independent-like regime, and the unique fixed point of the transform below.
double exp_law(double t);

// F(t) = integral_0^t (1 - Ftilde(s)) ds for a step-function return CDF:
// piecewise linear, continuous, concave, 1-Lipschitz, F(t) = t below the
// smallest jump.  Computed in closed form segment by segment.
struct StarTransform {
    std::vector<double> knots;   // 0 and the return-CDF jump points
    std::vector<double> values;  // transform value at each knot
    std::vector<double> slopes;  // slope to the right of each knot

    double eval(double t) const;
};

StarTransform star_transform(const EmpiricalCdf& return_cdf);

// sup |F_entry(t) - transform(t)| over the entry CDF's jump points in
// [0, t_max], plus t_max itself.  Evaluating at the entry jumps (and not
// between them) is deliberate: a lattice-valued entry ECDF is a staircase
// that meets the continuous transform only where it has mass, and probing
// between jumps would just measure the staircase's own discretization.
double star_residual(const EmpiricalCdf& entry_cdf, const EmpiricalCdf& return_cdf,
                     double t_max);

// Largest excess of F_entry over 1 - e^{-t}.  The bound is asserted for
// positive-entropy limits; zero-entropy sources can exceed it legitimately,
// which is what `note` reminds the reader of.
struct EntropyBoundReport {
    double max_excess = 0.0;
    double at_t = 0.0;
    bool exceeds = false;
    std::string note;
};
EntropyBoundReport check_entropy_bound(const EmpiricalCdf& entry_cdf, double tol);

enum class Verdict { attracting, repelling, neutral, mixed };

// Margins m(t) = F_entry(t) - exp_law(t) over a t-grid with per-point
// tolerance.  Overall call:
//   neutral     |m| <= tol everywhere
//   attracting  m <= tol everywhere and m < -tol somewhere
//   repelling   m >= -tol everywhere and m > tol somewhere
//   mixed       margins break out both ways
struct ClusterVerdict {
    std::vector<double> grid;
    std::vector<double> margins;
    std::vector<double> tols;        // per-point tolerance actually applied
    std::vector<Verdict> per_t;
    Verdict overall = Verdict::neutral;
    double tol = 0.0;                // base tolerance
    double lattice_mu = 0.0;
};

// lattice_mu > 0 widens each point's tolerance by the exact gap between the
// exponential law and its mu-lattice (geometric) discretization, so sources
// whose times live on a coarse integer lattice are not misread as attracting
// at small t.  Pass 0 for continuous-scale data.
ClusterVerdict classify(const EmpiricalCdf& entry_cdf, const std::vector<double>& t_grid,
                        double tol, double lattice_mu = 0.0);

// |geometric(mu) CDF - exponential CDF| at scale t: the unavoidable
// discretization gap for data on the mu-lattice.
double lattice_bias(double t, double mu);

// DKW-style default: 3 * sqrt(ln(2/alpha) / (2 n)), alpha = 0.01.
double default_tolerance(std::int64_t n_samples);

// The sharp smallness test: entry CDF below epsilon^2 at epsilon, i.e. a
// random origin almost never finds the block within epsilon normalized time.
// The return-side picture of the same phenomenon is nearly all return gaps
// collapsing to the burst scale, so the return CDF's value at epsilon is
// reported alongside by callers that have it.
struct StrongClusterCheck {
    double epsilon = 0.0;
    double entry_value = 0.0;
    double threshold = 0.0;  // epsilon^2
    bool strong = false;
};
StrongClusterCheck strong_clustering(const EmpiricalCdf& entry_cdf, double epsilon);

const std::vector<double>& default_t_grid();  // {0.1, 0.25, 0.5, 1, 2, 4}

std::string verdict_name(Verdict v);

} // namespace seriate
