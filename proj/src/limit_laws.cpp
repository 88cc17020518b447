#include "seriate/limit_laws.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace seriate {

double exp_law(double t) {
    if (t < 0.0) throw std::invalid_argument("exp_law: t must be >= 0");
    return -std::expm1(-t);
}

double StarTransform::eval(double t) const {
    if (t < 0.0) throw std::invalid_argument("star transform: t must be >= 0");
    auto it = std::upper_bound(knots.begin(), knots.end(), t);
    const std::size_t i = static_cast<std::size_t>(it - knots.begin()) - 1;
    return values[i] + slopes[i] * (t - knots[i]);
}

StarTransform star_transform(const EmpiricalCdf& return_cdf) {
    if (return_cdf.kind != CdfKind::return_time)
        throw std::invalid_argument("star_transform: expected a return-time CDF");
    StarTransform s;
    s.knots.push_back(0.0);
    s.values.push_back(0.0);
    s.slopes.push_back(1.0);  // integrand 1 - Ftilde == 1 below the first jump
    double acc = 0.0, prev_t = 0.0, prev_f = 0.0;
    for (std::size_t i = 0; i < return_cdf.jumps.size(); ++i) {
        const double t = return_cdf.jumps[i];
        acc += (1.0 - prev_f) * (t - prev_t);
        if (t > 0.0) {
            s.knots.push_back(t);
            s.values.push_back(acc);
            s.slopes.push_back(1.0 - return_cdf.cum[i]);
        } else {
            // jump exactly at 0: the flat piece starts at the origin
            s.slopes[0] = 1.0 - return_cdf.cum[i];
        }
        prev_t = t;
        prev_f = return_cdf.cum[i];
    }
    return s;
}

double star_residual(const EmpiricalCdf& entry_cdf, const EmpiricalCdf& return_cdf,
                     double t_max) {
    if (entry_cdf.kind != CdfKind::entry_time)
        throw std::invalid_argument("star_residual: expected an entry-time CDF");
    if (!(t_max > 0.0)) throw std::invalid_argument("star_residual: t_max must be positive");
    const StarTransform s = star_transform(return_cdf);
    double sup = 0.0;
    for (std::size_t i = 0; i < entry_cdf.jumps.size(); ++i) {
        const double t = entry_cdf.jumps[i];
        if (t > t_max) break;
        sup = std::max(sup, std::abs(entry_cdf.cum[i] - s.eval(t)));
    }
    sup = std::max(sup, std::abs(entry_cdf.eval(t_max) - s.eval(t_max)));
    return sup;
}

EntropyBoundReport check_entropy_bound(const EmpiricalCdf& entry_cdf, double tol) {
    if (entry_cdf.kind != CdfKind::entry_time)
        throw std::invalid_argument("check_entropy_bound: expected an entry-time CDF");
    EntropyBoundReport rep;
    rep.note = "bound applies to positive-entropy limits; zero-entropy sources may exceed it";
    // past t_cap the reference tail e^{-t} is below the sampling resolution
    // 1/sqrt(n), where any finite sample's CDF overshoots for free; stop there
    const double n = static_cast<double>(std::max<std::int64_t>(entry_cdf.n_samples, 1));
    const double t_cap = 0.5 * std::log(n);
    // a step CDF maximizes its excess over an increasing reference at a jump
    for (std::size_t i = 0; i < entry_cdf.jumps.size(); ++i) {
        const double t = entry_cdf.jumps[i];
        if (t < 0.0 || t > t_cap) continue;
        const double excess = entry_cdf.cum[i] - exp_law(t);
        if (excess > rep.max_excess) {
            rep.max_excess = excess;
            rep.at_t = t;
        }
    }
    rep.exceeds = rep.max_excess > tol;
    return rep;
}

double lattice_bias(double t, double mu) {
    if (mu <= 0.0) return 0.0;
    if (mu >= 1.0) return 1.0;
    // geometric CDF on the mu-lattice: P(mu * tau <= t), tau ~ Geom(mu)
    const double k = std::floor(t / mu);
    const double geom = 1.0 - std::pow(1.0 - mu, k);
    return std::abs(geom - exp_law(t));
}

double default_tolerance(std::int64_t n_samples) {
    if (n_samples < 1) throw std::invalid_argument("default_tolerance: need samples");
    const double alpha = 0.01;
    return 3.0 * std::sqrt(std::log(2.0 / alpha) / (2.0 * static_cast<double>(n_samples)));
}

ClusterVerdict classify(const EmpiricalCdf& entry_cdf, const std::vector<double>& t_grid,
                        double tol, double lattice_mu) {
    if (t_grid.empty()) throw std::invalid_argument("classify: empty grid");
    if (!(tol >= 0.0)) throw std::invalid_argument("classify: tol must be >= 0");
    ClusterVerdict v;
    v.grid = t_grid;
    v.tol = tol;
    v.lattice_mu = lattice_mu;
    bool any_low = false, any_high = false, all_le = true, all_ge = true;
    for (double t : t_grid) {
        if (t < 0.0) throw std::invalid_argument("classify: grid points must be >= 0");
        const double m = entry_cdf.eval(t) - exp_law(t);
        const double tt = tol + lattice_bias(t, lattice_mu);
        v.margins.push_back(m);
        v.tols.push_back(tt);
        Verdict p = Verdict::neutral;
        if (m < -tt) { p = Verdict::attracting; any_low = true; }
        if (m > tt) { p = Verdict::repelling; any_high = true; }
        all_le = all_le && m <= tt;
        all_ge = all_ge && m >= -tt;
        v.per_t.push_back(p);
    }
    if (!any_low && !any_high) v.overall = Verdict::neutral;
    else if (all_le && any_low) v.overall = Verdict::attracting;
    else if (all_ge && any_high) v.overall = Verdict::repelling;
    else v.overall = Verdict::mixed;
    return v;
}

StrongClusterCheck strong_clustering(const EmpiricalCdf& entry_cdf, double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("strong_clustering: epsilon must be in (0,1)");
    if (entry_cdf.kind != CdfKind::entry_time)
        throw std::invalid_argument("strong_clustering: expected an entry-time CDF");
    StrongClusterCheck c;
    c.epsilon = epsilon;
    c.entry_value = entry_cdf.eval(epsilon);
    c.threshold = epsilon * epsilon;
    c.strong = c.entry_value < c.threshold;
    return c;
}

const std::vector<double>& default_t_grid() {
    static const std::vector<double> grid{0.1, 0.25, 0.5, 1.0, 2.0, 4.0};
    return grid;
}

std::string verdict_name(Verdict v) {
    switch (v) {
    case Verdict::attracting: return "attracting";
    case Verdict::repelling: return "repelling";
    case Verdict::neutral: return "neutral";
    case Verdict::mixed: return "mixed";
    }
    return "neutral";
}

} // namespace seriate
