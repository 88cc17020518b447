#include "seriate/stats_record.hpp"

#include <algorithm>
#include <sstream>

namespace seriate {

json ecdf_json(const EmpiricalCdf& cdf, std::size_t max_points) {
    json pts = json::array();
    const std::size_t n = cdf.jumps.size();
    if (n > 0 && max_points >= 2) {
        const std::size_t step = (n + max_points - 1) / max_points;
        for (std::size_t i = 0; i < n; i += step)
            pts.push_back(json::array({cdf.jumps[i], cdf.cum[i]}));
        if ((n - 1) % step != 0)
            pts.push_back(json::array({cdf.jumps[n - 1], cdf.cum[n - 1]}));
    } else if (n > 0) {
        pts.push_back(json::array({cdf.jumps[0], cdf.cum[0]}));
        if (n > 1) pts.push_back(json::array({cdf.jumps[n - 1], cdf.cum[n - 1]}));
    }
    return json{{"kind", cdf.kind == CdfKind::return_time ? "return" : "entry"},
                {"n_samples", cdf.n_samples},
                {"mu_hat", cdf.mu_hat},
                {"points", std::move(pts)}};
}

json cluster_json(const ClusterStats& c) {
    return json{{"t", c.t},
                {"window", c.window},
                {"origins", c.origins},
                {"mean_count", c.mean_I},
                {"p_positive", c.p_pos},
                {"mean_count_given_positive", c.mean_I_given_pos}};
}

json verdict_json(const ClusterVerdict& v) {
    json per = json::array();
    for (std::size_t i = 0; i < v.grid.size(); ++i)
        per.push_back(json{{"t", v.grid[i]},
                           {"margin", v.margins[i]},
                           {"tol", v.tols[i]},
                           {"call", verdict_name(v.per_t[i])}});
    return json{{"overall", verdict_name(v.overall)},
                {"base_tol", v.tol},
                {"lattice_mu", v.lattice_mu},
                {"per_t", std::move(per)}};
}

json strong_json(const StrongClusterCheck& s) {
    return json{{"epsilon", s.epsilon},
                {"entry_value", s.entry_value},
                {"threshold", s.threshold},
                {"strong", s.strong}};
}

json entropy_bound_json(const EntropyBoundReport& r) {
    json j{{"max_excess", r.max_excess}, {"at_t", r.at_t}, {"exceeds", r.exceeds}};
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

json block_stats_json(const BlockStats& s) {
    return json{{"block", s.block},
                {"n", s.n},
                {"count", s.count},
                {"mu_hat", s.mu_hat},
                {"kac", s.kac},
                {"stride", s.stride},
                {"censored_origins", s.censored},
                {"return_cdf", ecdf_json(s.return_cdf)},
                {"entry_cdf", ecdf_json(s.entry_cdf)},
                {"star_residual", s.star_resid},
                {"cluster", cluster_json(s.cluster)},
                {"verdict", verdict_json(s.verdict)},
                {"strong", strong_json(s.strong)},
                {"entropy_bound", entropy_bound_json(s.entropy)}};
}

json plan_json(const PerturbationPlan& p) {
    return json{{"epsilon", p.epsilon}, {"delta", p.delta}, {"K", p.K},   {"L", p.L},
                {"r", p.r},             {"M", p.M},         {"N", p.N},   {"seed", p.seed},
                {"r1", p.r1()}};
}

PerturbationPlan plan_from_json(const json& j) {
    PerturbationPlan p;
    p.epsilon = j.at("epsilon").get<double>();
    p.delta = j.at("delta").get<double>();
    p.K = j.at("K").get<std::int64_t>();
    p.L = j.at("L").get<std::int64_t>();
    p.r = j.at("r").get<std::int64_t>();
    p.M = j.at("M").get<std::int64_t>();
    p.N = j.at("N").get<std::int64_t>();
    p.seed = j.at("seed").get<std::uint64_t>();
    p.validate();
    return p;
}

json plan_report_json(const PlanReport& r) {
    json sectors = json::array();
    for (std::size_t k = 0; k < r.sectors.size(); ++k)
        sectors.push_back(json{{"sector", k},
                               {"block", r.family[k]},
                               {"branded", r.sectors[k].branded},
                               {"branded_min_per_span", r.sectors[k].branded_min},
                               {"branded_mean_per_span", r.sectors[k].branded_mean},
                               {"replacements", r.sectors[k].replacements}});
    return json{{"plan", plan_json(r.plan)},
                {"length", r.length},
                {"markers", r.n_markers},
                {"anchors", r.n_anchors},
                {"spans", r.n_spans},
                {"core", json::array({r.core_lo, r.core_hi})},
                {"leading_excluded", r.leading_excluded},
                {"trailing_excluded", r.trailing_excluded},
                {"branded", r.branded},
                {"branding_changed", r.branding_changed},
                {"skipped_straddle", r.skipped_straddle},
                {"replaced", r.replaced},
                {"replacement_changed", r.replacement_changed},
                {"changed_positions", r.changed_positions},
                {"change_fraction", r.change_fraction},
                {"budget", json{{"l_over_r", r.l_over_r},
                                {"w_mass", r.w_mass},
                                {"edge_term", r.edge_term},
                                {"bound", 2.0 * r.l_over_r + r.w_mass + r.edge_term}}},
                {"boundary_straddles", r.boundary_straddles},
                {"sectors", std::move(sectors)}};
}

json finding_json(const BlockFinding& f) {
    return json{{"n", f.n},
                {"block", f.block},
                {"count", f.count},
                {"mu_hat", f.mu_hat},
                {"entry_value", f.entry_value},
                {"return_value", f.return_value},
                {"censored_origins", f.censored}};
}

json verification_json(const VerificationReport& r) {
    json per = json::array();
    for (const auto& f : r.per_length_worst) per.push_back(finding_json(f));
    return json{{"epsilon", r.epsilon},
                {"threshold", r.threshold},
                {"n_lo", r.n_lo},
                {"n_hi", r.n_hi},
                {"min_count", r.min_count},
                {"core", json::array({r.core_lo, r.core_hi})},
                {"lengths_scanned", r.lengths_scanned},
                {"blocks_checked", r.blocks_checked},
                {"worst", finding_json(r.worst)},
                {"per_length_worst", std::move(per)},
                {"pass", r.pass}};
}

json process_spec_json(const ProcessSpec& spec) {
    json j;
    switch (spec.kind) {
        case ProcessKind::iid: j["kind"] = "iid"; j["p"] = spec.p; break;
        case ProcessKind::markov:
            j["kind"] = "markov";
            j["init"] = spec.init;
            j["rows"] = spec.rows;
            break;
        case ProcessKind::rotation:
            j["kind"] = "rotation";
            j["alpha"] = spec.alpha;
            j["cuts"] = spec.cuts;
            break;
        case ProcessKind::periodic: {
            j["kind"] = "periodic";
            j["word"] = format_block(Block{spec.alphabet, spec.word});
            break;
        }
    }
    j["alphabet"] = spec.alphabet.size;
    j["seed"] = spec.seed;
    return j;
}

json burst_report_json(const BurstReport& r) {
    json hist = json::array();
    for (const auto& [gap, count] : r.gap_histogram)
        hist.push_back(json::array({gap, count}));
    return json{{"bin_width", r.bin_width},
                {"n_bins", r.n_bins},
                {"n_events", r.n_events},
                {"occupied_bins", r.occupied_bins},
                {"duplicates_removed", r.duplicates_removed},
                {"was_unsorted", r.was_unsorted},
                {"mu_hat", r.mu_hat},
                {"kac", r.kac},
                {"censored_origins", r.censored},
                {"return_cdf", ecdf_json(r.return_cdf)},
                {"entry_cdf", ecdf_json(r.entry_cdf)},
                {"cluster", cluster_json(r.cluster)},
                {"verdict", verdict_json(r.verdict)},
                {"strong", strong_json(r.strong)},
                {"gap_histogram", std::move(hist)},
                {"notes", r.notes}};
}

std::string ecdf_csv(const EmpiricalCdf& cdf) {
    std::ostringstream out;
    out << "t,F\n";
    out.precision(17);
    for (std::size_t i = 0; i < cdf.jumps.size(); ++i)
        out << cdf.jumps[i] << ',' << cdf.cum[i] << '\n';
    return out.str();
}

std::string verification_csv(const VerificationReport& r) {
    std::ostringstream out;
    out << "n,block,count,mu_hat,entry_value,return_value,censored\n";
    out.precision(17);
    for (const auto& f : r.per_length_worst)
        out << f.n << ',' << f.block << ',' << f.count << ',' << f.mu_hat << ','
            << f.entry_value << ',' << f.return_value << ',' << f.censored << '\n';
    return out.str();
}

} // namespace seriate
