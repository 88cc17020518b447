#pragma once
#include <string>

#include <json.hpp>

#include "seriate/ingest.hpp"
#include "seriate/limit_laws.hpp"
#include "seriate/perturb.hpp"
#include "seriate/process.hpp"
#include "seriate/recurrence.hpp"

namespace seriate {

using json = nlohmann::json;

// CDF as [t, F(t)] pairs on the normalized axis, decimated to at most
// max_points jump points (always keeping the first and last).
json ecdf_json(const EmpiricalCdf& cdf, std::size_t max_points = 512);

json cluster_json(const ClusterStats& c);
json verdict_json(const ClusterVerdict& v);
json strong_json(const StrongClusterCheck& s);
json entropy_bound_json(const EntropyBoundReport& r);

// The full per-block record emitted by the stats subcommand.
struct BlockStats {
    std::string block;
    std::int64_t n = 0;
    std::int64_t count = 0;
    double mu_hat = 0.0;
    double kac = 0.0;
    std::int64_t stride = 1;
    std::int64_t censored = 0;
    EmpiricalCdf return_cdf;
    EmpiricalCdf entry_cdf;
    double star_resid = 0.0;
    ClusterStats cluster;
    ClusterVerdict verdict;
    StrongClusterCheck strong;
    EntropyBoundReport entropy;
};
json block_stats_json(const BlockStats& s);

json plan_json(const PerturbationPlan& p);
PerturbationPlan plan_from_json(const json& j);
json plan_report_json(const PlanReport& r);
json verification_json(const VerificationReport& r);
json finding_json(const BlockFinding& f);
json process_spec_json(const ProcessSpec& spec);
json burst_report_json(const BurstReport& r);

// Flat CSV with one row per jump point of a CDF.
std::string ecdf_csv(const EmpiricalCdf& cdf);
// One row per checked length of a verification report.
std::string verification_csv(const VerificationReport& r);

} // namespace seriate
