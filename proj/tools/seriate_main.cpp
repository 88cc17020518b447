#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "seriate/ingest.hpp"
#include "seriate/limit_laws.hpp"
#include "seriate/perturb.hpp"
#include "seriate/process.hpp"
#include "seriate/recurrence.hpp"
#include "seriate/scan.hpp"
#include "seriate/sequence_io.hpp"
#include "seriate/stats_record.hpp"

namespace {

// exit codes: 0 success / verification pass, 1 verification fail,
// 2 usage or plan refusal, 3 data or i/o error
constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitData = 3;

void emit(const seriate::json& j, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << j.dump(2) << '\n';
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << j.dump(2) << '\n';
}

void emit_text(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
}

std::int64_t auto_family_length(std::int64_t K) {
    std::int64_t L = 5;
    while (((std::int64_t{1} << ((L - 3) / 2)) - 1) < K) L += 2;
    return L;
}

struct PlanFlags {
    double epsilon = 0.5;
    double delta = 0.15;
    std::int64_t K = 0;  // 0 = auto
    std::int64_t L = 0;
    std::int64_t r = 0;
    std::int64_t M = 0;
    std::int64_t N = 0;
    std::uint64_t seed = 1;

    seriate::PerturbationPlan resolve() const {
        seriate::PerturbationPlan p;
        p.epsilon = epsilon;
        p.delta = delta;
        p.seed = seed;
        p.K = K > 0 ? K : static_cast<std::int64_t>(std::ceil(2.0 / (epsilon * epsilon) - 1e-9));
        p.L = L > 0 ? L : auto_family_length(p.K);
        p.r = r > 0 ? r : 2 * static_cast<std::int64_t>(std::ceil(2.0 * static_cast<double>(p.L) / delta));
        p.M = M > 0 ? M : std::max<std::int64_t>(p.r + p.L + 1, 15 * (p.r + 1));
        p.N = N > 0 ? N : 2 * p.r + 2;
        p.validate();
        return p;
    }
};

void add_plan_flags(CLI::App* cmd, PlanFlags& f) {
    cmd->add_option("--epsilon", f.epsilon, "target scale (0,1)")->capture_default_str();
    cmd->add_option("--delta", f.delta, "change budget (0,1]")->capture_default_str();
    cmd->add_option("--sectors,-K", f.K, "sectors per span (default ceil(2/epsilon^2))");
    cmd->add_option("--block-length,-L", f.L, "family block length, odd (default smallest feasible)");
    cmd->add_option("--marker-gap,-r", f.r, "marker gap scale (default from delta)");
    cmd->add_option("--sector-length,-M", f.M, "sector length (default ~15 marker gaps)");
    cmd->add_option("--min-block,-N", f.N, "shortest verifiable block length (default 2r+2)");
    cmd->add_option("--plan-seed", f.seed, "seed for markers and family choice")->capture_default_str();
}

int run(int argc, char** argv) {
    CLI::App app{"recurrence and clustering statistics of rare blocks in symbolic sequences"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "worker threads (default: library decides)");

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "generate a sequence from a process spec");
    std::string gen_spec, gen_out, gen_report;
    std::int64_t gen_length = 0;
    bool gen_seed_set = false;
    std::uint64_t gen_seed = 0;
    gen->add_option("--spec", gen_spec, "process spec file (key=value)")->required();
    gen->add_option("--length", gen_length, "symbols to generate")->required()
        ->check(CLI::PositiveNumber);
    gen->add_option("--out", gen_out, "output sequence path (.txt or .sym)")->required();
    gen->add_option("--seed", gen_seed, "override the spec's seed")
        ->each([&](const std::string&) { gen_seed_set = true; });
    gen->add_option("--report", gen_report, "write the run summary here instead of stdout");

    // ---- stats ----
    auto* stats = app.add_subcommand("stats", "recurrence statistics of one block");
    std::string st_in, st_block, st_out, st_format = "json", st_table;
    std::int64_t st_stride = 1;
    double st_epsilon = 0.5, st_tcluster = 1.0;
    std::vector<double> st_grid;
    stats->add_option("--in", st_in, "sequence file")->required();
    stats->add_option("--block", st_block, "block, e.g. 0001 or 0,0,0,1")->required();
    stats->add_option("--stride", st_stride, "origin stride for entry times")
        ->check(CLI::PositiveNumber)->capture_default_str();
    stats->add_option("--epsilon", st_epsilon, "strong-clustering scale")->capture_default_str();
    stats->add_option("--t-cluster", st_tcluster, "normalized window for the census")
        ->capture_default_str();
    stats->add_option("--t-grid", st_grid, "verdict grid (default 0.1 0.25 0.5 1 2 4)");
    stats->add_option("--out", st_out, "output path (default stdout)");
    stats->add_option("--format", st_format, "json or csv")->capture_default_str()
        ->check(CLI::IsMember({"json", "csv"}));
    stats->add_option("--table", st_table, "csv table: return or entry")
        ->check(CLI::IsMember({"return", "entry"}));

    // ---- perturb ----
    auto* pert = app.add_subcommand("perturb", "apply the burst-manufacturing recode");
    std::string pe_in, pe_out, pe_report;
    PlanFlags pe_flags;
    pert->add_option("--in", pe_in, "input sequence")->required();
    pert->add_option("--out", pe_out, "output sequence")->required();
    pert->add_option("--report", pe_report, "write the recode report here instead of stdout");
    add_plan_flags(pert, pe_flags);

    // ---- verify ----
    auto* ver = app.add_subcommand("verify", "check the strong-clustering criterion over a length range");
    std::string ve_in, ve_out, ve_format = "json", ve_table;
    PlanFlags ve_flags;
    std::int64_t ve_nlo = 0, ve_nhi = 0, ve_min_count = 200;
    double ve_eps_override = 0.0;
    ver->add_option("--in", ve_in, "sequence file")->required();
    ver->add_option("--n-lo", ve_nlo, "first block length (default: the plan's N)");
    ver->add_option("--n-hi", ve_nhi, "last block length (default: n-lo)");
    ver->add_option("--min-count", ve_min_count, "occurrence threshold for a block to qualify")
        ->check(CLI::PositiveNumber)->capture_default_str();
    ver->add_option("--check-epsilon", ve_eps_override,
                    "scale for the check (default: the plan's epsilon)");
    ver->add_option("--out", ve_out, "output path (default stdout)");
    ver->add_option("--format", ve_format, "json or csv")->capture_default_str()
        ->check(CLI::IsMember({"json", "csv"}));
    ver->add_option("--table", ve_table, "csv table: lengths")
        ->check(CLI::IsMember({"lengths"}));
    add_plan_flags(ver, ve_flags);

    // ---- ingest ----
    auto* ing = app.add_subcommand("ingest", "recurrence readout of an event-timestamp file");
    std::string in_events, in_out, in_emit;
    int in_column = 0;
    double in_eps = 0.5;
    std::vector<double> in_widths;
    ing->add_option("--events", in_events, "timestamp file, one event per line")->required();
    ing->add_option("--column", in_column, "0-based field index on each line")
        ->capture_default_str();
    ing->add_option("--bin-width", in_widths,
                    "bin width(s); default: quarter median gap");
    ing->add_option("--epsilon", in_eps, "strong-clustering scale")->capture_default_str();
    ing->add_option("--emit-binary", in_emit, "also write the binarized sequence (first width)");
    ing->add_option("--out", in_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#endif

    using namespace seriate;

    if (gen->parsed()) {
        ProcessSpec spec = read_process_spec(gen_spec);
        if (gen_seed_set) spec.seed = gen_seed;
        SymbolSequence seq = generate(spec, gen_length);
        write_sequence(gen_out, seq);
        emit(json{{"command", "gen"},
                  {"spec", process_spec_json(spec)},
                  {"length", gen_length},
                  {"out", gen_out}},
             gen_report);
        return kExitPass;
    }

    if (stats->parsed()) {
        if (st_format == "csv" && st_table.empty())
            throw CLI::ValidationError("--format csv needs --table");
        SymbolSequence seq = read_sequence(st_in);
        Block b = parse_block(seq.alphabet, st_block);
        OccurrenceList occ = scan_occurrences(seq, b);
        if (occ.count() < 2)
            throw std::runtime_error("block occurs fewer than twice; no statistics");

        BlockStats s;
        s.block = format_block(b);
        s.n = b.length();
        s.count = occ.count();
        s.mu_hat = empirical_measure(occ);
        s.stride = st_stride;
        GapList gaps = return_gaps(occ);
        s.kac = kac_statistic(gaps);
        s.return_cdf = ecdf(gaps.gaps, gaps.mu_hat, CdfKind::return_time);
        EntryTimes entries = entry_times(seq, b, occ, st_stride);
        s.censored = entries.censored;
        s.entry_cdf = ecdf(entries.times, entries.mu_hat, CdfKind::entry_time);
        s.star_resid = star_residual(s.entry_cdf, s.return_cdf, 3.0);
        s.cluster = cluster_stats(seq, b, occ, st_tcluster, st_stride);
        const double tol = default_tolerance(static_cast<std::int64_t>(entries.times.size()));
        const auto& grid = st_grid.empty() ? default_t_grid() : st_grid;
        s.verdict = classify(s.entry_cdf, grid, tol, s.mu_hat);
        s.strong = strong_clustering(s.entry_cdf, st_epsilon);
        s.entropy = check_entropy_bound(s.entry_cdf, tol);

        if (st_format == "csv")
            emit_text(ecdf_csv(st_table == "return" ? s.return_cdf : s.entry_cdf), st_out);
        else
            emit(json{{"command", "stats"}, {"in", st_in}, {"stats", block_stats_json(s)}}, st_out);
        return kExitPass;
    }

    if (pert->parsed()) {
        PerturbationPlan plan = pe_flags.resolve();
        SymbolSequence seq = read_sequence(pe_in);
        PerturbResult res = perturb(seq, plan);
        write_sequence(pe_out, res.sequence);
        emit(json{{"command", "perturb"},
                  {"in", pe_in},
                  {"out", pe_out},
                  {"report", plan_report_json(res.report)}},
             pe_report);
        return kExitPass;
    }

    if (ver->parsed()) {
        if (ve_format == "csv" && ve_table.empty())
            throw CLI::ValidationError("--format csv needs --table");
        PerturbationPlan plan = ve_flags.resolve();
        SymbolSequence seq = read_sequence(ve_in);
        const std::int64_t n_lo = ve_nlo > 0 ? ve_nlo : plan.N;
        std::int64_t n_hi = ve_nhi > 0 ? ve_nhi : n_lo;
        if (n_hi > plan.N * plan.N) {
            std::cerr << "note: n-hi clamped to N^2 = " << plan.N * plan.N << "\n";
            n_hi = plan.N * plan.N;
        }
        const double eps = ve_eps_override > 0.0 ? ve_eps_override : plan.epsilon;
        VerificationReport rep = verify_theorem(seq, plan, n_lo, n_hi, ve_min_count, eps);
        if (ve_format == "csv")
            emit_text(verification_csv(rep), ve_out);
        else
            emit(json{{"command", "verify"},
                      {"in", ve_in},
                      {"plan", plan_json(plan)},
                      {"report", verification_json(rep)}},
                 ve_out);
        return rep.pass ? kExitPass : kExitVerifyFail;
    }

    if (ing->parsed()) {
        EventSeries events = parse_events(in_events, in_column);
        std::vector<double> widths = in_widths;
        if (widths.empty()) widths.push_back(default_bin_width(events));
        json reports = json::array();
        for (const double w : widths)
            reports.push_back(burst_report_json(burst_report(events, w, in_eps)));
        if (!in_emit.empty()) write_sequence(in_emit, binarize(events, widths.front()));
        emit(json{{"command", "ingest"},
                  {"events", in_events},
                  {"n_events", events.count()},
                  {"span", json::array({events.begin(), events.end()})},
                  {"epsilon", in_eps},
                  {"reports", std::move(reports)}},
             in_out);
        return kExitPass;
    }

    return kExitUsage;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
}
