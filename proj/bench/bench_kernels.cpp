// Times the parallel scanning kernels against the serial reference loops on
// iid data.  Each row checks agreement before it reports, so a speedup is
// never quoted for a kernel that drifted from its oracle.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include <omp.h>

#include "seriate/process.hpp"
#include "seriate/recurrence.hpp"
#include "seriate/reference.hpp"
#include "seriate/scan.hpp"
#include "seriate/sequence.hpp"

using namespace seriate;

namespace {

template <typename Fn>
double best_ms(Fn&& fn, int reps = 3) {
    fn();  // warm caches and the OpenMP pool
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

void row(const char* kernel, std::int64_t length, double par_ms, double ser_ms) {
    std::printf("%-14s %12lld %12.2f %12.2f %9.2fx\n", kernel,
                static_cast<long long>(length), par_ms, ser_ms, ser_ms / par_ms);
}

[[noreturn]] void mismatch(const char* kernel, std::int64_t length) {
    std::fprintf(stderr, "%s disagrees with the reference at length %lld\n", kernel,
                 static_cast<long long>(length));
    std::exit(1);
}

SymbolSequence make_input(std::int64_t length) {
    ProcessSpec spec;
    spec.kind = ProcessKind::iid;
    spec.alphabet = Alphabet{2};
    spec.p = {0.9, 0.1};
    spec.seed = 42;
    return generate(spec, length);
}

} // namespace

int main() {
    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-14s %12s %12s %12s %10s\n", "kernel", "length", "parallel_ms",
                "serial_ms", "speedup");

    const Block b = parse_block(Alphabet{2}, "011");

    for (const std::int64_t length : {std::int64_t{1} << 20, std::int64_t{1} << 22,
                                      std::int64_t{1} << 24}) {
        const SymbolSequence seq = make_input(length);
        OccurrenceList occ;
        std::vector<std::int64_t> naive;
        const double par = best_ms([&] { occ = scan_occurrences(seq, b); });
        const double ser = best_ms([&] { naive = reference::scan_positions_naive(seq, b); });
        if (occ.positions != naive) mismatch("scan", length);
        row("scan", length, par, ser);
    }

    for (const std::int64_t length : {std::int64_t{1} << 20, std::int64_t{1} << 22}) {
        const SymbolSequence seq = make_input(length);
        const auto occ = scan_occurrences(seq, b);
        EntryTimes et;
        reference::EntryTimesNaive naive;
        const double par = best_ms([&] { et = entry_times(seq, b, occ, 3); });
        const double ser = best_ms([&] { naive = reference::entry_times_naive(seq, b, 3); },
                                   1);
        if (et.times != naive.times || et.censored != naive.censored)
            mismatch("entry", length);
        row("entry", length, par, ser);
    }

    for (const std::int64_t length : {std::int64_t{1} << 20, std::int64_t{1} << 21}) {
        const SymbolSequence seq = make_input(length);
        const auto occ = scan_occurrences(seq, b);
        ClusterStats cs;
        std::vector<std::int64_t> counts;
        const double par = best_ms([&] { cs = cluster_stats(seq, b, occ, 2.0); });
        const double ser = best_ms(
            [&] { counts = reference::window_counts_naive(seq, b, cs.window - 1, 1); }, 1);
        if (static_cast<std::int64_t>(counts.size()) != cs.origins) mismatch("windows", length);
        double total = 0.0;
        for (const std::int64_t v : counts) total += static_cast<double>(v);
        if (std::abs(cs.mean_I - total / static_cast<double>(counts.size())) > 1e-9)
            mismatch("windows", length);
        row("windows", length, par, ser);
    }

    return 0;
}
