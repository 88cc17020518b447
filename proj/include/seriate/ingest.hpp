#pragma once
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "seriate/limit_laws.hpp"
#include "seriate/recurrence.hpp"
#include "seriate/sequence.hpp"

namespace seriate {

// A sorted, deduplicated series of event timestamps.
struct EventSeries {
    std::vector<double> timestamps;
    std::int64_t duplicates_removed = 0;
    bool was_unsorted = false;

    std::int64_t count() const { return static_cast<std::int64_t>(timestamps.size()); }
    double begin() const { return timestamps.front(); }
    double end() const { return timestamps.back(); }
};

// Reads one timestamp per line; `column` (0-based) selects the field on each
// line, with commas and whitespace both accepted as separators.  Blank lines
// and lines starting with '#' are skipped.  Unsorted input is sorted (flagged
// in the result); exact duplicates are dropped and counted.  Malformed lines
// raise with the path and line number.
EventSeries parse_events(const std::string& path, int column = 0);

// In-memory variant used by tests and by parse_events itself.
EventSeries make_event_series(std::vector<double> timestamps);

// Quarter of the median inter-event gap: small enough that multi-event bins
// are rare, large enough that the 1-block is not vanishingly rare.
double default_bin_width(const EventSeries& events);

// Binary sequence over [begin, end] with floor((end-begin)/w)+1 bins: bin i
// covers [begin + i*w, begin + (i+1)*w) and holds 1 iff it contains an event
// (the final event lands in the last bin by the +1).
SymbolSequence binarize(const EventSeries& events, double bin_width);

struct BurstReport {
    double bin_width = 0.0;
    std::int64_t n_bins = 0;
    std::int64_t n_events = 0;
    std::int64_t occupied_bins = 0;
    std::int64_t duplicates_removed = 0;
    bool was_unsorted = false;
    double mu_hat = 0.0;
    double kac = 0.0;
    std::int64_t censored = 0;
    EmpiricalCdf return_cdf;
    EmpiricalCdf entry_cdf;
    ClusterStats cluster;  // at normalized window t = 1
    ClusterVerdict verdict;
    StrongClusterCheck strong;
    std::vector<std::pair<std::int64_t, std::int64_t>> gap_histogram;  // (gap, count), by count desc
    std::vector<std::string> notes;
};

// Full recurrence readout of the occupied-bin process at one bin width:
// Kac check, both empirical laws, the window census at t=1, the verdict on
// the default grid with the lattice allowance at this mu_hat, and the strong
// clustering probe at `epsilon`.  Requires at least three events.
BurstReport burst_report(const EventSeries& events, double bin_width, double epsilon);

} // namespace seriate
