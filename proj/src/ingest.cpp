#include "seriate/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "seriate/scan.hpp"

namespace seriate {

EventSeries make_event_series(std::vector<double> timestamps) {
    if (timestamps.empty()) throw std::runtime_error("event series: no events");
    EventSeries s;
    s.was_unsorted = !std::is_sorted(timestamps.begin(), timestamps.end());
    if (s.was_unsorted) std::sort(timestamps.begin(), timestamps.end());
    const auto last = std::unique(timestamps.begin(), timestamps.end());
    s.duplicates_removed = static_cast<std::int64_t>(std::distance(last, timestamps.end()));
    timestamps.erase(last, timestamps.end());
    s.timestamps = std::move(timestamps);
    return s;
}

EventSeries parse_events(const std::string& path, int column) {
    if (column < 0) throw std::invalid_argument("parse_events: column must be non-negative");
    std::ifstream in(path);
    if (!in) throw std::runtime_error("parse_events: cannot open " + path);

    std::vector<double> stamps;
    std::string line;
    std::int64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        for (char& c : line)
            if (c == ',' || c == '\t' || c == '\r') c = ' ';
        std::istringstream fields(line);
        std::string tok;
        int idx = -1;
        std::string picked;
        while (fields >> tok) {
            if (tok[0] == '#') break;
            ++idx;
            if (idx == column) {
                picked = tok;
                break;
            }
        }
        if (idx < 0) continue;  // blank or comment-only line
        if (picked.empty())
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": fewer than " + std::to_string(column + 1) + " fields");
        char* endp = nullptr;
        const double v = std::strtod(picked.c_str(), &endp);
        if (endp == picked.c_str() || *endp != '\0' || !std::isfinite(v))
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": not a finite number: '" + picked + "'");
        stamps.push_back(v);
    }
    if (stamps.empty()) throw std::runtime_error("parse_events: no events in " + path);
    return make_event_series(std::move(stamps));
}

double default_bin_width(const EventSeries& events) {
    if (events.count() < 2)
        throw std::invalid_argument("default_bin_width: need at least two events");
    std::vector<double> gaps;
    gaps.reserve(static_cast<std::size_t>(events.count()) - 1);
    for (std::size_t i = 1; i < events.timestamps.size(); ++i)
        gaps.push_back(events.timestamps[i] - events.timestamps[i - 1]);
    std::sort(gaps.begin(), gaps.end());
    const std::size_t n = gaps.size();
    const double median = (n % 2 == 1) ? gaps[n / 2] : 0.5 * (gaps[n / 2 - 1] + gaps[n / 2]);
    if (!(median > 0.0)) throw std::runtime_error("default_bin_width: median gap is zero");
    return median / 4.0;
}

SymbolSequence binarize(const EventSeries& events, double bin_width) {
    if (!(bin_width > 0.0) || !std::isfinite(bin_width))
        throw std::invalid_argument("binarize: bin width must be positive and finite");
    const double begin = events.begin();
    const double span = events.end() - begin;
    const std::int64_t n_bins = static_cast<std::int64_t>(std::floor(span / bin_width)) + 1;
    if (n_bins < 1 || n_bins > (std::int64_t{1} << 33))
        throw std::runtime_error("binarize: bin width yields an unreasonable bin count");

    std::vector<std::uint8_t> bins(static_cast<std::size_t>(n_bins), 0);
    for (const double t : events.timestamps) {
        std::int64_t i = static_cast<std::int64_t>(std::floor((t - begin) / bin_width));
        i = std::clamp<std::int64_t>(i, 0, n_bins - 1);
        bins[static_cast<std::size_t>(i)] = 1;
    }
    return make_sequence(Alphabet{2}, std::move(bins));
}

BurstReport burst_report(const EventSeries& events, double bin_width, double epsilon) {
    if (events.count() < 3)
        throw std::runtime_error("burst_report: need at least three events");

    BurstReport rep;
    rep.bin_width = bin_width;
    rep.n_events = events.count();
    rep.duplicates_removed = events.duplicates_removed;
    rep.was_unsorted = events.was_unsorted;

    const SymbolSequence seq = binarize(events, bin_width);
    rep.n_bins = seq.length();
    const Block one = make_block(seq.alphabet, {1});
    const OccurrenceList occ = scan_occurrences(seq, one);
    rep.occupied_bins = occ.count();
    if (rep.occupied_bins < 2)
        throw std::runtime_error("burst_report: bin width leaves fewer than two occupied bins");
    rep.mu_hat = empirical_measure(occ);

    const GapList gaps = return_gaps(occ);
    rep.kac = kac_statistic(gaps);
    rep.return_cdf = ecdf(gaps.gaps, gaps.mu_hat, CdfKind::return_time);

    const EntryTimes entries = entry_times(seq, one, occ, 1);
    rep.censored = entries.censored;
    rep.entry_cdf = ecdf(entries.times, entries.mu_hat, CdfKind::entry_time);

    rep.cluster = cluster_stats(seq, one, occ, 1.0);
    const double tol = default_tolerance(static_cast<std::int64_t>(entries.times.size()));
    rep.verdict = classify(rep.entry_cdf, default_t_grid(), tol, rep.mu_hat);
    rep.strong = strong_clustering(rep.entry_cdf, epsilon);

    std::map<std::int64_t, std::int64_t> hist;
    for (const std::int64_t g : gaps.gaps) ++hist[g];
    rep.gap_histogram.assign(hist.begin(), hist.end());
    std::stable_sort(rep.gap_histogram.begin(), rep.gap_histogram.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    if (rep.gap_histogram.size() > 32) rep.gap_histogram.resize(32);

    if (rep.was_unsorted) rep.notes.push_back("input timestamps were unsorted; sorted before analysis");
    if (rep.duplicates_removed > 0)
        rep.notes.push_back(std::to_string(rep.duplicates_removed) + " duplicate timestamps dropped");
    const double occupancy =
        static_cast<double>(rep.n_events) / static_cast<double>(rep.occupied_bins);
    if (occupancy > 1.5)
        rep.notes.push_back("bin width merges many events per bin; consider a smaller width");
    if (rep.mu_hat > 0.5)
        rep.notes.push_back("occupied-bin density above 1/2; the lattice allowance dominates");
    return rep;
}

} // namespace seriate
