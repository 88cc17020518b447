#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "seriate/markers.hpp"
#include "seriate/sequence.hpp"
#include "seriate/wfamily.hpp"

namespace seriate {

// Parameters of the burst-manufacturing recode.  The plan is deterministic:
// markers, family choice and every write follow from (sequence, plan).
//
//   epsilon  target scale; the verifier checks entry mass below epsilon
//            against epsilon^2
//   delta    change budget; the marker density obeys r > 2L/delta so marker
//            writes cost less than delta/2 of the sequence
//   K        number of sectors per super-span, >= ceil(2/epsilon^2)
//   L        family block length, odd >= 5, with 2^((L-3)/2) - 1 >= K
//   r        marker gap scale
//   M        sector length; every sector must fit at least one branded block
//   N        shortest block length the verifier may be pointed at, >= 2r+2,
//            so every such block strides a whole marker gap plus a branded
//            write
struct PerturbationPlan {
    double epsilon = 0.5;
    double delta = 0.15;
    std::int64_t K = 8;
    std::int64_t L = 11;
    std::int64_t r = 200;
    std::int64_t M = 3000;
    std::int64_t N = 402;
    std::uint64_t seed = 1;

    std::int64_t r1() const { return K * M; }
    std::int64_t m() const { return (L - 1) / 2; }
    void validate() const;
};

// Marker grid, super-span anchors and the modified core for a plan applied to
// a sequence of the given length.  Super-span anchors are the markers nearest
// the absolute multiples of r1 = K*M, so sector boundaries stay aligned with
// the plan while sitting on the real grid.  The core is the half-open range
// between the first and last anchor; the partial stretches outside it are
// never modified and never verified.
struct PlanLayout {
    MarkerSet markers;
    std::vector<std::int64_t> anchors;  // r1-markers
    std::int64_t core_lo = 0;
    std::int64_t core_hi = 0;

    // sector index 0..K-1 of a core position
    std::int64_t sector_of(std::int64_t pos, const PerturbationPlan& plan) const;
};
PlanLayout plan_layout(std::int64_t length, const PerturbationPlan& plan);

struct SectorTally {
    std::int64_t branded = 0;        // branded markers carrying this sector's block
    std::int64_t branded_min = 0;    // minimum per span (realized visit count)
    double branded_mean = 0.0;
    std::int64_t replacements = 0;   // foreign family occurrences overwritten
};

struct PlanReport {
    PerturbationPlan plan;
    std::int64_t length = 0;
    std::int64_t n_markers = 0;
    std::int64_t n_anchors = 0;
    std::int64_t n_spans = 0;
    std::int64_t core_lo = 0;
    std::int64_t core_hi = 0;
    std::int64_t leading_excluded = 0;
    std::int64_t trailing_excluded = 0;
    std::int64_t branded = 0;
    std::int64_t branding_changed = 0;   // symbols changed by branding writes
    std::int64_t skipped_straddle = 0;   // markers too close to a sector end
    std::int64_t replaced = 0;
    std::int64_t replacement_changed = 0;
    std::int64_t changed_positions = 0;
    double change_fraction = 0.0;
    double l_over_r = 0.0;   // marker-write budget share
    double w_mass = 0.0;     // sum over the family of L * input measure
    double edge_term = 0.0;  // L / T slack in the budget inequality
    std::int64_t boundary_straddles = 0;  // family occurrences crossing sectors after recode
    std::vector<SectorTally> sectors;
    std::vector<std::string> family;
};

struct PerturbResult {
    SymbolSequence sequence;
    double change_fraction = 0.0;
    PlanReport report;
};

// The recode: (1) markers, (2) sectors between consecutive anchors, (3) in
// sector k write W_k over the L symbols starting at every marker whose write
// fits inside the sector, (4) left-to-right, overwrite every remaining family
// occurrence inside sector k by W_k, resuming after each written block.
// Family members never overlap each other, so one pass terminates with the
// sector interior clean of foreign family blocks; edges and straddles are
// counted, not touched.  Applying the same plan twice changes nothing.
PerturbResult perturb(const SymbolSequence& seq, const PerturbationPlan& plan);

// One checked block: the entry statistic decides (fraction of core origins
// whose normalized waiting time is <= epsilon); the analogous return-gap
// fraction is carried for the report.
struct BlockFinding {
    std::int64_t n = 0;
    std::string block;
    std::int64_t count = 0;
    double mu_hat = 0.0;
    double entry_value = 0.0;
    double return_value = 0.0;
    std::int64_t censored = 0;
};

struct VerificationReport {
    double epsilon = 0.0;
    double threshold = 0.0;  // epsilon^2
    std::int64_t n_lo = 0;
    std::int64_t n_hi = 0;
    std::int64_t min_count = 0;
    std::int64_t core_lo = 0;
    std::int64_t core_hi = 0;
    std::int64_t lengths_scanned = 0;
    std::int64_t blocks_checked = 0;
    std::vector<BlockFinding> per_length_worst;
    BlockFinding worst;
    bool pass = false;
};

// For every length n in [n_lo, n_hi], finds every block occurring at least
// min_count times inside the plan's core and computes both recurrence
// statistics; passes iff the worst entry value stays below epsilon^2.
// Grouping uses a two-pass rolling-hash filter (pair of independent 61-bit
// Mersenne hashes) so the scan stays O(T) per length; the worst group's
// content is spot-checked against the sequence.  Throws if no block
// qualifies anywhere in the range.
VerificationReport verify_theorem(const SymbolSequence& seq, const PerturbationPlan& plan,
                                  std::int64_t n_lo, std::int64_t n_hi,
                                  std::int64_t min_count, double epsilon);

} // namespace seriate
