#pragma once
#include <utility>
#include <vector>

#include "seriate/sequence.hpp"

namespace seriate {

// All start positions of b in seq, overlaps included.  OpenMP-parallel over
// chunks of start positions; results are position-sorted regardless of the
// thread count.  Alphabet mismatch throws.
OccurrenceList scan_occurrences(const SymbolSequence& seq, const Block& b);

// count / (T - n + 1); requires the block to fit in the sequence.
double empirical_measure(const OccurrenceList& occ);

// Every distinct length-n block occurring at least min_count times, with its
// full occurrence list, ordered by first occurrence.  Single rolling pass;
// grouping keys on the exact window content, so counts match what
// scan_occurrences would report for each returned block.
std::vector<std::pair<Block, OccurrenceList>>
enumerate_blocks(const SymbolSequence& seq, std::int64_t n, std::int64_t min_count = 1);

// Fraction of positions where a and b disagree; lengths and alphabets must
// match.  This is the change budget metric for the recoding step.
double hamming_fraction(const SymbolSequence& a, const SymbolSequence& b);

} // namespace seriate
