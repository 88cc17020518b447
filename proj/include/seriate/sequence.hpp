#pragma once
#include <cstdint>
#include <string>
#include <vector>

namespace seriate {

// Finite alphabet {0, 1, ..., size-1}.  Symbols are stored in one byte each,
// so size is capped at 256; every construction below checks symbols against
// the alphabet it was given.
struct Alphabet {
    std::uint32_t size = 2;
};

bool operator==(const Alphabet& a, const Alphabet& b);

// Flat symbol array.  data[i] < alphabet.size is an invariant enforced by the
// constructors in this header and by the file readers.
struct SymbolSequence {
    Alphabet alphabet;
    std::vector<std::uint8_t> data;

    std::int64_t length() const { return static_cast<std::int64_t>(data.size()); }
};

// A fixed word over the same alphabet; the object of all recurrence queries.
struct Block {
    Alphabet alphabet;
    std::vector<std::uint8_t> pattern;

    std::int64_t length() const { return static_cast<std::int64_t>(pattern.size()); }
};

// Sorted start positions of the occurrences of one block in one sequence.
// Overlapping occurrences all count.  sequence_length and block_length are
// carried so downstream statistics can normalize without the inputs.
struct OccurrenceList {
    std::vector<std::int64_t> positions;
    std::int64_t sequence_length = 0;
    std::int64_t block_length = 0;

    std::int64_t count() const { return static_cast<std::int64_t>(positions.size()); }
    // number of start slots a block of this length has in the sequence
    std::int64_t slots() const { return sequence_length - block_length + 1; }
};

SymbolSequence make_sequence(Alphabet a, std::vector<std::uint8_t> data);
Block make_block(Alphabet a, std::vector<std::uint8_t> pattern);

// Parse "0110" (alphabet size <= 10) or "0,1,1,0" into a block.
Block parse_block(Alphabet a, const std::string& text);
std::string format_block(const Block& b);

void require_same_alphabet(const Alphabet& a, const Alphabet& b);

} // namespace seriate
