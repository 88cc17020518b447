#pragma once
#include <string>

#include "seriate/sequence.hpp"

namespace seriate {

// Sequence files carry their alphabet in a one-line ASCII header
//
//   alphabet=<l>\n
//
// followed by the symbols.  Two layouts, chosen by file extension:
//
//   .txt  text symbols.  For l <= 10 a run of ASCII digits (whitespace and
//         line breaks ignored); for l > 10 whitespace-separated integers.
//   .sym  raw bytes, one symbol per byte, values 0..l-1.
//
// Any other extension is treated as .txt.  Readers reject out-of-range
// symbols and malformed headers.
SymbolSequence read_sequence(const std::string& path);
void write_sequence(const std::string& path, const SymbolSequence& seq);

} // namespace seriate
