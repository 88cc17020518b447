#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "seriate/sequence.hpp"

namespace seriate {

enum class ProcessKind { iid, markov, rotation, periodic };

// Description of a stationary symbolic source.  Serialized as a key=value
// config file (see read_process_spec); the seed can be overridden at the CLI.
//
//   iid       p: symbol probabilities, sum 1
//   markov    init: initial distribution; rows: transition matrix by row
//   rotation  alpha: rotation angle; cuts: strictly increasing cut points in
//             [0,1).  Cell i is [cuts[i], cuts[i+1]) and the last cell wraps
//             around through 1 to cuts[0].  The starting phase is drawn from
//             the seed; each step adds alpha mod 1.
//   periodic  word: repeated verbatim
struct ProcessSpec {
    ProcessKind kind = ProcessKind::iid;
    Alphabet alphabet;
    std::uint64_t seed = 0;

    std::vector<double> p;                   // iid
    std::vector<double> init;                // markov
    std::vector<std::vector<double>> rows;   // markov
    double alpha = 0.0;                      // rotation
    std::vector<double> cuts;                // rotation
    std::vector<std::uint8_t> word;          // periodic

    void validate() const;
};

// Deterministic in (spec, length, seed override): same inputs, same symbols,
// on any platform (see rng.hpp for the draw conventions).
SymbolSequence generate(const ProcessSpec& spec, std::int64_t length);

// Exact stationary probability of observing b at a fixed position.
//   iid      product of p[b_i]
//   markov   init[b_0] * prod transition[b_i][b_i+1]
//   periodic frequency of b among the cyclic shifts of the word
//   rotation unsupported (throws): no closed form is implemented
double exact_block_probability(const ProcessSpec& spec, const Block& b);

ProcessSpec read_process_spec(const std::string& path);
void write_process_spec(const std::string& path, const ProcessSpec& spec);

} // namespace seriate
