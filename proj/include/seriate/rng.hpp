#pragma once
#include <cstdint>
#include <random>

namespace seriate {

// Deterministic random source used everywhere a seed appears in the API.
//
// Engine: std::mt19937_64, which the C++ standard pins down bit-for-bit.
// All derived draws below are implemented here instead of with <random>
// distributions, because the standard leaves distribution algorithms
// unspecified and identical seeds must reproduce identical output on any
// platform.  Conventions:
//   next_u64   - raw engine output
//   next_unit  - (x >> 11) * 2^-53, uniform on [0,1) with 53 random bits
//   next_below - Lemire multiply-shift reduction onto [0,n)
struct Rng {
    std::mt19937_64 engine;

    explicit Rng(std::uint64_t seed) : engine(seed) {}

    std::uint64_t next_u64() { return engine(); }

    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    std::uint64_t next_below(std::uint64_t n) {
        // map a 64-bit draw onto [0,n) via the high half of a 128-bit product;
        // bias is < 2^-64 per draw, irrelevant at our sample sizes
        using u128 = unsigned __int128;
        return static_cast<std::uint64_t>((u128(next_u64()) * u128(n)) >> 64);
    }
};

} // namespace seriate
