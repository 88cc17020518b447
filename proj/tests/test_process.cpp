#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <stdexcept>

#include "seriate/process.hpp"
#include "seriate/scan.hpp"

using namespace seriate;

namespace {

ProcessSpec iid_spec(std::vector<double> p, std::uint64_t seed) {
    ProcessSpec s;
    s.kind = ProcessKind::iid;
    s.p = std::move(p);
    s.alphabet.size = static_cast<std::uint32_t>(s.p.size());
    s.seed = seed;
    return s;
}

ProcessSpec markov_spec(std::vector<double> init, std::vector<std::vector<double>> rows,
                        std::uint64_t seed) {
    ProcessSpec s;
    s.kind = ProcessKind::markov;
    s.init = std::move(init);
    s.rows = std::move(rows);
    s.alphabet.size = static_cast<std::uint32_t>(s.init.size());
    s.seed = seed;
    return s;
}

} // namespace

TEST_CASE("periodic source repeats its word verbatim") {
    ProcessSpec s;
    s.kind = ProcessKind::periodic;
    s.word = {0, 1};
    s.alphabet.size = 2;
    const SymbolSequence seq = generate(s, 5);
    CHECK(seq.data == std::vector<std::uint8_t>{0, 1, 0, 1, 0});
}

TEST_CASE("generation is deterministic in the seed") {
    const ProcessSpec s = iid_spec({0.25, 0.75}, 99);
    const SymbolSequence a = generate(s, 5000);
    const SymbolSequence b = generate(s, 5000);
    CHECK(a.data == b.data);

    ProcessSpec other = s;
    other.seed = 100;
    CHECK(generate(other, 5000).data != a.data);
}

TEST_CASE("iid frequencies converge to the law") {
    const double p1 = 0.3;
    const std::int64_t T = 1 << 18;
    const SymbolSequence seq = generate(iid_spec({1.0 - p1, p1}, 4242), T);
    const auto occ = scan_occurrences(seq, make_block(seq.alphabet, {1}));
    const double mu = empirical_measure(occ);
    const double sigma = std::sqrt(p1 * (1.0 - p1) / static_cast<double>(T));
    CHECK(std::abs(mu - p1) <= 4.0 * sigma);
}

TEST_CASE("markov frequencies converge to the stationary law") {
    // two-state chain with stationary distribution (4/7, 3/7)
    const ProcessSpec s =
        markov_spec({4.0 / 7.0, 3.0 / 7.0}, {{0.7, 0.3}, {0.4, 0.6}}, 1234);
    const std::int64_t T = 1 << 18;
    const SymbolSequence seq = generate(s, T);
    const auto occ = scan_occurrences(seq, make_block(seq.alphabet, {1}));
    const double mu = empirical_measure(occ);
    const double target = 3.0 / 7.0;
    // correlated samples: inflate the iid band by the chain's mixing factor
    const double sigma = std::sqrt(target * (1.0 - target) / static_cast<double>(T));
    CHECK(std::abs(mu - target) <= 10.0 * sigma);
}

TEST_CASE("exact block probabilities") {
    SUBCASE("iid product") {
        const ProcessSpec s = iid_spec({0.6, 0.4}, 1);
        const Block b = parse_block(Alphabet{2}, "010");
        CHECK(exact_block_probability(s, b) == doctest::Approx(0.6 * 0.4 * 0.6));
    }
    SUBCASE("markov chain rule") {
        const ProcessSpec s = markov_spec({0.5, 0.5}, {{0.9, 0.1}, {0.2, 0.8}}, 1);
        const Block b = parse_block(Alphabet{2}, "011");
        CHECK(exact_block_probability(s, b) == doctest::Approx(0.5 * 0.1 * 0.8));
    }
    SUBCASE("periodic cyclic frequency") {
        ProcessSpec s;
        s.kind = ProcessKind::periodic;
        s.word = {0, 1, 1};
        s.alphabet.size = 2;
        // shifts of 011: 011, 110, 101 -> "11" occurs in one of three phases
        CHECK(exact_block_probability(s, parse_block(Alphabet{2}, "11")) ==
              doctest::Approx(1.0 / 3.0));
        CHECK(exact_block_probability(s, parse_block(Alphabet{2}, "00")) == 0.0);
    }
    SUBCASE("rotation has no closed form here") {
        ProcessSpec s;
        s.kind = ProcessKind::rotation;
        s.alpha = 0.61;
        s.cuts = {0.0, 0.61};
        s.alphabet.size = 2;
        CHECK_THROWS_AS(exact_block_probability(s, parse_block(Alphabet{2}, "01")),
                        std::invalid_argument);
    }
}

TEST_CASE("rotation coding has low word complexity") {
    // irrational rotation with the two-cell partition at the rotation angle
    // is Sturmian-like: the number of distinct length-n factors grows
    // linearly, far below the 2^n of a positive-entropy source
    ProcessSpec s;
    s.kind = ProcessKind::rotation;
    s.alpha = 0.6180339887498949;  // golden ratio conjugate
    s.cuts = {0.0, 1.0 - 0.6180339887498949};
    s.alphabet.size = 2;
    s.seed = 77;
    const SymbolSequence seq = generate(s, 40000);
    for (const std::int64_t n : {std::int64_t{4}, std::int64_t{8}, std::int64_t{12}}) {
        const auto groups = enumerate_blocks(seq, n);
        CHECK(static_cast<std::int64_t>(groups.size()) <= 2 * n);
    }
}

TEST_CASE("validation rejects malformed specs") {
    CHECK_THROWS_AS(generate(iid_spec({0.5, 0.4}, 1), 10), std::invalid_argument);
    CHECK_THROWS_AS(generate(iid_spec({1.2, -0.2}, 1), 10), std::invalid_argument);
    CHECK_THROWS_AS(generate(markov_spec({0.5, 0.5}, {{1.0, 0.0}}, 1), 10),
                    std::invalid_argument);
    CHECK_THROWS_AS(generate(markov_spec({0.5, 0.5}, {{0.7, 0.2}, {0.4, 0.6}}, 1), 10),
                    std::invalid_argument);

    ProcessSpec rot;
    rot.kind = ProcessKind::rotation;
    rot.alpha = 0.5;  // rational angles are fine; cut validation is what matters
    rot.cuts = {0.3, 0.1};
    rot.alphabet.size = 2;
    CHECK_THROWS_AS(generate(rot, 10), std::invalid_argument);

    ProcessSpec per;
    per.kind = ProcessKind::periodic;
    per.alphabet.size = 2;
    CHECK_THROWS_AS(generate(per, 10), std::invalid_argument);

    CHECK_THROWS_AS(generate(iid_spec({0.5, 0.5}, 1), 0), std::invalid_argument);
}

TEST_CASE("spec files round trip") {
    namespace fs = std::filesystem;
    const auto dir = fs::temp_directory_path();

    const auto p1 = (dir / "seriate_spec_iid.cfg").string();
    write_process_spec(p1, iid_spec({0.25, 0.75}, 42));
    const ProcessSpec r1 = read_process_spec(p1);
    CHECK(r1.kind == ProcessKind::iid);
    CHECK(r1.p == std::vector<double>{0.25, 0.75});
    CHECK(r1.seed == 42);
    CHECK(generate(r1, 100).data == generate(iid_spec({0.25, 0.75}, 42), 100).data);

    const auto p2 = (dir / "seriate_spec_mk.cfg").string();
    write_process_spec(p2, markov_spec({0.5, 0.5}, {{0.9, 0.1}, {0.2, 0.8}}, 7));
    const ProcessSpec r2 = read_process_spec(p2);
    CHECK(r2.kind == ProcessKind::markov);
    CHECK(r2.rows[1][1] == doctest::Approx(0.8));

    fs::remove(p1);
    fs::remove(p2);
}
