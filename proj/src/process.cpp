#include "seriate/process.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "seriate/rng.hpp"

namespace seriate {

static void check_distribution(const std::vector<double>& p, const char* what) {
    if (p.empty()) throw std::invalid_argument(std::string(what) + ": empty distribution");
    double sum = 0.0;
    for (double v : p) {
        if (v < 0.0 || !std::isfinite(v))
            throw std::invalid_argument(std::string(what) + ": probabilities must be >= 0");
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw std::invalid_argument(std::string(what) + ": probabilities must sum to 1");
}

void ProcessSpec::validate() const {
    if (alphabet.size < 2 || alphabet.size > 256)
        throw std::invalid_argument("process: alphabet size must be in [2,256]");
    switch (kind) {
    case ProcessKind::iid:
        if (p.size() != alphabet.size)
            throw std::invalid_argument("iid: p must have one entry per symbol");
        check_distribution(p, "iid p");
        break;
    case ProcessKind::markov:
        if (init.size() != alphabet.size || rows.size() != alphabet.size)
            throw std::invalid_argument("markov: init and rows must match alphabet");
        check_distribution(init, "markov init");
        for (const auto& row : rows) {
            if (row.size() != alphabet.size)
                throw std::invalid_argument("markov: row width must match alphabet");
            check_distribution(row, "markov row");
        }
        break;
    case ProcessKind::rotation: {
        if (cuts.size() != alphabet.size)
            throw std::invalid_argument("rotation: one cut per symbol required");
        if (!std::isfinite(alpha)) throw std::invalid_argument("rotation: bad alpha");
        for (std::size_t i = 0; i < cuts.size(); ++i) {
            if (cuts[i] < 0.0 || cuts[i] >= 1.0)
                throw std::invalid_argument("rotation: cuts must lie in [0,1)");
            if (i && cuts[i] <= cuts[i - 1])
                throw std::invalid_argument("rotation: cuts must be strictly increasing");
        }
        break;
    }
    case ProcessKind::periodic:
        if (word.empty()) throw std::invalid_argument("periodic: empty word");
        for (std::uint8_t s : word)
            if (s >= alphabet.size)
                throw std::invalid_argument("periodic: word symbol out of alphabet");
        break;
    }
}

// inverse-CDF draw over a small distribution; the linear walk is fine for
// alphabets this size and keeps the draw order platform-stable
static std::uint8_t draw(Rng& rng, const std::vector<double>& p) {
    double u = rng.next_unit();
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        acc += p[i];
        if (u < acc) return static_cast<std::uint8_t>(i);
    }
    return static_cast<std::uint8_t>(p.size() - 1);
}

SymbolSequence generate(const ProcessSpec& spec, std::int64_t length) {
    spec.validate();
    if (length < 1) throw std::invalid_argument("generate: length must be >= 1");
    SymbolSequence seq;
    seq.alphabet = spec.alphabet;
    seq.data.resize(static_cast<std::size_t>(length));
    Rng rng(spec.seed);

    switch (spec.kind) {
    case ProcessKind::iid:
        for (auto& s : seq.data) s = draw(rng, spec.p);
        break;
    case ProcessKind::markov: {
        std::uint8_t state = draw(rng, spec.init);
        seq.data[0] = state;
        for (std::int64_t i = 1; i < length; ++i) {
            state = draw(rng, spec.rows[state]);
            seq.data[static_cast<std::size_t>(i)] = state;
        }
        break;
    }
    case ProcessKind::rotation: {
        const double step = spec.alpha - std::floor(spec.alpha);
        double phase = rng.next_unit();
        for (std::int64_t i = 0; i < length; ++i) {
            // cell of phase under the wrap-around partition by cuts
            auto it = std::upper_bound(spec.cuts.begin(), spec.cuts.end(), phase);
            std::size_t cell = (it == spec.cuts.begin())
                                   ? spec.cuts.size() - 1   // phase < cuts[0]: wrap cell
                                   : static_cast<std::size_t>(it - spec.cuts.begin()) - 1;
            seq.data[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(cell);
            phase += step;
            if (phase >= 1.0) phase -= 1.0;
        }
        break;
    }
    case ProcessKind::periodic:
        for (std::int64_t i = 0; i < length; ++i)
            seq.data[static_cast<std::size_t>(i)] =
                spec.word[static_cast<std::size_t>(i % static_cast<std::int64_t>(spec.word.size()))];
        break;
    }
    return seq;
}

double exact_block_probability(const ProcessSpec& spec, const Block& b) {
    spec.validate();
    require_same_alphabet(spec.alphabet, b.alphabet);
    switch (spec.kind) {
    case ProcessKind::iid: {
        double prob = 1.0;
        for (std::uint8_t s : b.pattern) prob *= spec.p[s];
        return prob;
    }
    case ProcessKind::markov: {
        double prob = spec.init[b.pattern[0]];
        for (std::size_t i = 1; i < b.pattern.size(); ++i)
            prob *= spec.rows[b.pattern[i - 1]][b.pattern[i]];
        return prob;
    }
    case ProcessKind::periodic: {
        const std::int64_t w = static_cast<std::int64_t>(spec.word.size());
        std::int64_t hits = 0;
        for (std::int64_t s = 0; s < w; ++s) {
            bool ok = true;
            for (std::size_t j = 0; j < b.pattern.size(); ++j) {
                if (spec.word[static_cast<std::size_t>((s + static_cast<std::int64_t>(j)) % w)] !=
                    b.pattern[j]) { ok = false; break; }
            }
            if (ok) ++hits;
        }
        return static_cast<double>(hits) / static_cast<double>(w);
    }
    case ProcessKind::rotation:
        throw std::invalid_argument("exact_block_probability: unsupported for rotation");
    }
    throw std::logic_error("unreachable");
}

// ---- key=value config ------------------------------------------------------

static std::vector<double> parse_doubles(const std::string& s) {
    std::string cleaned = s;
    for (char& c : cleaned)
        if (c == ',') c = ' ';
    std::vector<double> out;
    std::stringstream ss(cleaned);
    double v;
    while (ss >> v) out.push_back(v);
    if (!ss.eof()) throw std::invalid_argument("malformed number list: '" + s + "'");
    return out;
}

ProcessSpec read_process_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open");
    std::map<std::string, std::string> kv;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected key = value");
        auto trim = [](std::string s) {
            auto a = s.find_first_not_of(" \t\r");
            auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }

    auto need = [&](const std::string& key) -> const std::string& {
        auto it = kv.find(key);
        if (it == kv.end()) throw std::runtime_error(path + ": missing key '" + key + "'");
        return it->second;
    };

    ProcessSpec spec;
    const std::string kind = need("kind");
    if (kv.count("seed")) spec.seed = std::stoull(kv["seed"]);

    if (kind == "iid") {
        spec.kind = ProcessKind::iid;
        spec.p = parse_doubles(need("p"));
        spec.alphabet.size = static_cast<std::uint32_t>(spec.p.size());
    } else if (kind == "markov") {
        spec.kind = ProcessKind::markov;
        spec.init = parse_doubles(need("init"));
        spec.alphabet.size = static_cast<std::uint32_t>(spec.init.size());
        for (std::uint32_t i = 0; i < spec.alphabet.size; ++i)
            spec.rows.push_back(parse_doubles(need("row" + std::to_string(i))));
    } else if (kind == "rotation") {
        spec.kind = ProcessKind::rotation;
        spec.alpha = std::stod(need("alpha"));
        spec.cuts = parse_doubles(need("cuts"));
        spec.alphabet.size = static_cast<std::uint32_t>(spec.cuts.size());
    } else if (kind == "periodic") {
        spec.kind = ProcessKind::periodic;
        const std::string& w = need("word");
        if (w.find(' ') == std::string::npos) {
            for (char c : w) {
                if (c < '0' || c > '9') throw std::runtime_error(path + ": bad word digit");
                spec.word.push_back(static_cast<std::uint8_t>(c - '0'));
            }
        } else {
            for (double v : parse_doubles(w))
                spec.word.push_back(static_cast<std::uint8_t>(v));
        }
        std::uint8_t top = 0;
        for (std::uint8_t s : spec.word) top = std::max(top, s);
        spec.alphabet.size = std::max<std::uint32_t>(2, top + 1u);
    } else {
        throw std::runtime_error(path + ": unknown kind '" + kind + "'");
    }
    if (kv.count("alphabet"))
        spec.alphabet.size = static_cast<std::uint32_t>(std::stoul(kv["alphabet"]));
    spec.validate();
    return spec;
}

void write_process_spec(const std::string& path, const ProcessSpec& spec) {
    spec.validate();
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path + ": cannot write");
    out.precision(17);
    auto row = [&](const std::vector<double>& v) {
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
        out << "\n";
    };
    switch (spec.kind) {
    case ProcessKind::iid:
        out << "kind = iid\np = "; row(spec.p); break;
    case ProcessKind::markov:
        out << "kind = markov\ninit = "; row(spec.init);
        for (std::size_t i = 0; i < spec.rows.size(); ++i) {
            out << "row" << i << " = "; row(spec.rows[i]);
        }
        break;
    case ProcessKind::rotation:
        out << "kind = rotation\nalpha = " << spec.alpha << "\ncuts = "; row(spec.cuts); break;
    case ProcessKind::periodic: {
        out << "kind = periodic\nword = ";
        bool digits = spec.alphabet.size <= 10;
        for (std::size_t i = 0; i < spec.word.size(); ++i) {
            if (digits) out << char('0' + spec.word[i]);
            else out << (i ? " " : "") << int(spec.word[i]);
        }
        out << "\n";
        break;
    }
    }
    out << "alphabet = " << spec.alphabet.size << "\nseed = " << spec.seed << "\n";
}

} // namespace seriate
