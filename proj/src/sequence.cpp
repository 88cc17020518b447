#include "seriate/sequence.hpp"

#include <sstream>
#include <stdexcept>

namespace seriate {

bool operator==(const Alphabet& a, const Alphabet& b) { return a.size == b.size; }

static void check_symbols(const Alphabet& a, const std::vector<std::uint8_t>& v,
                          const char* what) {
    if (a.size < 2 || a.size > 256)
        throw std::invalid_argument("alphabet size must be in [2,256]");
    for (std::uint8_t s : v)
        if (s >= a.size)
            throw std::invalid_argument(std::string(what) + ": symbol out of alphabet range");
}

SymbolSequence make_sequence(Alphabet a, std::vector<std::uint8_t> data) {
    check_symbols(a, data, "sequence");
    return SymbolSequence{a, std::move(data)};
}

Block make_block(Alphabet a, std::vector<std::uint8_t> pattern) {
    check_symbols(a, pattern, "block");
    if (pattern.empty()) throw std::invalid_argument("block: empty pattern");
    return Block{a, std::move(pattern)};
}

Block parse_block(Alphabet a, const std::string& text) {
    std::vector<std::uint8_t> pat;
    if (text.find(',') == std::string::npos && a.size <= 10) {
        for (char c : text) {
            if (c == ' ' || c == '\t') continue;
            if (c < '0' || c > '9') throw std::invalid_argument("block: bad digit");
            pat.push_back(static_cast<std::uint8_t>(c - '0'));
        }
    } else {
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            int v = std::stoi(tok);
            if (v < 0 || v > 255) throw std::invalid_argument("block: symbol out of range");
            pat.push_back(static_cast<std::uint8_t>(v));
        }
    }
    return make_block(a, std::move(pat));
}

std::string format_block(const Block& b) {
    std::string out;
    if (b.alphabet.size <= 10) {
        out.reserve(b.pattern.size());
        for (std::uint8_t s : b.pattern) out.push_back(static_cast<char>('0' + s));
    } else {
        for (std::size_t i = 0; i < b.pattern.size(); ++i) {
            if (i) out.push_back(',');
            out += std::to_string(int(b.pattern[i]));
        }
    }
    return out;
}

void require_same_alphabet(const Alphabet& a, const Alphabet& b) {
    if (!(a == b)) throw std::invalid_argument("alphabet mismatch");
}

} // namespace seriate
