#include "seriate/sequence_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace seriate {

static bool has_suffix(const std::string& s, const std::string& suf) {
    return s.size() >= suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0;
}

static Alphabet parse_header(std::istream& in, const std::string& path) {
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error(path + ": empty file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string key = "alphabet=";
    if (line.rfind(key, 0) != 0)
        throw std::runtime_error(path + ": missing 'alphabet=<l>' header");
    long l = 0;
    try {
        l = std::stol(line.substr(key.size()));
    } catch (const std::exception&) {
        throw std::runtime_error(path + ": bad alphabet header value");
    }
    if (l < 2 || l > 256)
        throw std::runtime_error(path + ": alphabet size must be in [2,256]");
    return Alphabet{static_cast<std::uint32_t>(l)};
}

SymbolSequence read_sequence(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error(path + ": cannot open");
    Alphabet a = parse_header(in, path);
    std::vector<std::uint8_t> data;

    if (has_suffix(path, ".sym")) {
        char c;
        while (in.get(c)) {
            auto s = static_cast<std::uint8_t>(c);
            if (s >= a.size) throw std::runtime_error(path + ": symbol byte out of range");
            data.push_back(s);
        }
    } else if (a.size <= 10) {
        char c;
        while (in.get(c)) {
            if (std::isspace(static_cast<unsigned char>(c))) continue;
            if (c < '0' || c >= static_cast<char>('0' + a.size))
                throw std::runtime_error(path + ": symbol digit out of range");
            data.push_back(static_cast<std::uint8_t>(c - '0'));
        }
    } else {
        long v;
        while (in >> v) {
            if (v < 0 || v >= static_cast<long>(a.size))
                throw std::runtime_error(path + ": symbol out of range");
            data.push_back(static_cast<std::uint8_t>(v));
        }
        if (!in.eof()) throw std::runtime_error(path + ": malformed symbol token");
    }
    if (data.empty()) throw std::runtime_error(path + ": header but no symbols");
    return SymbolSequence{a, std::move(data)};
}

void write_sequence(const std::string& path, const SymbolSequence& seq) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error(path + ": cannot write");
    out << "alphabet=" << seq.alphabet.size << "\n";
    if (has_suffix(path, ".sym")) {
        out.write(reinterpret_cast<const char*>(seq.data.data()),
                  static_cast<std::streamsize>(seq.data.size()));
    } else if (seq.alphabet.size <= 10) {
        // wrap digit lines so text tools stay usable on large sequences
        const std::size_t width = 4096;
        for (std::size_t i = 0; i < seq.data.size(); ++i) {
            out.put(static_cast<char>('0' + seq.data[i]));
            if ((i + 1) % width == 0) out.put('\n');
        }
        if (seq.data.size() % width != 0) out.put('\n');
    } else {
        for (std::size_t i = 0; i < seq.data.size(); ++i) {
            out << int(seq.data[i]);
            out.put((i + 1) % 64 == 0 ? '\n' : ' ');
        }
        out.put('\n');
    }
    if (!out) throw std::runtime_error(path + ": write failed");
}

} // namespace seriate
