#include "cazac/serialize.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace cazac {

std::string format_sequence(const ComplexSeq& x) {
    const int n = x.size();
    std::string out;
    char buf[64];
    for (int j = 0; j < 2 * n; ++j) {
        const double v = j < n ? x[j].real() : x[j - n].imag();
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        if (j > 0) out += ' ';
        out += buf;
    }
    return out;
}

namespace {

ComplexSeq parse_record(const std::string& line, long line_no) {
    std::vector<double> vals;
    std::string token;
    // Commas count as separators so hand-edited files also load.
    std::string normalized = line;
    for (char& c : normalized)
        if (c == ',') c = ' ';
    std::istringstream in(normalized);
    while (in >> token) {
        char* end = nullptr;
        const double v = std::strtod(token.c_str(), &end);
        if (end != token.c_str() + token.size())
            throw ParseError("line " + std::to_string(line_no) + ": bad number '" + token + "'");
        vals.push_back(v);
    }
    if (vals.empty() || vals.size() % 2 != 0)
        throw ParseError("line " + std::to_string(line_no) + ": expected an even number of " +
                         "coordinates (real parts then imaginary parts), got " +
                         std::to_string(vals.size()));
    const std::size_t n = vals.size() / 2;
    std::vector<Complex> entries(n);
    for (std::size_t j = 0; j < n; ++j) entries[j] = Complex(vals[j], vals[n + j]);
    return ComplexSeq(std::move(entries));
}

}  // namespace

std::vector<ComplexSeq> parse_sequences(std::istream& in) {
    std::vector<ComplexSeq> out;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        out.push_back(parse_record(line, line_no));
    }
    return out;
}

std::vector<ComplexSeq> read_sequence_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path + " for reading");
    return parse_sequences(in);
}

void write_sequence_file(const std::string& path, const std::vector<ComplexSeq>& xs,
                         const std::vector<std::string>& comments) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    for (const std::string& c : comments) out << "# " << c << '\n';
    for (const ComplexSeq& x : xs) out << format_sequence(x) << '\n';
    if (!out) throw IoError("write to " + path + " failed");
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path + " for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("read from " + path + " failed");
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw IoError("write to " + path + " failed");
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string digest_hex(std::string_view bytes) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(bytes)));
    return buf;
}

std::string digest_file(const std::string& path) { return digest_hex(read_text_file(path)); }

}  // namespace cazac
