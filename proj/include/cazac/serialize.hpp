#pragma once

#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cazac/seq.hpp"

namespace cazac {

/// Malformed content in an otherwise readable stream (bad token, odd
/// coordinate count). Distinct from IoError so callers can map the two
/// to different exit codes.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One record: the 2n coordinates (a_0..a_{n-1}, b_0..b_{n-1}) printed
/// with 17 significant digits, which round-trips IEEE doubles exactly.
std::string format_sequence(const ComplexSeq& x);

/// Parses records produced by format_sequence. Tokens may be separated
/// by spaces, tabs, or commas; blank lines and lines starting with '#'
/// are skipped. Throws ParseError naming the offending line.
std::vector<ComplexSeq> parse_sequences(std::istream& in);

std::vector<ComplexSeq> read_sequence_file(const std::string& path);

/// Writes one record per line, preceded by '#' comment lines (one per
/// entry, '#' added here). Throws IoError if the file cannot be written.
void write_sequence_file(const std::string& path, const std::vector<ComplexSeq>& xs,
                         const std::vector<std::string>& comments = {});

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

/// FNV-1a 64-bit digest; cheap content fingerprint for manifests (not
/// cryptographic).
std::uint64_t fnv1a64(std::string_view bytes);
std::string digest_hex(std::string_view bytes);
std::string digest_file(const std::string& path);

}  // namespace cazac
