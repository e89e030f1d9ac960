#include <cmath>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "cazac/serialize.hpp"
#include "doctest.h"

using namespace cazac;

namespace {

std::filesystem::path temp_path(const char* name) {
    return std::filesystem::temp_directory_path() / name;
}

struct FileGuard {
    std::filesystem::path p;
    explicit FileGuard(std::filesystem::path path) : p(std::move(path)) {}
    ~FileGuard() { std::filesystem::remove(p); }
};

}  // namespace

TEST_CASE("format/parse round trip is exact, including awkward doubles") {
    const ComplexSeq x({{1.0 / 3.0, -0.0},
                        {std::nextafter(1.0, 2.0), 1e-300},
                        {-2.2250738585072014e-308, 0.1}});
    std::istringstream in(format_sequence(x));
    const auto back = parse_sequences(in);
    REQUIRE(back.size() == 1);
    REQUIRE(back[0].size() == 3);
    for (int j = 0; j < 3; ++j) {
        CHECK(back[0][j].real() == x[j].real());
        CHECK(back[0][j].imag() == x[j].imag());
    }
    // -0.0 survives with its sign
    CHECK(std::signbit(back[0][0].imag()));
}

TEST_CASE("parser accepts comments, blank lines, and comma separators") {
    std::istringstream in(
        "# header comment\n"
        "\n"
        "1, 0, 0.5, -0.25\n"
        "   \t  \n"
        "0 1 1 0\n");
    const auto xs = parse_sequences(in);
    REQUIRE(xs.size() == 2);
    CHECK(xs[0].size() == 2);
    CHECK(xs[0][0] == Complex(1, 0.5));
    CHECK(xs[0][1] == Complex(0, -0.25));
    CHECK(xs[1][0] == Complex(0, 1));
    CHECK(xs[1][1] == Complex(1, 0));
}

TEST_CASE("parse errors carry the line number") {
    std::istringstream odd("1 0 0.5\n");
    CHECK_THROWS_AS(parse_sequences(odd), ParseError);

    std::istringstream junk("# fine\n1 0\n1 banana\n");
    try {
        parse_sequences(junk);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("3") != std::string::npos);
    }

    std::istringstream empty("");
    CHECK(parse_sequences(empty).empty());
}

TEST_CASE("sequence files round trip with comments") {
    const auto path = temp_path("cazac_test_roundtrip.txt");
    FileGuard guard(path);
    const std::vector<ComplexSeq> xs = {ComplexSeq({{1, 0}, {0.25, -0.75}}),
                                        ComplexSeq({{-1, 1e-17}, {0.5, 0.5}})};
    write_sequence_file(path.string(), xs, {"two records", "second note"});
    const std::string raw = read_text_file(path.string());
    CHECK(raw.find("# two records") == 0);
    CHECK(raw.find("# second note") != std::string::npos);

    const auto back = read_sequence_file(path.string());
    REQUIRE(back.size() == 2);
    CHECK(back[0] == xs[0]);
    CHECK(back[1] == xs[1]);
}

TEST_CASE("missing files raise IoError, not ParseError") {
    CHECK_THROWS_AS(read_sequence_file("/nonexistent/dir/f.txt"), IoError);
    CHECK_THROWS_AS(read_text_file("/nonexistent/dir/f.txt"), IoError);
    CHECK_THROWS_AS(write_text_file("/nonexistent/dir/f.txt", "x"), IoError);
    CHECK_THROWS_AS(digest_file("/nonexistent/dir/f.txt"), IoError);
}

TEST_CASE("fnv-1a 64 matches the published test vectors") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
    CHECK(fnv1a64("foobar") == 0x85944171f73967e8ull);
    CHECK(digest_hex("") == "cbf29ce484222325");
    // zero-padding to 16 hex digits
    CHECK(digest_hex("foobar").size() == 16);
}

TEST_CASE("file digest hashes the raw bytes") {
    const auto path = temp_path("cazac_test_digest.txt");
    FileGuard guard(path);
    write_text_file(path.string(), "foobar");
    CHECK(digest_file(path.string()) == "85944171f73967e8");
}
