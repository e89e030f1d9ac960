#include <cmath>
#include <numbers>
#include <numeric>

#include "cazac/families.hpp"
#include "doctest.h"

using namespace cazac;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("family_name maps every enumerator") {
    CHECK(family_name(QuadraticFamily::ZadoffChu) == "zadoff-chu");
    CHECK(family_name(QuadraticFamily::P4) == "p4");
    CHECK(family_name(QuadraticFamily::Wiener) == "wiener");
}

TEST_CASE("is_odd_prime agrees with a hand table") {
    for (long long p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47})
        CHECK(is_odd_prime(p));
    for (long long q : {-7, 0, 1, 2, 4, 9, 15, 21, 25, 27, 33, 49})
        CHECK_FALSE(is_odd_prime(q));
}

TEST_CASE("legendre symbol table for p=7") {
    // squares mod 7: 1, 4, 2
    const int expect[7] = {0, 1, 1, -1, 1, -1, -1};
    for (int j = 0; j < 7; ++j) CHECK(legendre(j, 7) == expect[j]);
    CHECK(legendre(7, 7) == 0);
    CHECK(legendre(-1, 7) == legendre(6, 7));  // reduced mod p
}

TEST_CASE("legendre symbol is completely multiplicative") {
    for (long long p : {11, 13}) {
        for (long long a = 1; a < p; ++a)
            for (long long b = 1; b < p; ++b)
                CHECK(legendre(a * b, p) == legendre(a, p) * legendre(b, p));
    }
}

TEST_CASE("legendre rejects non-prime moduli") {
    CHECK_THROWS_AS(legendre(3, 9), NotOddPrime);
    CHECK_THROWS_AS(legendre(1, 2), NotOddPrime);
}

TEST_CASE("Zadoff-Chu length 3 matches the hand construction") {
    const ComplexSeq x = quadratic_phase({QuadraticFamily::ZadoffChu, 3, 0}).seq();
    CHECK(std::abs(x[0] - Complex(1, 0)) < 1e-15);
    CHECK(std::abs(x[1] - Complex(1, 0)) < 1e-15);
    CHECK(std::abs(x[2] - std::polar(1.0, 2.0 * kPi / 3.0)) < 1e-15);
}

TEST_CASE("P4 length 2 matches the hand construction") {
    // phases pi*j(j-2)/2: j=0 -> 0, j=1 -> -pi/2
    const ComplexSeq x = quadratic_phase({QuadraticFamily::P4, 2, 0}).seq();
    CHECK(std::abs(x[0] - Complex(1, 0)) < 1e-15);
    CHECK(std::abs(x[1] - Complex(0, -1)) < 1e-15);
}

TEST_CASE("family constraints are enforced") {
    CHECK_THROWS_AS(quadratic_phase({QuadraticFamily::ZadoffChu, 8, 0}), InvalidSpec);
    // Wiener odd n requires gcd(k, n) = 1
    CHECK_THROWS_AS(quadratic_phase({QuadraticFamily::Wiener, 9, 3}), InvalidSpec);
    // Wiener even n requires gcd(k, 2n) = 1
    CHECK_THROWS_AS(quadratic_phase({QuadraticFamily::Wiener, 6, 2}), InvalidSpec);
    CHECK_THROWS_AS(quadratic_phase({QuadraticFamily::Wiener, 6, 3}), InvalidSpec);
    CHECK_NOTHROW(quadratic_phase({QuadraticFamily::Wiener, 6, 5}));
    CHECK_THROWS_AS(quadratic_phase({QuadraticFamily::P4, 0, 0}), InvalidSpec);
}

TEST_CASE("every generator output is CAZAC at 1e-12 for n up to 50") {
    for (int n = 2; n <= 50; ++n) {
        if (n % 2 == 1)
            CHECK(verify_cazac(quadratic_phase({QuadraticFamily::ZadoffChu, n, 0}).seq(), 1e-12)
                      .pass);
        CHECK(verify_cazac(quadratic_phase({QuadraticFamily::P4, n, 0}).seq(), 1e-12).pass);
        const long long modulus = (n % 2 == 1) ? n : 2LL * n;
        for (long long k = 1; k < modulus; ++k)
            if (std::gcd(k, modulus) == 1)
                CHECK(verify_cazac(quadratic_phase({QuadraticFamily::Wiener, n, k}).seq(), 1e-12)
                          .pass);
        if (is_odd_prime(n)) CHECK(verify_cazac(bjorck(n).seq(), 1e-12).pass);
    }
}

TEST_CASE("Wiener parameter reduces modulo n or 2n") {
    const ComplexSeq a = quadratic_phase({QuadraticFamily::Wiener, 7, 3}).seq();
    const ComplexSeq b = quadratic_phase({QuadraticFamily::Wiener, 7, 10}).seq();
    CHECK(a == b);
    const ComplexSeq c = quadratic_phase({QuadraticFamily::Wiener, 6, 5}).seq();
    const ComplexSeq d = quadratic_phase({QuadraticFamily::Wiener, 6, 17}).seq();
    CHECK(c == d);
}

TEST_CASE("length-7 Legendre-phase entries use cos(theta) = -3/4") {
    const ComplexSeq x = bjorck(7).seq();
    const double s = std::sqrt(7.0) / 4.0;
    const Complex on_nonresidue(-0.75, s);
    for (int j : {1, 2, 4}) CHECK(std::abs(x[j] - Complex(1, 0)) < 1e-15);
    for (int j : {3, 5, 6}) CHECK(std::abs(x[j] - on_nonresidue) < 1e-15);
    CHECK(std::abs(x[0] - Complex(1, 0)) < 1e-15);
}

TEST_CASE("length-5 Legendre-phase uses the +/- arccos(1/(1+sqrt 5)) phases") {
    const ComplexSeq x = bjorck(5).seq();
    const double theta = std::acos(1.0 / (1.0 + std::sqrt(5.0)));
    CHECK(std::abs(x[0] - Complex(1, 0)) < 1e-15);
    CHECK(std::abs(x[1] - std::polar(1.0, theta)) < 1e-15);   // 1 is a residue
    CHECK(std::abs(x[2] - std::polar(1.0, -theta)) < 1e-15);  // 2 is not
    CHECK(std::abs(x[3] - std::polar(1.0, -theta)) < 1e-15);
    CHECK(std::abs(x[4] - std::polar(1.0, theta)) < 1e-15);
}

TEST_CASE("bjorck rejects non-prime and even lengths") {
    CHECK_THROWS_AS(bjorck(9), NotOddPrime);
    CHECK_THROWS_AS(bjorck(2), NotOddPrime);
    CHECK_NOTHROW(bjorck(3));
}
