#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "cazac/seq.hpp"

namespace cazac {

struct NotOddPrime : std::runtime_error {
    explicit NotOddPrime(long long p)
        : std::runtime_error(std::to_string(p) + " is not an odd prime") {}
};

struct InvalidSpec : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class QuadraticFamily { ZadoffChu, P4, Wiener };

std::string family_name(QuadraticFamily f);

/// Parameters of a quadratic-phase sequence x_j = e^{pi i p(j)/n}:
///   Zadoff-Chu  p(j) = j(j-1), n odd
///   P4          p(j) = j(j-n)
///   Wiener      p(j) = 2k j^2 (n odd, gcd(k,n)=1)
///               p(j) = k j^2  (n even, gcd(k,2n)=1)
/// k is stored reduced mod n (odd) or mod 2n (even).
struct QuadraticPhaseSpec {
    QuadraticFamily family = QuadraticFamily::ZadoffChu;
    int n = 1;
    long long k = 0;  // Wiener only

    /// Throws InvalidSpec naming the violated constraint.
    void validate() const;
};

/// Legendre symbol values (j/p) for j = 0..p-1. Exactly (p-1)/2 entries
/// are +1 and (p-1)/2 are -1; the entry at 0 is 0.
struct LegendreTable {
    int p = 0;
    std::vector<int> values;

    static LegendreTable make(int p);
};

bool is_odd_prime(long long p);

/// (j/p) in {-1, 0, 1}. Throws NotOddPrime for even or composite p.
int legendre(long long j, long long p);

UnitSequence quadratic_phase(const QuadraticPhaseSpec& spec);

/// Legendre-phase sequence of odd prime length p: for p = 1 mod 4 the
/// phase is (j/p)*arccos(1/(1+sqrt p)); for p = 3 mod 4 it is
/// arccos((1-p)/(1+p)) exactly on the non-residues.
UnitSequence bjorck(int p);

}  // namespace cazac
