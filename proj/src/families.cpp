#include "cazac/families.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <unordered_set>

namespace cazac {

std::string family_name(QuadraticFamily f) {
    switch (f) {
        case QuadraticFamily::ZadoffChu: return "zadoff-chu";
        case QuadraticFamily::P4: return "p4";
        case QuadraticFamily::Wiener: return "wiener";
    }
    return "?";
}

bool is_odd_prime(long long p) {
    if (p < 3 || p % 2 == 0) return false;
    for (long long d = 3; d * d <= p; d += 2) {
        if (p % d == 0) return false;
    }
    return true;
}

LegendreTable LegendreTable::make(int p) {
    if (!is_odd_prime(p)) throw NotOddPrime(p);
    LegendreTable table;
    table.p = p;
    table.values.assign(static_cast<std::size_t>(p), -1);
    table.values[0] = 0;
    for (long long x = 1; x < p; ++x) {
        table.values[static_cast<std::size_t>((x * x) % p)] = 1;
    }
    return table;
}

int legendre(long long j, long long p) {
    if (!is_odd_prime(p)) throw NotOddPrime(p);
    long long r = j % p;
    if (r < 0) r += p;
    if (r == 0) return 0;
    // Euler's criterion: r^((p-1)/2) mod p is 1 for residues, p-1 otherwise.
    long long result = 1;
    long long base = r;
    long long e = (p - 1) / 2;
    while (e > 0) {
        if (e & 1) result = (result * base) % p;
        base = (base * base) % p;
        e >>= 1;
    }
    return result == 1 ? 1 : -1;
}

void QuadraticPhaseSpec::validate() const {
    if (n < 1) throw InvalidSpec("length n must be >= 1");
    switch (family) {
        case QuadraticFamily::ZadoffChu:
            if (n % 2 == 0) throw InvalidSpec("Zadoff-Chu requires n odd");
            break;
        case QuadraticFamily::P4:
            break;
        case QuadraticFamily::Wiener: {
            const long long modulus = (n % 2 == 1) ? n : 2ll * n;
            long long kr = k % modulus;
            if (kr < 0) kr += modulus;
            if (std::gcd(kr, modulus) != 1) {
                throw InvalidSpec("Wiener requires gcd(k, " + std::to_string(modulus) +
                                  ") = 1, got k = " + std::to_string(k));
            }
            break;
        }
    }
}

namespace {

// e^{pi i * num / n} with the exponent reduced mod 2 first, so large
// polynomial values do not degrade the trigonometric argument.
Complex half_turn_phase(long long num, long long n) {
    long long r = num % (2 * n);
    if (r < 0) r += 2 * n;
    const double angle = std::numbers::pi * static_cast<double>(r) / static_cast<double>(n);
    return std::polar(1.0, angle);
}

}  // namespace

UnitSequence quadratic_phase(const QuadraticPhaseSpec& spec) {
    spec.validate();
    const long long n = spec.n;
    const long long modulus = (n % 2 == 1) ? n : 2 * n;
    long long kr = spec.k % modulus;
    if (kr < 0) kr += modulus;

    std::vector<Complex> entries;
    entries.reserve(static_cast<std::size_t>(n));
    for (long long j = 0; j < n; ++j) {
        long long num = 0;
        switch (spec.family) {
            case QuadraticFamily::ZadoffChu: num = j * (j - 1); break;
            case QuadraticFamily::P4: num = j * (j - n); break;
            case QuadraticFamily::Wiener: num = (n % 2 == 1) ? 2 * kr * j * j : kr * j * j; break;
        }
        entries.push_back(half_turn_phase(num, n));
    }
    return UnitSequence(ComplexSeq(std::move(entries)));
}

UnitSequence bjorck(int p) {
    if (!is_odd_prime(p)) throw NotOddPrime(p);
    const LegendreTable table = LegendreTable::make(p);
    std::vector<Complex> entries;
    entries.reserve(static_cast<std::size_t>(p));
    if (p % 4 == 1) {
        const double theta = std::acos(1.0 / (1.0 + std::sqrt(static_cast<double>(p))));
        for (int j = 0; j < p; ++j) {
            entries.push_back(std::polar(1.0, table.values[static_cast<std::size_t>(j)] * theta));
        }
    } else {
        const double theta =
            std::acos((1.0 - static_cast<double>(p)) / (1.0 + static_cast<double>(p)));
        for (int j = 0; j < p; ++j) {
            const bool nonresidue = table.values[static_cast<std::size_t>(j)] == -1;
            entries.push_back(nonresidue ? std::polar(1.0, theta) : Complex(1.0, 0.0));
        }
    }
    return UnitSequence(ComplexSeq(std::move(entries)));
}

}  // namespace cazac
