#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cazac {

using Complex = std::complex<double>;

/// Thrown by canonicalize() when the leading entry is too close to zero
/// to fix the phase by division.
struct ZeroLeadingEntry : std::runtime_error {
    explicit ZeroLeadingEntry(double mag)
        : std::runtime_error("leading entry magnitude " + std::to_string(mag) +
                             " is below 1e-12; cannot canonicalize") {}
};

struct NotUnitModulus : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A fixed-length complex sequence. Immutable after construction; all
/// index arithmetic is 0-based and cyclic (see at_mod).
class ComplexSeq {
  public:
    explicit ComplexSeq(std::vector<Complex> entries);

    int size() const { return static_cast<int>(entries_.size()); }
    const Complex& operator[](int j) const { return entries_[static_cast<std::size_t>(j)]; }

    /// Entry at index j mod n; accepts any integer, including negatives.
    const Complex& at_mod(long long j) const {
        const long long n = size();
        long long r = j % n;
        if (r < 0) r += n;
        return entries_[static_cast<std::size_t>(r)];
    }

    const std::vector<Complex>& entries() const { return entries_; }

    bool operator==(const ComplexSeq& other) const = default;

  private:
    std::vector<Complex> entries_;
};

/// A ComplexSeq whose entries are all unit modulus up to modulus_tol.
/// Construction checks the invariant and throws NotUnitModulus on failure.
class UnitSequence {
  public:
    explicit UnitSequence(ComplexSeq inner, double modulus_tol = 1e-8);

    const ComplexSeq& seq() const { return inner_; }
    double modulus_tol() const { return modulus_tol_; }
    int size() const { return inner_.size(); }

  private:
    ComplexSeq inner_;
    double modulus_tol_;
};

/// The 2n-real-variable view of a length-n complex sequence: real parts
/// first, imaginary parts second. Round-trips with ComplexSeq bit-exactly.
struct RealEmbedding {
    std::vector<double> a;
    std::vector<double> b;

    int size() const { return static_cast<int>(a.size()); }
};

RealEmbedding embed(const ComplexSeq& x);
ComplexSeq lift(const RealEmbedding& v);

/// Fixed-point fingerprint of a sequence: each coordinate of the
/// canonical representative rounded half-away-from-zero at 8 decimals.
/// Equality and ordering are exact integer comparisons, so keys are
/// safe as hash/map keys.
struct CanonicalKey {
    std::vector<std::int64_t> digits;  // a_0..a_{n-1}, b_0..b_{n-1}, each value*1e8

    bool operator==(const CanonicalKey&) const = default;
    bool operator<(const CanonicalKey& other) const { return digits < other.digits; }
};

struct CanonicalKeyHash {
    std::size_t operator()(const CanonicalKey& k) const {
        std::uint64_t h = 1469598103934665603ull;  // FNV-1a over the digit words
        for (std::int64_t d : k.digits) {
            auto u = static_cast<std::uint64_t>(d);
            for (int i = 0; i < 8; ++i) {
                h ^= (u >> (8 * i)) & 0xff;
                h *= 1099511628211ull;
            }
        }
        return static_cast<std::size_t>(h);
    }
};

/// Scalar-phase canonical representative: x divided by its first entry,
/// with the first entry of the result exactly 1+0i. Throws
/// ZeroLeadingEntry when |x_0| < 1e-12.
ComplexSeq canonicalize(const ComplexSeq& x);

struct VerificationReport {
    double max_modulus_error = 0.0;   // max_j | |x_j| - 1 |
    double max_offpeak = 0.0;         // max_{k != 0} |A_p[k]|
    bool pass = false;
};

/// Checks both defining properties (unit modulus, vanishing off-peak
/// periodic autocorrelation) against tol. n = 1 passes trivially.
VerificationReport verify_cazac(const ComplexSeq& x, double tol);

/// Canonicalize-then-round fingerprint. Sequences whose canonical
/// coordinates agree to better than 0.5e-8 map to equal keys. If the
/// leading entry is (numerically) zero the raw coordinates are keyed
/// instead, keeping key_of total.
CanonicalKey key_of(const ComplexSeq& x);

}  // namespace cazac
