#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "cazac/seq.hpp"

namespace cazac {

struct BadDecimation : std::runtime_error {
    BadDecimation(int m, int n)
        : std::runtime_error("decimation step " + std::to_string(m) + " is not coprime to " +
                             std::to_string(n)) {}
};

/// One closure transformation: cyclic translation, modulation by the
/// n-th roots of unity, coprime decimation, or entrywise conjugation.
/// Integer parameters are stored reduced mod n at application time.
struct Transform {
    enum class Kind { Translate, Modulate, Decimate, Conjugate };

    Kind kind = Kind::Conjugate;
    int param = 0;

    static Transform translate(int k) { return {Kind::Translate, k}; }
    static Transform modulate(int l) { return {Kind::Modulate, l}; }
    static Transform decimate(int m) { return {Kind::Decimate, m}; }
    static Transform conjugate() { return {Kind::Conjugate, 0}; }

    std::string name() const;
};

/// Applies t to x:
///   Translate(k): out_j = x_{j+k}
///   Modulate(l):  out_j = w^{lj} x_j, w = e^{2 pi i/n}
///   Decimate(m):  out_j = x_{mj}, gcd(m,n) = 1 (else BadDecimation)
///   Conjugate:    out_j = conj(x_j)
ComplexSeq apply(const Transform& t, const ComplexSeq& x);

/// Closure of a base sequence under all single transforms, with every
/// member canonicalized before keying. keys/members/words are aligned
/// and sorted by key; words record one generating composition per
/// member in function-composition order (leftmost applied last).
struct OrbitReport {
    ComplexSeq base;
    std::vector<CanonicalKey> keys;
    std::vector<ComplexSeq> members;
    std::vector<std::string> words;

    std::size_t count() const { return keys.size(); }
};

/// Breadth-first fixpoint of {canonicalize(apply(t, .))} over all single
/// transforms, stopping early after max_word_len sweeps.
OrbitReport orbit(const ComplexSeq& x, int max_word_len = 8);

/// Canonical-key uniqueness: one canonicalized representative per key,
/// first occurrence wins, output sorted by key.
std::vector<ComplexSeq> dedupe(const std::vector<ComplexSeq>& xs);

}  // namespace cazac
