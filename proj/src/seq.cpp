#include "cazac/seq.hpp"

#include <cmath>

namespace cazac {

ComplexSeq::ComplexSeq(std::vector<Complex> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) {
        throw std::invalid_argument("ComplexSeq requires length >= 1");
    }
}

UnitSequence::UnitSequence(ComplexSeq inner, double modulus_tol)
    : inner_(std::move(inner)), modulus_tol_(modulus_tol) {
    for (int j = 0; j < inner_.size(); ++j) {
        const double err = std::abs(std::abs(inner_[j]) - 1.0);
        if (!(err <= modulus_tol_)) {
            throw NotUnitModulus("entry " + std::to_string(j) + " has modulus error " +
                                 std::to_string(err) + " > tol " + std::to_string(modulus_tol_));
        }
    }
}

RealEmbedding embed(const ComplexSeq& x) {
    RealEmbedding v;
    v.a.reserve(x.size());
    v.b.reserve(x.size());
    for (int j = 0; j < x.size(); ++j) {
        v.a.push_back(x[j].real());
        v.b.push_back(x[j].imag());
    }
    return v;
}

ComplexSeq lift(const RealEmbedding& v) {
    if (v.a.size() != v.b.size()) {
        throw std::invalid_argument("RealEmbedding parts have unequal lengths");
    }
    std::vector<Complex> entries;
    entries.reserve(v.a.size());
    for (std::size_t j = 0; j < v.a.size(); ++j) {
        entries.emplace_back(v.a[j], v.b[j]);
    }
    return ComplexSeq(std::move(entries));
}

ComplexSeq canonicalize(const ComplexSeq& x) {
    const Complex lead = x[0];
    const double mag = std::abs(lead);
    if (mag < 1e-12) {
        throw ZeroLeadingEntry(mag);
    }
    std::vector<Complex> out(static_cast<std::size_t>(x.size()));
    // Complex division of x_0 by itself is not exactly 1+0i in floating
    // point, so the first entry is pinned explicitly.
    out[0] = Complex(1.0, 0.0);
    for (int j = 1; j < x.size(); ++j) {
        out[static_cast<std::size_t>(j)] = x[j] / lead;
    }
    return ComplexSeq(std::move(out));
}

VerificationReport verify_cazac(const ComplexSeq& x, double tol) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument("verify_cazac requires tol > 0");
    }
    const int n = x.size();
    VerificationReport report;
    for (int j = 0; j < n; ++j) {
        report.max_modulus_error = std::max(report.max_modulus_error, std::abs(std::abs(x[j]) - 1.0));
    }
    for (int k = 1; k < n; ++k) {
        Complex acc(0.0, 0.0);
        for (int j = 0; j < n; ++j) {
            acc += x.at_mod(j + k) * std::conj(x[j]);
        }
        report.max_offpeak = std::max(report.max_offpeak, std::abs(acc) / n);
    }
    report.pass = report.max_modulus_error <= tol && report.max_offpeak <= tol;
    return report;
}

namespace {

std::int64_t fixed_point_digit(double value) {
    // round-half-away-from-zero at 8 decimals
    return std::llround(value * 1e8);
}

}  // namespace

CanonicalKey key_of(const ComplexSeq& x) {
    const bool can_canonicalize = std::abs(x[0]) >= 1e-12;
    const ComplexSeq rep = can_canonicalize ? canonicalize(x) : x;
    CanonicalKey key;
    key.digits.reserve(2 * static_cast<std::size_t>(rep.size()));
    for (int j = 0; j < rep.size(); ++j) {
        key.digits.push_back(fixed_point_digit(rep[j].real()));
    }
    for (int j = 0; j < rep.size(); ++j) {
        key.digits.push_back(fixed_point_digit(rep[j].imag()));
    }
    return key;
}

}  // namespace cazac
