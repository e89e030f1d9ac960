#pragma once

#include <string>
#include <vector>

#include "cazac/seq.hpp"

namespace cazac {

enum class GridKind { periodic, aperiodic };

std::string grid_kind_name(GridKind kind);

/// n x n grid of correlation values indexed by (time shift k, frequency
/// shift l). Periodic grids carry the 1/n normalization; aperiodic grids
/// carry none, so a unit-modulus input has value 1 (resp. n) at (0,0).
struct AmbiguityGrid {
    int n = 0;
    GridKind kind = GridKind::periodic;
    std::vector<Complex> values;  // row-major, values[k*n + l]

    const Complex& at(int k, int l) const {
        return values[static_cast<std::size_t>(k) * static_cast<std::size_t>(n) +
                      static_cast<std::size_t>(l)];
    }
};

/// Cyclic autocorrelation: value at k is (1/n) sum_j x_{j+k} conj(x_j),
/// indices mod n. Direct summation in index order.
std::vector<Complex> periodic_autocorrelation(const ComplexSeq& x);

/// Zero-extended autocorrelation: value at k (0 <= k < n) is
/// sum_{j=0}^{n-1-k} x_{j+k} conj(x_j). Direct summation in index order.
std::vector<Complex> aperiodic_autocorrelation(const ComplexSeq& x);

/// Fast grids: one length-n DFT of the lag products per time shift,
/// rows computed in parallel. Deterministic for a fixed input.
AmbiguityGrid periodic_ambiguity(const ComplexSeq& x);
AmbiguityGrid aperiodic_ambiguity(const ComplexSeq& x);

/// Serial reference grids: literal triple loop over (k, l, j) with
/// per-term twiddles. Oracle for the fast paths; O(n^3).
AmbiguityGrid periodic_ambiguity_naive(const ComplexSeq& x);
AmbiguityGrid aperiodic_ambiguity_naive(const ComplexSeq& x);

/// Sidelobe ratios of the aperiodic autocorrelation:
///   psl = max_{k != 0} |A[k]| / |A[0]|
///   isl = sum_{k=1}^{n-1} |A[k]|^2 / |A[0]|^2
struct SidelobeMetrics {
    double psl = 0.0;
    double isl = 0.0;
};

/// Requires n >= 2.
SidelobeMetrics sidelobe_metrics(const ComplexSeq& x);

/// Largest |grid| off (0,0), normalized by |grid(0,0)|.
double max_offorigin_normalized(const AmbiguityGrid& grid);

/// Text export: header "n=<n>,kind=<periodic|aperiodic>", then n rows of
/// n comma-separated magnitudes normalized by the (0,0) value, 9
/// significant digits.
std::string export_grid(const AmbiguityGrid& grid);

}  // namespace cazac
