#pragma once

#include <vector>

#include "cazac/seq.hpp"

namespace cazac {

/// Forward DFT plan for a fixed (arbitrary) length n:
///   X[l] = sum_j x[j] e^{-2 pi i j l / n}.
/// Power-of-two lengths run a radix-2 transform directly; other lengths
/// go through Bluestein's chirp-z reduction to a power-of-two
/// convolution. Applying a plan is const and allocates its own work
/// buffers, so one plan may be shared across threads.
class Dft {
  public:
    explicit Dft(int n);

    int size() const { return n_; }
    std::vector<Complex> operator()(const std::vector<Complex>& x) const;

  private:
    int n_;
    int m_ = 0;                        // convolution length (power of two), 0 for pow2 fast path
    std::vector<Complex> chirp_;       // e^{-pi i j^2 / n}, j^2 reduced mod 2n
    std::vector<Complex> kernel_fft_;  // FFT of the wrapped conjugate chirp
};

/// One-shot forward DFT of arbitrary length.
std::vector<Complex> dft(const std::vector<Complex>& x);

}  // namespace cazac
