#include "cazac/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cazac {

namespace {

bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

int next_pow2(int n) {
    int m = 1;
    while (m < n) m <<= 1;
    return m;
}

// In-place iterative radix-2 transform; inverse includes the 1/N factor.
void fft_pow2(std::vector<Complex>& v, bool inverse) {
    const int n = static_cast<int>(v.size());
    for (int i = 1, j = 0; i < n; ++i) {
        int bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(j)]);
    }
    for (int len = 2; len <= n; len <<= 1) {
        const double angle = (inverse ? 2.0 : -2.0) * std::numbers::pi / len;
        const Complex wlen = std::polar(1.0, angle);
        for (int i = 0; i < n; i += len) {
            Complex w(1.0, 0.0);
            for (int j = 0; j < len / 2; ++j) {
                const Complex u = v[static_cast<std::size_t>(i + j)];
                const Complex t = v[static_cast<std::size_t>(i + j + len / 2)] * w;
                v[static_cast<std::size_t>(i + j)] = u + t;
                v[static_cast<std::size_t>(i + j + len / 2)] = u - t;
                w *= wlen;
            }
        }
    }
    if (inverse) {
        const double scale = 1.0 / n;
        for (auto& c : v) c *= scale;
    }
}

}  // namespace

Dft::Dft(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("Dft requires n >= 1");
    if (is_pow2(n_)) return;

    m_ = next_pow2(2 * n_ - 1);
    chirp_.resize(static_cast<std::size_t>(n_));
    for (long long j = 0; j < n_; ++j) {
        // e^{-pi i j^2 / n} has period 2n in j^2, so reduce first.
        const long long r = (j * j) % (2ll * n_);
        chirp_[static_cast<std::size_t>(j)] =
            std::polar(1.0, -std::numbers::pi * static_cast<double>(r) / n_);
    }
    std::vector<Complex> kernel(static_cast<std::size_t>(m_), Complex(0.0, 0.0));
    kernel[0] = std::conj(chirp_[0]);
    for (int j = 1; j < n_; ++j) {
        const Complex c = std::conj(chirp_[static_cast<std::size_t>(j)]);
        kernel[static_cast<std::size_t>(j)] = c;
        kernel[static_cast<std::size_t>(m_ - j)] = c;
    }
    fft_pow2(kernel, false);
    kernel_fft_ = std::move(kernel);
}

std::vector<Complex> Dft::operator()(const std::vector<Complex>& x) const {
    if (static_cast<int>(x.size()) != n_) {
        throw std::invalid_argument("Dft input length mismatch");
    }
    if (n_ == 1) return x;
    if (m_ == 0) {
        std::vector<Complex> v = x;
        fft_pow2(v, false);
        return v;
    }
    std::vector<Complex> work(static_cast<std::size_t>(m_), Complex(0.0, 0.0));
    for (int j = 0; j < n_; ++j) {
        work[static_cast<std::size_t>(j)] =
            x[static_cast<std::size_t>(j)] * chirp_[static_cast<std::size_t>(j)];
    }
    fft_pow2(work, false);
    for (int j = 0; j < m_; ++j) {
        work[static_cast<std::size_t>(j)] *= kernel_fft_[static_cast<std::size_t>(j)];
    }
    fft_pow2(work, true);
    std::vector<Complex> out(static_cast<std::size_t>(n_));
    for (int l = 0; l < n_; ++l) {
        out[static_cast<std::size_t>(l)] =
            chirp_[static_cast<std::size_t>(l)] * work[static_cast<std::size_t>(l)];
    }
    return out;
}

std::vector<Complex> dft(const std::vector<Complex>& x) {
    return Dft(static_cast<int>(x.size()))(x);
}

}  // namespace cazac
