#include "cazac/correlate.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "cazac/fft.hpp"

namespace cazac {

std::string grid_kind_name(GridKind kind) {
    return kind == GridKind::periodic ? "periodic" : "aperiodic";
}

std::vector<Complex> periodic_autocorrelation(const ComplexSeq& x) {
    const int n = x.size();
    std::vector<Complex> out(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        Complex acc(0.0, 0.0);
        for (int j = 0; j < n; ++j) {
            acc += x.at_mod(j + k) * std::conj(x[j]);
        }
        out[static_cast<std::size_t>(k)] = acc / static_cast<double>(n);
    }
    return out;
}

std::vector<Complex> aperiodic_autocorrelation(const ComplexSeq& x) {
    const int n = x.size();
    std::vector<Complex> out(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        Complex acc(0.0, 0.0);
        for (int j = 0; j + k < n; ++j) {
            acc += x[j + k] * std::conj(x[j]);
        }
        out[static_cast<std::size_t>(k)] = acc;
    }
    return out;
}

namespace {

// Lag products y_j = x_{j+k} conj(x_j), cyclic or zero-extended.
std::vector<Complex> lag_products(const ComplexSeq& x, int k, GridKind kind) {
    const int n = x.size();
    std::vector<Complex> y(static_cast<std::size_t>(n), Complex(0.0, 0.0));
    if (kind == GridKind::periodic) {
        for (int j = 0; j < n; ++j) {
            y[static_cast<std::size_t>(j)] = x.at_mod(j + k) * std::conj(x[j]);
        }
    } else {
        for (int j = 0; j + k < n; ++j) {
            y[static_cast<std::size_t>(j)] = x[j + k] * std::conj(x[j]);
        }
    }
    return y;
}

AmbiguityGrid fast_grid(const ComplexSeq& x, GridKind kind) {
    const int n = x.size();
    AmbiguityGrid grid;
    grid.n = n;
    grid.kind = kind;
    grid.values.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                       Complex(0.0, 0.0));
    const Dft plan(n);
    const double scale = kind == GridKind::periodic ? 1.0 / n : 1.0;
#pragma omp parallel for schedule(static)
    for (int k = 0; k < n; ++k) {
        const std::vector<Complex> row = plan(lag_products(x, k, kind));
        for (int l = 0; l < n; ++l) {
            grid.values[static_cast<std::size_t>(k) * static_cast<std::size_t>(n) +
                        static_cast<std::size_t>(l)] = row[static_cast<std::size_t>(l)] * scale;
        }
    }
    return grid;
}

AmbiguityGrid naive_grid(const ComplexSeq& x, GridKind kind) {
    const int n = x.size();
    AmbiguityGrid grid;
    grid.n = n;
    grid.kind = kind;
    grid.values.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                       Complex(0.0, 0.0));
    const double scale = kind == GridKind::periodic ? 1.0 / n : 1.0;
    for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
            Complex acc(0.0, 0.0);
            for (int j = 0; j < n; ++j) {
                Complex term;
                if (kind == GridKind::periodic) {
                    term = x.at_mod(j + k) * std::conj(x[j]);
                } else {
                    term = (j + k < n) ? x[j + k] * std::conj(x[j]) : Complex(0.0, 0.0);
                }
                acc += term * std::polar(1.0, -2.0 * std::numbers::pi * j * l / n);
            }
            grid.values[static_cast<std::size_t>(k) * static_cast<std::size_t>(n) +
                        static_cast<std::size_t>(l)] = acc * scale;
        }
    }
    return grid;
}

}  // namespace

AmbiguityGrid periodic_ambiguity(const ComplexSeq& x) { return fast_grid(x, GridKind::periodic); }

AmbiguityGrid aperiodic_ambiguity(const ComplexSeq& x) { return fast_grid(x, GridKind::aperiodic); }

AmbiguityGrid periodic_ambiguity_naive(const ComplexSeq& x) {
    return naive_grid(x, GridKind::periodic);
}

AmbiguityGrid aperiodic_ambiguity_naive(const ComplexSeq& x) {
    return naive_grid(x, GridKind::aperiodic);
}

SidelobeMetrics sidelobe_metrics(const ComplexSeq& x) {
    if (x.size() < 2) throw std::invalid_argument("sidelobe_metrics requires n >= 2");
    const std::vector<Complex> ac = aperiodic_autocorrelation(x);
    const double peak = std::abs(ac[0]);
    SidelobeMetrics m;
    for (std::size_t k = 1; k < ac.size(); ++k) {
        const double mag = std::abs(ac[k]);
        m.psl = std::max(m.psl, mag / peak);
        m.isl += (mag * mag) / (peak * peak);
    }
    return m;
}

double max_offorigin_normalized(const AmbiguityGrid& grid) {
    const double origin = std::abs(grid.at(0, 0));
    double best = 0.0;
    for (int k = 0; k < grid.n; ++k) {
        for (int l = 0; l < grid.n; ++l) {
            if (k == 0 && l == 0) continue;
            best = std::max(best, std::abs(grid.at(k, l)) / origin);
        }
    }
    return best;
}

std::string export_grid(const AmbiguityGrid& grid) {
    const double origin = std::abs(grid.at(0, 0));
    std::string out = "n=" + std::to_string(grid.n) + ",kind=" + grid_kind_name(grid.kind) + "\n";
    char buf[32];
    for (int k = 0; k < grid.n; ++k) {
        for (int l = 0; l < grid.n; ++l) {
            std::snprintf(buf, sizeof(buf), "%.9g", std::abs(grid.at(k, l)) / origin);
            out += buf;
            out += (l + 1 < grid.n) ? ',' : '\n';
        }
    }
    return out;
}

}  // namespace cazac
