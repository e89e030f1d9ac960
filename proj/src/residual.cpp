#include "cazac/residual.hpp"

#include <stdexcept>

namespace cazac {

ResidualSystem::ResidualSystem(int n) : n_(n) {
    if (n < 2) throw std::invalid_argument("ResidualSystem requires n >= 2");
}

Eigen::VectorXd ResidualSystem::residuals(const Eigen::VectorXd& v) const {
    const int n = n_;
    if (v.size() != 2 * n) throw std::invalid_argument("coordinate vector has wrong length");
    const auto a = [&](int j) { return v[j % n]; };
    const auto b = [&](int j) { return v[n + j % n]; };

    Eigen::VectorXd r(3 * n - 2);
    for (int l = 0; l < n; ++l) {
        r[l] = a(l) * a(l) + b(l) * b(l) - 1.0;
    }
    for (int k = 1; k < n; ++k) {
        double g = 0.0;
        double h = 0.0;
        for (int j = 0; j < n; ++j) {
            g += a(j + k) * a(j) + b(j + k) * b(j);
            h += a(j) * b(j + k) - b(j) * a(j + k);
        }
        r[n + k - 1] = g;
        r[2 * n - 1 + k - 1] = h;
    }
    return r;
}

double ResidualSystem::objective(const Eigen::VectorXd& v) const {
    return residuals(v).squaredNorm();
}

Eigen::MatrixXd ResidualSystem::jacobian(const Eigen::VectorXd& v) const {
    const int n = n_;
    if (v.size() != 2 * n) throw std::invalid_argument("coordinate vector has wrong length");
    const auto a = [&](int j) { return v[((j % n) + n) % n]; };
    const auto b = [&](int j) { return v[n + ((j % n) + n) % n]; };

    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(3 * n - 2, 2 * n);
    for (int l = 0; l < n; ++l) {
        J(l, l) = 2.0 * a(l);
        J(l, n + l) = 2.0 * b(l);
    }
    for (int k = 1; k < n; ++k) {
        const int gi = n + k - 1;
        const int hi = 2 * n - 1 + k - 1;
        for (int m = 0; m < n; ++m) {
            J(gi, m) = a(m + k) + a(m - k);
            J(gi, n + m) = b(m + k) + b(m - k);
            J(hi, m) = b(m + k) - b(m - k);
            J(hi, n + m) = a(m - k) - a(m + k);
        }
    }
    return J;
}

Eigen::VectorXd ResidualSystem::to_vector(const RealEmbedding& v) {
    if (v.a.size() != v.b.size()) {
        throw std::invalid_argument("RealEmbedding parts have unequal lengths");
    }
    const int n = v.size();
    Eigen::VectorXd out(2 * n);
    for (int j = 0; j < n; ++j) {
        out[j] = v.a[static_cast<std::size_t>(j)];
        out[n + j] = v.b[static_cast<std::size_t>(j)];
    }
    return out;
}

RealEmbedding ResidualSystem::to_embedding(const Eigen::VectorXd& v) {
    const int n = static_cast<int>(v.size()) / 2;
    RealEmbedding out;
    out.a.assign(v.data(), v.data() + n);
    out.b.assign(v.data() + n, v.data() + 2 * n);
    return out;
}

Eigen::VectorXd ResidualSystem::residuals(const RealEmbedding& v) const {
    return residuals(to_vector(v));
}

double ResidualSystem::objective(const RealEmbedding& v) const {
    return objective(to_vector(v));
}

Eigen::MatrixXd ResidualSystem::jacobian(const RealEmbedding& v) const {
    return jacobian(to_vector(v));
}

}  // namespace cazac
