#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "cazac/families.hpp"
#include "cazac/residual.hpp"
#include "doctest.h"

using namespace cazac;

namespace {

// deterministic coordinates in (-1, 1) for derivative checks
struct Lcg {
    std::uint64_t s;
    explicit Lcg(std::uint64_t seed) : s(seed) {}
    double next() {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return (static_cast<double>(s >> 33) / static_cast<double>(1ull << 31)) - 1.0;
    }
};

Eigen::VectorXd random_point(int n, std::uint64_t seed) {
    Lcg rng(seed);
    Eigen::VectorXd v(2 * n);
    for (int i = 0; i < 2 * n; ++i) v(i) = rng.next();
    return v;
}

}  // namespace

TEST_CASE("residual layout and values on the all-ones sequence") {
    const int n = 7;
    ResidualSystem sys(n);
    CHECK(sys.num_residuals() == 19);
    CHECK(sys.num_variables() == 14);

    Eigen::VectorXd v(14);
    v.setZero();
    for (int j = 0; j < n; ++j) v(j) = 1.0;  // x_j = 1 for all j

    const Eigen::VectorXd r = sys.residuals(v);
    REQUIRE(r.size() == 19);
    for (int l = 0; l < n; ++l) CHECK(r(l) == 0.0);               // unit modulus holds
    for (int k = 1; k < n; ++k) CHECK(r(n + k - 1) == 7.0);       // real correlation parts
    for (int k = 1; k < n; ++k) CHECK(r(2 * n - 1 + k - 1) == 0.0);  // imaginary parts
    CHECK(sys.objective(v) == doctest::Approx(6 * 49.0).epsilon(1e-15));
}

TEST_CASE("residuals vanish on known solution sequences") {
    const std::vector<ComplexSeq> roots = {
        quadratic_phase({QuadraticFamily::ZadoffChu, 7, 0}).seq(),
        quadratic_phase({QuadraticFamily::P4, 8, 0}).seq(),
        bjorck(11).seq(),
    };
    for (const ComplexSeq& x : roots) {
        ResidualSystem sys(x.size());
        CAPTURE(x.size());
        CHECK(sys.objective(embed(x)) < 1e-26);
    }
}

TEST_CASE("objective equals squared-correlation energy plus modulus defects") {
    for (int n = 4; n <= 10; ++n) {
        ResidualSystem sys(n);
        const Eigen::VectorXd v = random_point(n, 1000 + static_cast<std::uint64_t>(n));

        // independent route: complex autocorrelation sums, no residual code
        std::vector<std::complex<double>> x(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) x[static_cast<std::size_t>(j)] = {v(j), v(n + j)};
        double expected = 0.0;
        for (int j = 0; j < n; ++j) {
            const double f = std::norm(x[static_cast<std::size_t>(j)]) - 1.0;
            expected += f * f;
        }
        for (int k = 1; k < n; ++k) {
            std::complex<double> acc = 0.0;
            for (int j = 0; j < n; ++j)
                acc += x[static_cast<std::size_t>((j + k) % n)] *
                       std::conj(x[static_cast<std::size_t>(j)]);
            expected += std::norm(acc);
        }
        CAPTURE(n);
        CHECK(sys.objective(v) == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("jacobian matches central finite differences") {
    const double step = 1e-6;
    for (int n = 4; n <= 12; ++n) {
        ResidualSystem sys(n);
        Eigen::VectorXd v = random_point(n, 77 + static_cast<std::uint64_t>(n));
        const Eigen::MatrixXd J = sys.jacobian(v);
        REQUIRE(J.rows() == 3 * n - 2);
        REQUIRE(J.cols() == 2 * n);

        double worst = 0.0;
        for (int c = 0; c < 2 * n; ++c) {
            Eigen::VectorXd hi = v, lo = v;
            hi(c) += step;
            lo(c) -= step;
            const Eigen::VectorXd col = (sys.residuals(hi) - sys.residuals(lo)) / (2 * step);
            worst = std::max(worst, (col - J.col(c)).lpNorm<Eigen::Infinity>());
        }
        CAPTURE(n);
        CHECK(worst < 1e-6);
    }
}

TEST_CASE("scalar-phase rotation spans the jacobian null space at a root") {
    const ComplexSeq x = quadratic_phase({QuadraticFamily::ZadoffChu, 7, 0}).seq();
    ResidualSystem sys(7);
    const RealEmbedding e = embed(x);
    const Eigen::MatrixXd J = sys.jacobian(e);

    // rotating every entry by a common phase moves along t = (-b, a)
    Eigen::VectorXd t(14);
    for (int j = 0; j < 7; ++j) {
        t(j) = -e.b[j];
        t(7 + j) = e.a[j];
    }
    CHECK((J * t).lpNorm<Eigen::Infinity>() < 1e-12);

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(J);
    const auto s = svd.singularValues();
    CHECK(s(s.size() - 1) < 1e-12 * s(0));      // exactly one flat direction...
    CHECK(s(s.size() - 2) > 1e-2 * s(0));       // ...and nothing else near-singular
}

TEST_CASE("embedding vector round trip is bit-exact") {
    const ComplexSeq x = bjorck(7).seq();
    const RealEmbedding e = embed(x);
    const Eigen::VectorXd v = ResidualSystem::to_vector(e);
    const RealEmbedding back = ResidualSystem::to_embedding(v);
    REQUIRE(back.size() == e.size());
    for (int j = 0; j < e.size(); ++j) {
        CHECK(back.a[j] == e.a[j]);
        CHECK(back.b[j] == e.b[j]);
    }
    ResidualSystem sys(7);
    CHECK(sys.objective(e) == sys.objective(v));
    CHECK((sys.residuals(e) - sys.residuals(v)).lpNorm<Eigen::Infinity>() == 0.0);
}

TEST_CASE("dimension validation") {
    CHECK_THROWS_AS(ResidualSystem(1), std::invalid_argument);
    ResidualSystem sys(5);
    Eigen::VectorXd wrong(9);
    wrong.setZero();
    CHECK_THROWS_AS(sys.residuals(wrong), std::invalid_argument);
    CHECK_THROWS_AS(sys.jacobian(wrong), std::invalid_argument);
}
