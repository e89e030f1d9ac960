#pragma once

#include <Eigen/Dense>

#include "cazac/seq.hpp"

namespace cazac {

/// The defining polynomial system of a length-n unit-modulus sequence
/// with vanishing cyclic autocorrelation, over the 2n real coordinates
/// (a_0..a_{n-1}, b_0..b_{n-1}):
///
///   f_l = a_l^2 + b_l^2 - 1                        l = 0..n-1
///   g_k = sum_j a_{j+k} a_j + b_{j+k} b_j          k = 1..n-1
///   h_k = sum_j a_j b_{j+k} - b_j a_{j+k}          k = 1..n-1
///
/// Residual vector layout is (f, g, h), length 3n-2; indices are mod n
/// and sums run j = 0..n-1 in that order. The objective is the plain
/// sum of squares, zero exactly on solution points.
class ResidualSystem {
  public:
    explicit ResidualSystem(int n);

    int n() const { return n_; }
    int num_residuals() const { return 3 * n_ - 2; }
    int num_variables() const { return 2 * n_; }

    /// v is the flat coordinate vector (a_0..a_{n-1}, b_0..b_{n-1}).
    Eigen::VectorXd residuals(const Eigen::VectorXd& v) const;
    double objective(const Eigen::VectorXd& v) const;

    /// Exact partial derivatives, rows matching residuals() and columns
    /// matching the coordinate layout.
    Eigen::MatrixXd jacobian(const Eigen::VectorXd& v) const;

    Eigen::VectorXd residuals(const RealEmbedding& v) const;
    double objective(const RealEmbedding& v) const;
    Eigen::MatrixXd jacobian(const RealEmbedding& v) const;

    static Eigen::VectorXd to_vector(const RealEmbedding& v);
    static RealEmbedding to_embedding(const Eigen::VectorXd& v);

  private:
    int n_;
};

}  // namespace cazac
