#pragma once

// SO+(1,n) acting on the Poincare ball by the fractional-linear formula
//
//   y_j = (1/2 (1+|x|^2) g_j0 + sum_l g_jl x_l)
//         / (1/2 (1-|x|^2) + 1/2 (1+|x|^2) g_00 + sum_l g_0l x_l),
//
// with indices 0..n. Boosts tau_{t,p} = exp(t X_p) and rotations
// block-diag(1, Q) generate the group; transport_to(x) returns an isometry
// carrying the origin to x.

#include <Eigen/Dense>

#include <span>

#include "hypmeans/ball_geometry.hpp"

namespace hypmeans {

class LorentzMatrix {
 public:
  /// Validates g^T J g = J, g_00 > 0 and det g = +1 within tol.
  explicit LorentzMatrix(Eigen::MatrixXd m, double tol = 1e-10);

  static LorentzMatrix identity(int n);
  /// cosh t at (0,0) and (p,p), sinh t at (0,p) and (p,0); p in 1..n.
  static LorentzMatrix boost(int n, double t, int p);
  /// block-diag(1, q) for q in SO(n).
  static LorentzMatrix rotation(const Eigen::MatrixXd& q);

  int dim() const { return static_cast<int>(m_.rows()) - 1; }
  const Eigen::MatrixXd& matrix() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }

  LorentzMatrix operator*(const LorentzMatrix& other) const;
  /// g^{-1} = J g^T J.
  LorentzMatrix inverse() const;

  /// max |g^T J g - J| entrywise.
  double invariant_residual() const;

 private:
  struct Unchecked {};
  LorentzMatrix(Eigen::MatrixXd m, Unchecked) : m_(std::move(m)) {}

  Eigen::MatrixXd m_;
};

/// Action on the ball. Throws std::domain_error if the denominator is not
/// strictly positive, which only happens for matrices outside SO+(1,n).
PointBall apply(const LorentzMatrix& g, const PointBall& x);

/// Raw-coordinate form of apply; out must have g.dim() entries.
void apply_to(const LorentzMatrix& g, std::span<const double> x, std::span<double> out);

/// A proper rotation Q with Q e_1 = u / |u| (Householder reflection composed
/// with a reflection fixing e_1).
Eigen::MatrixXd rotation_taking_e1_to(std::span<const double> u);

/// Isometry with apply(g, 0) = x: rotate e_1 to x/|x|, boost along axis 1 by
/// 2 artanh|x|, rotate back. Identity for x = 0.
LorentzMatrix transport_to(const PointBall& x);

}  // namespace hypmeans
