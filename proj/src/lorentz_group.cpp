#include "hypmeans/lorentz_group.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hypmeans {

namespace {

Eigen::MatrixXd minkowski_form(int n) {
  Eigen::MatrixXd j = -Eigen::MatrixXd::Identity(n + 1, n + 1);
  j(0, 0) = 1.0;
  return j;
}

}  // namespace

LorentzMatrix::LorentzMatrix(Eigen::MatrixXd m, double tol) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() < 3)
    throw std::invalid_argument("LorentzMatrix: expected a square (n+1)x(n+1) matrix with n >= 2");
  const double res = invariant_residual();
  if (!(res <= tol))
    throw std::invalid_argument("LorentzMatrix: g^T J g != J (residual " + std::to_string(res) + ")");
  if (!(m_(0, 0) > 0.0)) throw std::invalid_argument("LorentzMatrix: g_00 must be positive");
  if (!(std::abs(m_.determinant() - 1.0) <= tol))
    throw std::invalid_argument("LorentzMatrix: determinant must be +1");
}

LorentzMatrix LorentzMatrix::identity(int n) {
  return LorentzMatrix(Eigen::MatrixXd::Identity(n + 1, n + 1), Unchecked{});
}

LorentzMatrix LorentzMatrix::boost(int n, double t, int p) {
  if (n < 2) throw std::invalid_argument("boost: dimension must be at least 2");
  if (p < 1 || p > n) throw std::out_of_range("boost: axis index must lie in 1..n");
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n + 1, n + 1);
  const double c = std::cosh(t), s = std::sinh(t);
  m(0, 0) = c;
  m(p, p) = c;
  m(0, p) = s;
  m(p, 0) = s;
  return LorentzMatrix(std::move(m), Unchecked{});
}

LorentzMatrix LorentzMatrix::rotation(const Eigen::MatrixXd& q) {
  const auto n = q.rows();
  if (q.cols() != n || n < 2) throw std::invalid_argument("rotation: expected an n x n matrix, n >= 2");
  if ((q.transpose() * q - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument("rotation: matrix is not orthogonal");
  if (std::abs(q.determinant() - 1.0) > 1e-10)
    throw std::invalid_argument("rotation: determinant must be +1");
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n + 1, n + 1);
  m.bottomRightCorner(n, n) = q;
  return LorentzMatrix(std::move(m), Unchecked{});
}

LorentzMatrix LorentzMatrix::operator*(const LorentzMatrix& other) const {
  if (other.dim() != dim()) throw std::invalid_argument("LorentzMatrix: dimension mismatch");
  return LorentzMatrix(m_ * other.m_, Unchecked{});
}

LorentzMatrix LorentzMatrix::inverse() const {
  const Eigen::MatrixXd j = minkowski_form(dim());
  return LorentzMatrix(j * m_.transpose() * j, Unchecked{});
}

double LorentzMatrix::invariant_residual() const {
  const Eigen::MatrixXd j = minkowski_form(dim());
  return (m_.transpose() * j * m_ - j).cwiseAbs().maxCoeff();
}

void apply_to(const LorentzMatrix& g, std::span<const double> x, std::span<double> out) {
  const int n = g.dim();
  if (static_cast<int>(x.size()) != n || static_cast<int>(out.size()) != n)
    throw std::invalid_argument("apply: dimension mismatch");
  double r2 = 0.0;
  for (double v : x) r2 += v * v;
  const double half_plus = 0.5 * (1.0 + r2);
  double denom = 0.5 * (1.0 - r2) + half_plus * g(0, 0);
  for (int l = 1; l <= n; ++l) denom += g(0, l) * x[static_cast<std::size_t>(l - 1)];
  if (!(denom > 0.0)) throw std::domain_error("apply: non-positive denominator, matrix is not in SO+(1,n)");
  for (int j = 1; j <= n; ++j) {
    double num = half_plus * g(j, 0);
    for (int l = 1; l <= n; ++l) num += g(j, l) * x[static_cast<std::size_t>(l - 1)];
    out[static_cast<std::size_t>(j - 1)] = num / denom;
  }
}

PointBall apply(const LorentzMatrix& g, const PointBall& x) {
  std::vector<double> y(static_cast<std::size_t>(g.dim()));
  apply_to(g, x.coords(), y);
  return PointBall(std::move(y));
}

Eigen::MatrixXd rotation_taking_e1_to(std::span<const double> u) {
  const auto n = static_cast<Eigen::Index>(u.size());
  Eigen::VectorXd target = Eigen::Map<const Eigen::VectorXd>(u.data(), n);
  const double len = target.norm();
  if (len == 0.0) throw std::invalid_argument("rotation_taking_e1_to: zero vector");
  target /= len;
  Eigen::VectorXd v = -target;
  v(0) += 1.0;
  const double vv = v.squaredNorm();
  if (vv < 1e-30) return Eigen::MatrixXd::Identity(n, n);
  const Eigen::MatrixXd householder = Eigen::MatrixXd::Identity(n, n) - 2.0 * v * v.transpose() / vv;
  // Flip the last axis first so the product is proper and still sends e_1 to target.
  Eigen::MatrixXd flip = Eigen::MatrixXd::Identity(n, n);
  flip(n - 1, n - 1) = -1.0;
  return householder * flip;
}

LorentzMatrix transport_to(const PointBall& x) {
  const int n = x.dim();
  const double len = x.norm();
  if (len == 0.0) return LorentzMatrix::identity(n);
  const LorentzMatrix rot = LorentzMatrix::rotation(rotation_taking_e1_to(x.coords()));
  const LorentzMatrix b = LorentzMatrix::boost(n, 2.0 * std::atanh(len), 1);
  return rot * b * rot.inverse();
}

}  // namespace hypmeans
