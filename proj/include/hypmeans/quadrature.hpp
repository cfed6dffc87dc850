#pragma once

#include <span>
#include <vector>

namespace hypmeans {

/// Nodes and positive weights on S^{n-1}, n in {2, 3}. Weights sum to the
/// sphere area Omega_n; the rule integrates spherical polynomials up to
/// `exactness` exactly.
class QuadratureRule {
 public:
  int dim() const { return n_; }
  int exactness() const { return exactness_; }
  std::size_t size() const { return weights_.size(); }

  std::span<const double> node(std::size_t q) const {
    return {nodes_.data() + q * static_cast<std::size_t>(n_), static_cast<std::size_t>(n_)};
  }
  double weight(std::size_t q) const { return weights_[q]; }
  std::span<const double> weights() const { return weights_; }
  double total_weight() const;

  /// n = 2: `order` equispaced nodes (trapezoid), exact to trig degree order-1.
  /// n = 3: `order` Gauss-Legendre nodes in cos(theta) times 2*order azimuths,
  /// exact to degree 2*order-1. Requires order >= 4.
  friend QuadratureRule build_rule(int n, int order);

 private:
  int n_ = 0;
  int exactness_ = 0;
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

QuadratureRule build_rule(int n, int order);

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int count, std::vector<double>& nodes, std::vector<double>& weights);

/// Area of S^{n-1}: 2 pi^{n/2} / Gamma(n/2).
double sphere_area(int n);

}  // namespace hypmeans
