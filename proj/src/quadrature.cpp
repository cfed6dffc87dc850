#include "hypmeans/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hypmeans {

double QuadratureRule::total_weight() const {
  // Neumaier summation; products with thousands of nodes otherwise drift by ~1e-13.
  double sum = 0.0, comp = 0.0;
  for (double w : weights_) {
    const double t = sum + w;
    comp += std::abs(sum) >= std::abs(w) ? (sum - t) + w : (w - t) + sum;
    sum = t;
  }
  return sum + comp;
}

double sphere_area(int n) {
  return 2.0 * std::pow(std::numbers::pi, 0.5 * n) / std::tgamma(0.5 * n);
}

void gauss_legendre(int count, std::vector<double>& nodes, std::vector<double>& weights) {
  if (count < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
  nodes.assign(static_cast<std::size_t>(count), 0.0);
  weights.assign(static_cast<std::size_t>(count), 0.0);
  const int half = (count + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (count + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int l = 2; l <= count; ++l) {
        const double p2 = ((2.0 * l - 1.0) * x * p1 - (l - 1.0) * p0) / l;
        p0 = p1;
        p1 = p2;
      }
      if (count == 1) p0 = 1.0;
      dp = count * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    double p0 = 1.0, p1 = x;
    for (int l = 2; l <= count; ++l) {
      const double p2 = ((2.0 * l - 1.0) * x * p1 - (l - 1.0) * p0) / l;
      p0 = p1;
      p1 = p2;
    }
    dp = count * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes[static_cast<std::size_t>(i)] = -x;
    nodes[static_cast<std::size_t>(count - 1 - i)] = x;
    weights[static_cast<std::size_t>(i)] = w;
    weights[static_cast<std::size_t>(count - 1 - i)] = w;
  }
}

QuadratureRule build_rule(int n, int order) {
  if (order < 4) throw std::invalid_argument("build_rule: order must be >= 4");
  QuadratureRule rule;
  rule.n_ = n;
  if (n == 2) {
    rule.exactness_ = order - 1;
    const double w = 2.0 * std::numbers::pi / order;
    for (int q = 0; q < order; ++q) {
      const double th = 2.0 * std::numbers::pi * q / order;
      rule.nodes_.push_back(std::cos(th));
      rule.nodes_.push_back(std::sin(th));
      rule.weights_.push_back(w);
    }
    return rule;
  }
  if (n == 3) {
    std::vector<double> gl_nodes, gl_weights;
    gauss_legendre(order, gl_nodes, gl_weights);
    const int azimuths = 2 * order;
    rule.exactness_ = 2 * order - 1;
    const double dphi = 2.0 * std::numbers::pi / azimuths;
    for (int a = 0; a < order; ++a) {
      const double ct = gl_nodes[static_cast<std::size_t>(a)];
      const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
      for (int b = 0; b < azimuths; ++b) {
        const double phi = dphi * b;
        rule.nodes_.push_back(st * std::cos(phi));
        rule.nodes_.push_back(st * std::sin(phi));
        rule.nodes_.push_back(ct);
        rule.weights_.push_back(gl_weights[static_cast<std::size_t>(a)] * dphi);
      }
    }
    return rule;
  }
  throw std::invalid_argument("build_rule: only n = 2 and n = 3 are supported");
}

}  // namespace hypmeans
