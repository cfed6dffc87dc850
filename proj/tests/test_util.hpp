#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "hypmeans/ball_geometry.hpp"

namespace hypmeans::testing {

/// Uniformly random point in the Euclidean ball of radius max_norm.
inline PointBall random_point(std::mt19937_64& rng, int n, double max_norm) {
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<double> v(static_cast<std::size_t>(n));
  double len = 0.0;
  for (double& c : v) {
    c = gauss(rng);
    len += c * c;
  }
  len = std::sqrt(len);
  const double r = max_norm * std::pow(unif(rng), 1.0 / n);
  for (double& c : v) c *= r / len;
  return PointBall(std::move(v));
}

}  // namespace hypmeans::testing
