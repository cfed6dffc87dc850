#pragma once

// Functions on the ball used as inputs to the means and operator checks.
// A SeparableField is a finite sum  sum_t scale_t * g_t(rho) * P_t(x)  with
// g_t a factored radial profile and P_t a polynomial, so value, gradient,
// Euclidean Laplacian and the Laplace-Beltrami operator
//
//   L_x = ((1-|x|^2)^n / 4) sum_i d/dx_i ((1-|x|^2)^(2-n) d/dx_i)
//       = ((1-|x|^2)^2 / 4) Delta + ((n-2)(1-|x|^2) / 2) x.grad
//
// are all available in closed form.

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "hypmeans/ball_geometry.hpp"
#include "hypmeans/harmonics.hpp"
#include "hypmeans/multipoly.hpp"
#include "hypmeans/rho_profile.hpp"

namespace hypmeans {

using BallFn = std::function<double(std::span<const double>)>;

/// A scalar function together with the region where it may be sampled.
/// An empty domain means the whole ball.
struct BallFunction {
  BallFn eval;
  std::optional<AnnulusSpec> domain;
};

class SeparableField {
 public:
  explicit SeparableField(int n);

  /// f(x) = a(rho) * Y(omega) with Y the L^2-normalized restriction of y.
  static SeparableField harmonic(const FactoredProfile& a, const SolidHarmonic& y);

  void add_term(const FactoredProfile& radial, const MultiPoly& poly, double scale = 1.0);

  int dim() const { return n_; }
  bool empty() const { return terms_.empty(); }

  double value(std::span<const double> x) const;
  void gradient(std::span<const double> x, std::span<double> out) const;
  double laplacian(std::span<const double> x) const;
  double laplace_beltrami(std::span<const double> x) const;

  BallFunction as_function(std::optional<AnnulusSpec> domain = std::nullopt) const;
  BallFunction laplace_beltrami_function(std::optional<AnnulusSpec> domain = std::nullopt) const;

 private:
  struct Term {
    CompiledProfile radial;
    CompiledPoly poly;
    std::vector<CompiledPoly> grad;
    CompiledPoly lap;
    CompiledPoly euler;
    double scale;
  };
  int n_;
  std::vector<Term> terms_;
};

}  // namespace hypmeans
