#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hypmeans/rational.hpp"

namespace hypmeans {

using Exponent = std::vector<int>;

/// Orders exponents by total degree, then lexicographically with the
/// highest power of x_1 first (x1^2 < x1 x2 < x2^2 < ... within a degree).
struct GradedLex {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Multivariate polynomial in n variables with exact rational coefficients.
/// Canonical: no zero coefficients are stored.
class MultiPoly {
 public:
  using Terms = std::map<Exponent, Rational, GradedLex>;

  explicit MultiPoly(int nvars);

  static MultiPoly constant(int nvars, const Rational& c);
  static MultiPoly monomial(const Exponent& e, const Rational& c = 1);
  /// x_i, 1-based axis index.
  static MultiPoly coordinate(int nvars, int axis);
  /// |x|^(2j).
  static MultiPoly radius_power(int nvars, int j);

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous(int k) const;

  Rational coefficient(const Exponent& e) const;
  void add_term(const Exponent& e, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// d/dx_axis, 1-based axis.
  MultiPoly derivative(int axis) const;
  MultiPoly laplacian() const;
  /// Euler operator sum_i x_i d/dx_i.
  MultiPoly radial_derivative() const;

  double evaluate(std::span<const double> x) const;

  /// Integral over S^{n-1} divided by its area Omega_n (exact).
  Rational sphere_mean() const;

  std::string to_string() const;

 private:
  int nvars_;
  Terms terms_;
};

/// Floating-point copy of a MultiPoly for fast repeated evaluation.
class CompiledPoly {
 public:
  CompiledPoly() = default;
  explicit CompiledPoly(const MultiPoly& p);

  double operator()(std::span<const double> x) const;
  bool empty() const { return coeffs_.empty(); }

 private:
  int nvars_ = 0;
  int max_power_ = 0;
  std::vector<int> exps_;
  std::vector<double> coeffs_;
};

/// Laplacian of a polynomial.
MultiPoly laplacian(const MultiPoly& p);

}  // namespace hypmeans
