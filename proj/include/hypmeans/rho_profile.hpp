#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hypmeans/rational.hpp"

namespace hypmeans {

/// Laurent polynomial sum_m c_m rho^m with exact rational coefficients.
/// Canonical: no zero coefficients are stored.
class RhoProfile {
 public:
  using Terms = std::map<int, Rational>;

  RhoProfile() = default;
  explicit RhoProfile(Terms terms);

  static RhoProfile monomial(int m, const Rational& c = 1);
  static RhoProfile constant(const Rational& c) { return monomial(0, c); }
  /// (1 - rho^2)^e, e >= 0.
  static RhoProfile one_minus_rho2(int e);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(int m) const;
  int min_exponent() const;
  int max_exponent() const;

  RhoProfile& operator+=(const RhoProfile& o);
  RhoProfile& operator-=(const RhoProfile& o);
  RhoProfile& operator*=(const Rational& c);
  friend RhoProfile operator+(RhoProfile a, const RhoProfile& b) { return a += b; }
  friend RhoProfile operator-(RhoProfile a, const RhoProfile& b) { return a -= b; }
  friend RhoProfile operator-(RhoProfile a) { return a *= Rational(-1); }
  friend RhoProfile operator*(RhoProfile a, const Rational& c) { return a *= c; }
  friend RhoProfile operator*(const Rational& c, RhoProfile a) { return a *= c; }
  friend RhoProfile operator*(const RhoProfile& a, const RhoProfile& b);
  friend bool operator==(const RhoProfile& a, const RhoProfile& b) { return a.terms_ == b.terms_; }

  /// Multiply by rho^m.
  RhoProfile shifted(int m) const;
  RhoProfile derivative() const;

  double operator()(double rho) const;
  std::string to_string() const;

 private:
  void add(int m, const Rational& c);
  Terms terms_;
};

/// sum c * rho^m * (1 - rho^2)^e with integer m and e (e may be negative).
/// Keeps kernel-family members in factored form so that evaluation near
/// rho = 1 does not cancel, and carries the product-rule form of A_m.
class FactoredProfile {
 public:
  struct Term {
    Rational coeff;
    int rho_power;
    int u_power;  // power of u = 1 - rho^2
  };

  FactoredProfile() = default;
  FactoredProfile(const RhoProfile& laurent);  // NOLINT(google-explicit-constructor)
  static FactoredProfile term(const Rational& c, int rho_power, int u_power);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  FactoredProfile& operator+=(const FactoredProfile& o);
  FactoredProfile& operator*=(const Rational& c);
  friend FactoredProfile operator+(FactoredProfile a, const FactoredProfile& b) { return a += b; }
  friend FactoredProfile operator*(FactoredProfile a, const Rational& c) { return a *= c; }

  /// Multiply by rho^m (1 - rho^2)^e.
  FactoredProfile times(int rho_power, int u_power) const;
  FactoredProfile derivative() const;

  /// Expand into a Laurent polynomial; throws std::domain_error if a
  /// negative power of (1 - rho^2) remains.
  RhoProfile expand() const;

  /// Evaluate at rho with u = 1 - rho^2 supplied by the caller.
  double operator()(double rho, double u) const;
  double operator()(double rho) const { return (*this)(rho, (1.0 - rho) * (1.0 + rho)); }

 private:
  void add(const Rational& c, int m, int e);
  std::vector<Term> terms_;
};

/// Floating-point copy of a profile and of its first two derivatives.
class CompiledProfile {
 public:
  CompiledProfile() = default;
  explicit CompiledProfile(const FactoredProfile& a);

  double value(double rho, double u) const { return eval(v_, rho, u); }
  double d1(double rho, double u) const { return eval(d1_, rho, u); }
  double d2(double rho, double u) const { return eval(d2_, rho, u); }

 private:
  struct Term {
    double c;
    int m, e;
  };
  using Terms = std::vector<Term>;
  static double eval(const Terms& t, double rho, double u);
  Terms v_, d1_, d2_;
};

}  // namespace hypmeans
