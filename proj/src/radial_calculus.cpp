#include "hypmeans/radial_calculus.hpp"

#include <cmath>
#include <stdexcept>

namespace hypmeans {

RhoProfile apply_Am(int m, const RhoProfile& a) {
  const RhoProfile one_minus = RhoProfile::one_minus_rho2(1);
  const RhoProfile inv_plus = RhoProfile::monomial(-1) + RhoProfile::monomial(1);
  return one_minus * a.derivative() - inv_plus * a * Rational(m);
}

FactoredProfile apply_Am(int m, const FactoredProfile& a) {
  return a.derivative().times(0, 1) + (a.times(-1, 0) + a.times(1, 0)) * Rational(-m);
}

RhoProfile apply_Am_product_form(int m, const RhoProfile& a) {
  // (1/rho - rho)^m = rho^-m (1 - rho^2)^m
  const FactoredProfile inner = FactoredProfile(a).times(-m, m);
  return inner.derivative().times(m, 1 - m).expand();
}

long eigen_shift(int n, int k) { return static_cast<long>(k - 1) * (n + k - 2); }

RhoProfile apply_Lk_radial(int n, int k, const RhoProfile& a) {
  if (k < 1) throw std::invalid_argument("apply_Lk_radial: k must be >= 1");
  return apply_Am(k - 1, apply_Am(2 - k - n, a));
}

FactoredProfile family_member_factored(int n, int k, int i) {
  if (n < 2 || k < 1 || i < 1 || i > k)
    throw std::invalid_argument("family_member: need n >= 2 and 1 <= i <= k");
  return FactoredProfile::term(1, -(n + k - 2), n + i - 2);
}

RhoProfile family_member(int n, int k, int i) { return family_member_factored(n, k, i).expand(); }

KernelProfile::KernelProfile(int n_, int k_, std::vector<Rational> c)
    : n(n_), k(k_), coefficients(std::move(c)) {
  if (static_cast<int>(coefficients.size()) != k)
    throw std::invalid_argument("KernelProfile: expected k coefficients");
}

RhoProfile KernelProfile::expand() const { return factored().expand(); }

FactoredProfile KernelProfile::factored() const {
  FactoredProfile out;
  for (int i = 1; i <= k; ++i)
    out += family_member_factored(n, k, i) * coefficients[static_cast<std::size_t>(i - 1)];
  return out;
}

std::optional<std::vector<Rational>> to_family(int n, int k, const RhoProfile& a) {
  if (k < 1) throw std::invalid_argument("to_family: k must be >= 1");
  std::vector<Rational> c(static_cast<std::size_t>(k));
  if (a.is_zero()) return c;
  // rho^(n+k-2) a must be an even polynomial q(rho^2); rewrite it in u = 1 - rho^2.
  const RhoProfile b = a.shifted(n + k - 2);
  if (b.min_exponent() < 0) return std::nullopt;
  std::map<int, Rational> in_u;
  for (const auto& [e, coeff] : b.terms()) {
    if (e % 2 != 0) return std::nullopt;
    const int j = e / 2;  // (1 - u)^j
    for (int l = 0; l <= j; ++l) {
      Rational& slot = in_u[l];
      slot += coeff * binomial(j, l) * (l % 2 == 0 ? 1 : -1);
    }
  }
  for (const auto& [l, coeff] : in_u) {
    if (coeff == 0) continue;
    const int i = l - n + 2;
    if (i < 1 || i > k) return std::nullopt;
    c[static_cast<std::size_t>(i - 1)] = coeff;
  }
  return c;
}

bool LadderReport::all_ok() const {
  for (const auto& e : entries)
    if (!e.ok) return false;
  return true;
}

LadderReport kernel_ladder_check(int n, int k) {
  if (k < 1) throw std::invalid_argument("kernel_ladder_check: k must be >= 1");
  LadderReport report{n, k, {}};
  for (int i = 1; i <= k; ++i) {
    const RhoProfile image = apply_Am(2 - k - n, family_member(n, k, i));
    LadderEntry entry{i, Rational(2 * (k - i)), Rational(0), false};
    if (i == k) {
      entry.ok = image.is_zero();
      if (!image.is_zero()) entry.measured = image.coefficient(image.max_exponent());
    } else if (auto c = to_family(n, k - 1, image)) {
      entry.measured = (*c)[static_cast<std::size_t>(i - 1)];
      bool others_zero = true;
      for (int q = 1; q <= k - 1; ++q)
        if (q != i && (*c)[static_cast<std::size_t>(q - 1)] != 0) others_zero = false;
      entry.ok = others_zero && entry.measured == entry.expected;
    }
    report.entries.push_back(entry);
  }
  return report;
}

namespace {

double xp_from_gradient(std::span<const double> x, std::span<const double> grad, int axis) {
  if (axis < 1 || axis > static_cast<int>(x.size())) throw std::out_of_range("xp_field: axis out of range");
  const auto p = static_cast<std::size_t>(axis - 1);
  double r2 = 0.0, x_dot_grad = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    r2 += x[j] * x[j];
    x_dot_grad += x[j] * grad[j];
  }
  return 0.5 * (1.0 + r2) * grad[p] - x[p] * x_dot_grad;
}

}  // namespace

double xp_field(const SeparableField& f, int axis, std::span<const double> x) {
  std::vector<double> grad(x.size());
  f.gradient(x, grad);
  return xp_from_gradient(x, grad, axis);
}

double xp_field(const BallFn& f, int axis, std::span<const double> x) {
  double r2 = 0.0;
  for (double v : x) r2 += v * v;
  const double h = 1e-5 * (1.0 - std::sqrt(r2));
  std::vector<double> grad(x.size());
  std::vector<double> probe(x.begin(), x.end());
  auto central = [&](std::size_t j, double step) {
    probe[j] = x[j] + step;
    const double up = f(probe);
    probe[j] = x[j] - step;
    const double down = f(probe);
    probe[j] = x[j];
    return (up - down) / (2.0 * step);
  };
  for (std::size_t j = 0; j < x.size(); ++j)
    grad[j] = (4.0 * central(j, 0.5 * h) - central(j, h)) / 3.0;
  return xp_from_gradient(x, grad, axis);
}

XpIdentityResidual xp_identity_check(const RhoProfile& a, const SolidHarmonic& p, int axis,
                                 std::span<const double> x) {
  const int n = p.dim();
  const int k = p.degree();
  if (static_cast<int>(x.size()) != n) throw std::invalid_argument("xp_identity_check: dimension mismatch");
  if (k < 1) throw std::invalid_argument("xp_identity_check: degree must be >= 1");
  double r2 = 0.0;
  for (double v : x) r2 += v * v;
  if (r2 == 0.0) throw std::domain_error("xp_identity_check: x = 0 is singular");
  const double rho = std::sqrt(r2);
  const int l = 2 - k - n;

  SeparableField f(n);
  f.add_term(FactoredProfile(a).times(-k, 0), p.poly());
  const double lhs = 2.0 * (k - l) * xp_field(f, axis, x);

  const MultiplyDecomposition dec = multiply_decompose(p, axis);
  const double up = (k - l) * apply_Am(k, a)(rho) * std::pow(rho, -k - 1) * dec.next.poly().evaluate(x);
  const double down = apply_Am(l, a)(rho) * std::pow(rho, -k + 1) * p.poly().derivative(axis).evaluate(x);
  const double rhs = up + down;
  const double scale = std::max({std::abs(lhs), std::abs(up), std::abs(down), 1e-300});
  return {lhs, rhs, std::abs(lhs - rhs), scale};
}

}  // namespace hypmeans
