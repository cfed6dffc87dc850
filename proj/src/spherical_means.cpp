#include "hypmeans/spherical_means.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hypmeans/lorentz_group.hpp"
#include "hypmeans/radial_calculus.hpp"

namespace hypmeans {

namespace {

std::string describe_node(std::span<const double> y) {
  std::ostringstream os;
  os.precision(17);
  os << "(";
  for (std::size_t i = 0; i < y.size(); ++i) os << (i ? ", " : "") << y[i];
  os << ")";
  return os.str();
}

// Five-point stencils for F' and F''.
double d1_five(const double* f, double h) { return (f[0] - 8.0 * f[1] + 8.0 * f[3] - f[4]) / (12.0 * h); }
double d2_five(const double* f, double h) {
  return (-f[0] + 16.0 * f[1] - 30.0 * f[2] + 16.0 * f[3] - f[4]) / (12.0 * h * h);
}

}  // namespace

void for_each_sphere_node(const PointBall& x, double s, const QuadratureRule& rule,
                          const std::function<void(std::span<const double>, double)>& visit) {
  const int n = x.dim();
  if (rule.dim() != n) throw std::invalid_argument("mean: quadrature rule dimension mismatch");
  if (!(s > 0.0)) throw std::invalid_argument("mean: radius must be positive");
  const LorentzMatrix g = transport_to(x);
  const double rho = rho_of_s(s);
  std::vector<double> base(static_cast<std::size_t>(n)), y(static_cast<std::size_t>(n));
  for (std::size_t q = 0; q < rule.size(); ++q) {
    const auto w = rule.node(q);
    for (int i = 0; i < n; ++i) base[static_cast<std::size_t>(i)] = rho * w[static_cast<std::size_t>(i)];
    apply_to(g, base, y);
    visit(y, rule.weight(q));
  }
}

double mean(const BallFunction& f, const PointBall& x, double s, const QuadratureRule& rule) {
  // Compensated sum, matching total_weight(), so that constants average to exactly 1.
  double acc = 0.0, comp = 0.0;
  for_each_sphere_node(x, s, rule, [&](std::span<const double> y, double w) {
    if (f.domain && !f.domain->contains_radius(distance_from_origin(y)))
      throw DomainError("mean: node " + describe_node(y) + " lies outside the function's domain annulus");
    const double term = w * f.eval(y);
    const double t = acc + term;
    comp += std::abs(acc) >= std::abs(term) ? (acc - t) + term : (term - t) + acc;
    acc = t;
  });
  return (acc + comp) / rule.total_weight();
}

double sphere_sup(const BallFunction& f, const PointBall& x, double s, const QuadratureRule& rule) {
  double sup = 0.0;
  for_each_sphere_node(x, s, rule, [&](std::span<const double> y, double) { sup = std::max(sup, std::abs(f.eval(y))); });
  return sup;
}

DarbouxResult darboux_residual(const SeparableField& f, const PointBall& x, double s,
                               const QuadratureRule& rule, double h, const AnnulusSpec& ann,
                               std::optional<AnnulusSpec> domain) {
  if (!(h > 0.0)) throw std::invalid_argument("darboux_residual: step must be positive");
  const BallFunction fn = f.as_function(domain);
  double values[5];
  for (int j = -2; j <= 2; ++j) {
    const double sj = s + j * h;
    if (!(sj > 0.0) || !admissible(SphereSpec(x, sj), ann))
      throw std::domain_error("darboux_residual: stencil radius " + std::to_string(sj) + " is not admissible");
    values[j + 2] = mean(fn, x, sj, rule);
  }
  const int n = x.dim();
  const double radial = d2_five(values, h) + (n - 1) / std::tanh(s) * d1_five(values, h);
  const BallFunction lf = f.laplace_beltrami_function(domain);
  const double ambient = mean(lf, x, s, rule);
  const double scale = std::max({sphere_sup(fn, x, s, rule), sphere_sup(lf, x, s, rule), 1e-300});
  return {radial, ambient, std::abs(radial - ambient), scale};
}

MeanProfile sample_mean_profile(const BallFunction& f, const PointBall& x, std::vector<double> s_grid,
                                const QuadratureRule& rule) {
  for (std::size_t i = 1; i < s_grid.size(); ++i)
    if (!(s_grid[i] > s_grid[i - 1])) throw std::invalid_argument("sample_mean_profile: grid must be strictly increasing");
  MeanProfile p{x, std::move(s_grid), {}};
  p.values.reserve(p.s_grid.size());
  for (double s : p.s_grid) p.values.push_back(mean(f, x, s, rule));
  return p;
}

OdeResidual ode_residual(const MeanProfile& profile, int n, int k, double floor) {
  const auto& s = profile.s_grid;
  const auto& f = profile.values;
  if (s.size() < 5 || f.size() != s.size()) throw std::invalid_argument("ode_residual: need at least 5 grid points");
  const double h = (s.back() - s.front()) / static_cast<double>(s.size() - 1);
  for (std::size_t i = 1; i < s.size(); ++i)
    if (std::abs((s[i] - s[i - 1]) - h) > 1e-9 * std::max(1.0, h))
      throw std::invalid_argument("ode_residual: grid must be uniform");
  const double kappa = static_cast<double>(eigen_shift(n, k));
  double max_abs = 0.0;
  for (double v : f) max_abs = std::max(max_abs, std::abs(v));
  const double norm = max_abs + floor;

  OdeResidual out{0.0, max_abs, 0.0};
  for (std::size_t i = 2; i + 2 < s.size(); ++i) {
    const double* w = f.data() + i - 2;
    const double fs = d1_five(w, h);
    const double fss = d2_five(w, h);
    const double si = s[i];
    const double res_s = fss + (n - 1) / std::tanh(si) * fs - kappa * f[i];

    const double z = -std::sinh(si) * std::sinh(si);
    const double dz = -std::sinh(2.0 * si);
    const double d2z = -2.0 * std::cosh(2.0 * si);
    const double fz = fs / dz;
    const double fzz = (fss - d2z * fz) / (dz * dz);
    const double res_z = -4.0 * z * (1.0 - z) * fzz - 2.0 * (n - (n + 1) * z) * fz - kappa * f[i];

    out.max_residual = std::max(out.max_residual, std::abs(res_s) / norm);
    out.zform_discrepancy = std::max(out.zform_discrepancy, std::abs(res_z - res_s) / norm);
  }
  return out;
}

IndicialExponents indicial_exponents(int n, int k) {
  if (k < 1) throw std::invalid_argument("indicial_exponents: k must be >= 1");
  const double half_sum = 0.5 * (n - 1);
  const double kappa = static_cast<double>(eigen_shift(n, k));
  const double nu = std::sqrt(half_sum * half_sum + kappa);
  return {n, k, 0.5 * (half_sum + nu), 0.5 * (half_sum - nu), 0.5 * n, nu};
}

double decay_fit(const std::function<double(double)>& a_of_s, double s_lo, double s_hi, int samples) {
  if (samples < 5) throw std::invalid_argument("decay_fit: window needs at least 5 samples");
  if (!(s_hi > s_lo)) throw std::invalid_argument("decay_fit: empty window");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int q = 0; q < samples; ++q) {
    const double s = s_lo + (s_hi - s_lo) * q / (samples - 1);
    const double v = std::abs(a_of_s(s));
    if (!(v > 0.0)) throw std::domain_error("decay_fit: profile vanishes at s = " + std::to_string(s));
    const double y = std::log(v);
    sx += s;
    sy += y;
    sxx += s * s;
    sxy += s * y;
  }
  const double m = samples;
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

double decay_fit(const FactoredProfile& a, double s_lo, double s_hi, int samples) {
  return decay_fit(
      [&a](double s) {
        // 1 - tanh^2(s/2) = sech^2(s/2), exact without cancellation.
        const double c = std::cosh(0.5 * s);
        return a(std::tanh(0.5 * s), 1.0 / (c * c));
      },
      s_lo, s_hi, samples);
}

}  // namespace hypmeans
