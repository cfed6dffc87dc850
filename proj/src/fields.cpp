#include "hypmeans/fields.hpp"

#include <cmath>
#include <stdexcept>

namespace hypmeans {

namespace {

struct Radius {
  double rho;
  double u;  // 1 - |x|^2
};

Radius radius_of(std::span<const double> x) {
  double r2 = 0.0;
  for (double v : x) r2 += v * v;
  return {std::sqrt(r2), 1.0 - r2};
}

}  // namespace

SeparableField::SeparableField(int n) : n_(n) {
  if (n < 2) throw std::invalid_argument("SeparableField: dimension must be at least 2");
}

SeparableField SeparableField::harmonic(const FactoredProfile& a, const SolidHarmonic& y) {
  SeparableField f(y.dim());
  f.add_term(a.times(-y.degree(), 0), y.poly(), y.normalization());
  return f;
}

void SeparableField::add_term(const FactoredProfile& radial, const MultiPoly& poly, double scale) {
  if (poly.nvars() != n_) throw std::invalid_argument("SeparableField: polynomial arity mismatch");
  Term t{CompiledProfile(radial), CompiledPoly(poly), {}, CompiledPoly(poly.laplacian()),
         CompiledPoly(poly.radial_derivative()), scale};
  for (int i = 1; i <= n_; ++i) t.grad.emplace_back(poly.derivative(i));
  terms_.push_back(std::move(t));
}

double SeparableField::value(std::span<const double> x) const {
  const Radius r = radius_of(x);
  double acc = 0.0;
  for (const Term& t : terms_) acc += t.scale * t.radial.value(r.rho, r.u) * t.poly(x);
  return acc;
}

void SeparableField::gradient(std::span<const double> x, std::span<double> out) const {
  const Radius r = radius_of(x);
  for (double& v : out) v = 0.0;
  for (const Term& t : terms_) {
    const double g = t.radial.value(r.rho, r.u);
    const double dg_over_rho = t.radial.d1(r.rho, r.u) / r.rho;
    const double p = t.poly(x);
    for (int i = 0; i < n_; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      out[ui] += t.scale * (dg_over_rho * x[ui] * p + g * t.grad[ui](x));
    }
  }
}

double SeparableField::laplacian(std::span<const double> x) const {
  // Delta(g P) = (g'' + (n-1) g'/rho) P + 2 (g'/rho) (x . grad P) + g Delta P
  const Radius r = radius_of(x);
  double acc = 0.0;
  for (const Term& t : terms_) {
    const double g = t.radial.value(r.rho, r.u);
    const double g1 = t.radial.d1(r.rho, r.u);
    const double g2 = t.radial.d2(r.rho, r.u);
    acc += t.scale * ((g2 + (n_ - 1) * g1 / r.rho) * t.poly(x) + 2.0 * g1 / r.rho * t.euler(x) + g * t.lap(x));
  }
  return acc;
}

double SeparableField::laplace_beltrami(std::span<const double> x) const {
  const Radius r = radius_of(x);
  std::vector<double> grad(static_cast<std::size_t>(n_));
  gradient(x, grad);
  double x_dot_grad = 0.0;
  for (int i = 0; i < n_; ++i) x_dot_grad += x[static_cast<std::size_t>(i)] * grad[static_cast<std::size_t>(i)];
  return 0.25 * r.u * r.u * laplacian(x) + 0.5 * (n_ - 2) * r.u * x_dot_grad;
}

BallFunction SeparableField::as_function(std::optional<AnnulusSpec> domain) const {
  auto self = std::make_shared<SeparableField>(*this);
  return {[self](std::span<const double> x) { return self->value(x); }, std::move(domain)};
}

BallFunction SeparableField::laplace_beltrami_function(std::optional<AnnulusSpec> domain) const {
  auto self = std::make_shared<SeparableField>(*this);
  return {[self](std::span<const double> x) { return self->laplace_beltrami(x); }, std::move(domain)};
}

}  // namespace hypmeans
