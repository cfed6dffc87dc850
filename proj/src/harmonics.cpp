#include "hypmeans/harmonics.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace hypmeans {

namespace {

void enumerate_monomials(int n, int k, int axis, Exponent& current, std::vector<Exponent>& out) {
  if (axis == n - 1) {
    current[static_cast<std::size_t>(axis)] = k;
    out.push_back(current);
    return;
  }
  for (int p = k; p >= 0; --p) {
    current[static_cast<std::size_t>(axis)] = p;
    enumerate_monomials(n, k - p, axis + 1, current, out);
  }
}

std::vector<SolidHarmonic> build_basis(int n, int k) {
  std::vector<Exponent> monos;
  Exponent cur(static_cast<std::size_t>(n), 0);
  enumerate_monomials(n, k, 0, cur, monos);

  std::vector<MultiPoly> ortho;
  std::vector<Rational> norms;
  for (const Exponent& e : monos) {
    if (e.back() > 1) continue;
    MultiPoly v = harmonic_projection(MultiPoly::monomial(e), k);
    for (std::size_t b = 0; b < ortho.size(); ++b) {
      const Rational ip = (v * ortho[b]).sphere_mean();
      if (ip != 0) v -= ortho[b] * (ip / norms[b]);
    }
    const Rational nn = (v * v).sphere_mean();
    if (nn == 0) throw std::logic_error("basis: dependent harmonic spanning set");
    ortho.push_back(std::move(v));
    norms.push_back(nn);
  }
  if (static_cast<long>(ortho.size()) != dimension(n, k))
    throw std::logic_error("basis: wrong number of basis functions");

  std::vector<SolidHarmonic> out;
  out.reserve(ortho.size());
  for (auto& p : ortho) out.emplace_back(std::move(p), k);
  return out;
}

}  // namespace

SolidHarmonic::SolidHarmonic(MultiPoly poly, int k) : poly_(std::move(poly)), degree_(k) {
  if (k < 0) throw std::invalid_argument("SolidHarmonic: negative degree");
  if (poly_.is_zero()) throw std::invalid_argument("SolidHarmonic: zero polynomial");
  if (!poly_.is_homogeneous(k))
    throw std::invalid_argument("SolidHarmonic: polynomial is not homogeneous of degree " + std::to_string(k));
  if (!poly_.laplacian().is_zero()) throw std::invalid_argument("SolidHarmonic: polynomial is not harmonic");
  squared_norm_ = (poly_ * poly_).sphere_mean();
  compiled_ = CompiledPoly(poly_);
}

double SolidHarmonic::normalization() const {
  return 1.0 / std::sqrt(squared_norm_.get_d() * sphere_area(dim()));
}

double SolidHarmonic::evaluate_normalized(std::span<const double> omega) const {
  return normalization() * compiled_(omega);
}

long dimension(int n, int k) {
  if (n < 2 || k < 0) throw std::invalid_argument("dimension: need n >= 2 and k >= 0");
  const Rational d = binomial(n + k - 1, k) - binomial(n + k - 3, k - 2);
  return d.get_num().get_si();
}

MultiPoly harmonic_projection(const MultiPoly& p, int k) {
  const int n = p.nvars();
  if (!p.is_homogeneous(k)) throw std::invalid_argument("harmonic_projection: input must be homogeneous");
  MultiPoly out = p;
  MultiPoly lap = p;
  Rational coeff = 1;
  for (int j = 1; 2 * j <= k; ++j) {
    lap = lap.laplacian();
    if (lap.is_zero()) break;
    coeff *= Rational(-1, 2 * j * (n + 2 * k - 2 * j - 2));
    out += MultiPoly::radius_power(n, j) * lap * coeff;
  }
  if (!out.laplacian().is_zero()) throw std::logic_error("harmonic_projection: result is not harmonic");
  return out;
}

const std::vector<SolidHarmonic>& basis(int n, int k) {
  if (n != 2 && n != 3) throw std::invalid_argument("basis: only n = 2 and n = 3 are supported");
  if (k < 0) throw std::invalid_argument("basis: negative degree");
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::vector<SolidHarmonic>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find({n, k});
  if (it == cache.end()) it = cache.emplace(std::make_pair(n, k), build_basis(n, k)).first;
  return it->second;
}

MultiplyDecomposition multiply_decompose(const SolidHarmonic& p, int axis) {
  const int k = p.degree();
  const int n = p.dim();
  if (k < 1) throw std::invalid_argument("multiply_decompose: degree must be >= 1");
  const MultiPoly xp_p = MultiPoly::coordinate(n, axis) * p.poly();
  MultiPoly remainder = MultiPoly::radius_power(n, 1) * p.poly().derivative(axis) * Rational(1, n + 2 * (k - 1));
  MultiPoly next = xp_p - remainder;
  if (!(next + remainder == xp_p)) throw std::logic_error("multiply_decompose: identity failed");
  return {SolidHarmonic(std::move(next), k + 1), std::move(remainder)};
}

double project(const std::function<double(std::span<const double>)>& f, double rho,
               const HarmonicIndex& idx, const QuadratureRule& rule) {
  const int n = rule.dim();
  if (rule.exactness() < 2 * idx.k)
    throw std::invalid_argument("project: quadrature exactness " + std::to_string(rule.exactness()) +
                                " is below 2k = " + std::to_string(2 * idx.k));
  const auto& b = basis(n, idx.k);
  if (idx.j < 1 || idx.j > static_cast<int>(b.size())) throw std::out_of_range("project: harmonic index j out of range");
  const SolidHarmonic& y = b[static_cast<std::size_t>(idx.j - 1)];
  std::vector<double> point(static_cast<std::size_t>(n));
  double acc = 0.0;
  for (std::size_t q = 0; q < rule.size(); ++q) {
    const auto w = rule.node(q);
    for (int i = 0; i < n; ++i) point[static_cast<std::size_t>(i)] = rho * w[static_cast<std::size_t>(i)];
    acc += rule.weight(q) * f(point) * y.evaluate_normalized(w);
  }
  return acc;
}

}  // namespace hypmeans
