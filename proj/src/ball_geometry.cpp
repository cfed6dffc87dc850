#include "hypmeans/ball_geometry.hpp"

#include <cassert>
#include <cmath>
#include <string>

namespace hypmeans {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace

PointBall::PointBall(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.size() < 2)
    throw std::invalid_argument("PointBall: dimension must be at least 2");
  for (double c : coords_)
    if (!std::isfinite(c)) throw std::invalid_argument("PointBall: non-finite coordinate");
  if (norm2() >= 1.0)
    throw std::invalid_argument("PointBall: point must satisfy |x| < 1");
}

PointBall PointBall::origin(int n) {
  return PointBall(std::vector<double>(static_cast<std::size_t>(n), 0.0));
}

PointBall PointBall::at_distance(double s, std::span<const double> direction) {
  const double len = std::sqrt(dot(direction, direction));
  if (len == 0.0) throw std::invalid_argument("PointBall::at_distance: zero direction");
  const double rho = rho_of_s(s);
  std::vector<double> c(direction.begin(), direction.end());
  for (double& v : c) v *= rho / len;
  return PointBall(std::move(c));
}

double PointBall::norm2() const { return dot(coords_, coords_); }
double PointBall::norm() const { return std::sqrt(norm2()); }
double PointBall::metric_factor() const { return 2.0 / (1.0 - norm2()); }

AnnulusSpec::AnnulusSpec(double r, std::optional<double> R) : inner(r), outer(R) {
  if (!(r >= 0.0)) throw std::invalid_argument("AnnulusSpec: inner radius must be >= 0");
  if (R && !(*R > r)) throw std::invalid_argument("AnnulusSpec: need r < R");
}

bool AnnulusSpec::contains_radius(double d) const {
  return d > inner && (!outer || d < *outer);
}

SphereSpec::SphereSpec(PointBall c, double s) : center(std::move(c)), radius(s) {
  if (!(s > 0.0)) throw std::invalid_argument("SphereSpec: radius must be > 0");
}

double hyperbolic_distance(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size())
    throw std::invalid_argument("hyperbolic_distance: dimension mismatch");
  double diff2 = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) diff2 += (x[i] - y[i]) * (x[i] - y[i]);
  // 1 - 2x.y + |x|^2|y|^2 == |x-y|^2 + (1-|x|^2)(1-|y|^2); the right side has no cancellation.
  const double denom2 = diff2 + (1.0 - dot(x, x)) * (1.0 - dot(y, y));
  const double q = std::sqrt(diff2 / denom2);
  assert(q < 1.0);
  return 2.0 * std::atanh(q);
}

double hyperbolic_distance(const PointBall& x, const PointBall& y) {
  return hyperbolic_distance(x.coords(), y.coords());
}

double distance_from_origin(std::span<const double> x) {
  return 2.0 * std::atanh(std::sqrt(dot(x, x)));
}

double rho_of_s(double s) {
  if (!(s >= 0.0)) throw std::domain_error("rho_of_s: radius must be >= 0");
  return std::tanh(0.5 * s);
}

double s_of_rho(double rho) {
  if (!(rho >= 0.0 && rho < 1.0))
    throw std::domain_error("s_of_rho: rho must lie in [0, 1), got " + std::to_string(rho));
  return 2.0 * std::atanh(rho);
}

bool admissible(const SphereSpec& sphere, const AnnulusSpec& ann, double margin) {
  const double d0 = distance_from_origin(sphere.center.coords());
  if (!(sphere.radius - d0 > ann.inner + margin)) return false;
  if (ann.outer && !(sphere.radius + d0 < *ann.outer - margin)) return false;
  return true;
}

bool sphere_inside(const SphereSpec& sphere, const AnnulusSpec& ann, double margin) {
  const double d0 = distance_from_origin(sphere.center.coords());
  const double nearest = std::abs(sphere.radius - d0);
  const double farthest = sphere.radius + d0;
  if (!(nearest > ann.inner + margin)) return false;
  if (ann.outer && !(farthest < *ann.outer - margin)) return false;
  return true;
}

std::vector<double> stereographic(const PointBall& x) {
  const double r2 = x.norm2();
  std::vector<double> eta(static_cast<std::size_t>(x.dim() + 1));
  for (int i = 0; i < x.dim(); ++i) eta[static_cast<std::size_t>(i)] = 2.0 * x[i] / (1.0 + r2);
  eta.back() = (r2 - 1.0) / (r2 + 1.0);
  return eta;
}

PointBall inverse_stereographic(std::span<const double> eta) {
  if (eta.size() < 3) throw std::invalid_argument("inverse_stereographic: need n + 1 >= 3 coordinates");
  const double last = eta.back();
  if (!(last < 0.0))
    throw std::domain_error("inverse_stereographic: point is not in the lower hemisphere");
  std::vector<double> x(eta.begin(), eta.end() - 1);
  for (double& v : x) v /= (1.0 - last);
  return PointBall(std::move(x));
}

}  // namespace hypmeans
