#pragma once

// Points of the Poincare ball B^n, geodesic distance, and the admissibility
// rule deciding which spheres S_s(x) constrain the class of functions with
// vanishing means on an annulus Ann(r, R).

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace hypmeans {

class PointBall {
 public:
  /// Throws std::invalid_argument unless coords.size() >= 2 and |x| < 1.
  explicit PointBall(std::vector<double> coords);

  static PointBall origin(int n);
  /// The point tanh(s/2) * direction; direction is normalized first.
  static PointBall at_distance(double s, std::span<const double> direction);

  int dim() const { return static_cast<int>(coords_.size()); }
  std::span<const double> coords() const { return coords_; }
  double operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }

  double norm2() const;
  double norm() const;
  /// Conformal factor 2 / (1 - |x|^2) of the hyperbolic metric.
  double metric_factor() const;

 private:
  std::vector<double> coords_;
};

/// Annulus Ann(r, R) in geodesic radii. An absent outer radius means R = infinity.
struct AnnulusSpec {
  double inner = 0.0;
  std::optional<double> outer;

  AnnulusSpec() = default;
  AnnulusSpec(double r, std::optional<double> R);
  static AnnulusSpec unbounded(double r) { return AnnulusSpec(r, std::nullopt); }

  bool bounded() const { return outer.has_value(); }
  /// True iff r < d < R.
  bool contains_radius(double d) const;
};

struct SphereSpec {
  PointBall center;
  double radius;

  SphereSpec(PointBall c, double s);
};

/// Default margin keeping quadrature nodes strictly off the annulus boundary.
inline constexpr double kAdmissibleMargin = 1e-9;

double hyperbolic_distance(std::span<const double> x, std::span<const double> y);
double hyperbolic_distance(const PointBall& x, const PointBall& y);
/// d(0, x) = 2 artanh |x|.
double distance_from_origin(std::span<const double> x);

/// Euclidean radius tanh(s/2) of the origin-centred geodesic sphere of radius s.
double rho_of_s(double s);
/// Inverse of rho_of_s; throws std::domain_error for rho outside [0, 1).
double s_of_rho(double rho);

/// S_s(x) lies inside Ann(r, R) and encloses B_r(0):
/// s - d(0,x) > r + margin and, for finite R, s + d(0,x) < R - margin.
bool admissible(const SphereSpec& sphere, const AnnulusSpec& ann,
                double margin = kAdmissibleMargin);

/// The geodesic sphere is contained in the annulus (it need not enclose B_r(0)).
bool sphere_inside(const SphereSpec& sphere, const AnnulusSpec& ann,
                   double margin = kAdmissibleMargin);

/// Map B^n onto the lower hemisphere of S^n; returns n + 1 coordinates.
std::vector<double> stereographic(const PointBall& x);
/// Inverse map; throws std::domain_error unless the last coordinate is negative.
PointBall inverse_stereographic(std::span<const double> eta);

}  // namespace hypmeans
