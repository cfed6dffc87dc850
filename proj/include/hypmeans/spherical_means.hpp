#pragma once

// Means over geodesic spheres. Nodes of S_s(x) are obtained by transporting
// the origin-centred sphere of Euclidean radius tanh(s/2):
//
//   M_s f(x) = Omega_n^{-1} sum_q w_q f(g . (tanh(s/2) omega_q)),  g = transport_to(x).
//
// The mean is the normalized average; vanishing does not depend on the
// normalization.

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypmeans/ball_geometry.hpp"
#include "hypmeans/fields.hpp"
#include "hypmeans/quadrature.hpp"
#include "hypmeans/rho_profile.hpp"

namespace hypmeans {

/// A quadrature node fell outside the domain of the function being averaged.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Visits every node y of S_s(x) with its weight.
void for_each_sphere_node(const PointBall& x, double s, const QuadratureRule& rule,
                          const std::function<void(std::span<const double>, double)>& visit);

/// Normalized mean of f over S_s(x). Throws DomainError naming the first
/// node that leaves f.domain.
double mean(const BallFunction& f, const PointBall& x, double s, const QuadratureRule& rule);

/// max |f| over the nodes of S_s(x).
double sphere_sup(const BallFunction& f, const PointBall& x, double s, const QuadratureRule& rule);

struct DarbouxResult {
  double radial_side;   // L_s (M_s f)(x), five-point differences in s
  double ambient_side;  // M_s (L_x f)(x)
  double residual;      // |radial_side - ambient_side|
  double scale;         // max over nodes of |f| and |L_x f|
  double relative() const { return residual / scale; }
};

/// Compares L_s M_s f with M_s L_x f, where L_s = d^2/ds^2 + (n-1) coth s d/ds.
/// Every stencil radius s + j h (|j| <= 2) must give an admissible sphere
/// for `ann`, otherwise std::domain_error.
DarbouxResult darboux_residual(const SeparableField& f, const PointBall& x, double s,
                               const QuadratureRule& rule, double h, const AnnulusSpec& ann,
                               std::optional<AnnulusSpec> domain = std::nullopt);

/// F(s) = M_s f(x) sampled on a strictly increasing grid of radii.
struct MeanProfile {
  PointBall x;
  std::vector<double> s_grid;
  std::vector<double> values;
};

MeanProfile sample_mean_profile(const BallFunction& f, const PointBall& x, std::vector<double> s_grid,
                                const QuadratureRule& rule);

struct OdeResidual {
  double max_residual;  // max_s |F'' + (n-1) coth s F' - kappa F| / (max|F| + floor)
  double max_abs_value;
  double zform_discrepancy;  // max |z-form residual - s-form residual|, same normalization
};

/// Residual of F'' + (n-1) coth(s) F' - kappa F = 0 with kappa = (k-1)(n+k-2),
/// five-point differences on a uniform grid (>= 5 points). The z-form
/// -4z(1-z) F_zz - 2(n-(n+1)z) F_z - kappa F with z = -sinh^2 s is evaluated
/// from the same derivatives as a cross-check.
OdeResidual ode_residual(const MeanProfile& profile, int n, int k, double floor = 1e-300);

struct IndicialExponents {
  int n;
  int k;
  double alpha;
  double beta;
  double gamma;
  double nu;
};

/// Roots of x^2 - ((n-1)/2) x - kappa/4 = 0, alpha >= beta, nu = alpha - beta.
IndicialExponents indicial_exponents(int n, int k);

/// Least-squares slope of log|a(tanh(s/2))| against s on `samples` equispaced
/// radii in [s_lo, s_hi]. Throws std::invalid_argument for fewer than 5
/// samples and std::domain_error if a sample vanishes.
double decay_fit(const std::function<double(double)>& a_of_s, double s_lo, double s_hi, int samples = 61);
double decay_fit(const FactoredProfile& a, double s_lo, double s_hi, int samples = 61);

}  // namespace hypmeans
