#pragma once

// Exact calculus in the radial variable rho: the ladder operators
//
//   A_m = (1 - rho^2) d/drho - m (1 + rho^2) / rho,
//
// the kernel family  sum_{i=1..k} C_i (1-rho^2)^(n+i-2) / rho^(n+k-2),  the
// radial part of L_k = A_{k-1} A_{2-k-n}, and the vector fields
// X_p = 1/2 (1+|x|^2) d/dx_p - x_p sum_j x_j d/dx_j.

#include <optional>
#include <span>
#include <vector>

#include "hypmeans/ball_geometry.hpp"
#include "hypmeans/fields.hpp"
#include "hypmeans/harmonics.hpp"
#include "hypmeans/rho_profile.hpp"

namespace hypmeans {

/// First-order form (1 - rho^2) a' - m (rho^-1 + rho) a.
RhoProfile apply_Am(int m, const RhoProfile& a);
FactoredProfile apply_Am(int m, const FactoredProfile& a);

/// Product form rho^m / (1-rho^2)^(m-1) * d/drho[ (1/rho - rho)^m a ],
/// differentiated in factored form and expanded at the end.
RhoProfile apply_Am_product_form(int m, const RhoProfile& a);

/// kappa(n, k) = (k-1)(n+k-2): L_x a(rho) Y_k = (1/4 A_{k-1} A_{2-k-n} a + kappa a) Y_k.
long eigen_shift(int n, int k);

/// Radial part of L_k: A_{k-1}(A_{2-k-n}(a)). Requires k >= 1.
RhoProfile apply_Lk_radial(int n, int k, const RhoProfile& a);

/// (1-rho^2)^(n+i-2) / rho^(n+k-2), 1 <= i <= k.
RhoProfile family_member(int n, int k, int i);
FactoredProfile family_member_factored(int n, int k, int i);

/// A kernel profile sum_i C_i * family_member(n, k, i).
struct KernelProfile {
  int n;
  int k;
  std::vector<Rational> coefficients;  // C_1 .. C_k

  KernelProfile(int n, int k, std::vector<Rational> c);
  RhoProfile expand() const;
  FactoredProfile factored() const;
};

/// Recover C_1..C_k with a = sum C_i family_member(n, k, i), or nullopt if
/// a is not in the span.
std::optional<std::vector<Rational>> to_family(int n, int k, const RhoProfile& a);

struct LadderEntry {
  int i;
  Rational expected;  // 2(k - i)
  Rational measured;  // coefficient of member(n, k-1, i) in A_{2-k-n} member(n, k, i)
  bool ok;
};

struct LadderReport {
  int n;
  int k;
  std::vector<LadderEntry> entries;
  bool all_ok() const;
};

/// Checks A_{2-k-n} member(n,k,i) = 2(k-i) member(n,k-1,i) exactly for all i <= k.
LadderReport kernel_ladder_check(int n, int k);

/// X_p f at x from an analytic gradient.
double xp_field(const SeparableField& f, int axis, std::span<const double> x);
/// X_p f at x from Richardson-extrapolated central differences,
/// h = 1e-5 (1 - |x|).
double xp_field(const BallFn& f, int axis, std::span<const double> x);

struct XpIdentityResidual {
  double lhs;
  double rhs;
  double residual;  // |lhs - rhs|
  double scale;     // max(|lhs|, |each rhs term|), floor 1e-300
  double relative() const { return residual / scale; }
};

/// For f = rho^-k a(rho) P(x) with l = 2-k-n compares
///   2(k-l) X_p f  against  (k-l) A_k a rho^(-k-1) P_{k+1} + A_l a rho^(-k+1) dP/dx_p,
/// the left side via the analytic gradient of f, the right side via exact A_m
/// profiles and multiply_decompose. Throws std::domain_error at x = 0.
XpIdentityResidual xp_identity_check(const RhoProfile& a, const SolidHarmonic& p, int axis,
                                 std::span<const double> x);

}  // namespace hypmeans
