#pragma once

// Solid spherical harmonics with exact rational coefficients and the
// orthonormal bases Y_kj of H_k restricted to S^{n-1}.

#include <functional>
#include <span>
#include <vector>

#include "hypmeans/multipoly.hpp"
#include "hypmeans/quadrature.hpp"

namespace hypmeans {

/// A harmonic polynomial P, homogeneous of degree k. squared_norm() is the
/// exact rational q with  integral_{S^{n-1}} P^2 domega = q * Omega_n.
class SolidHarmonic {
 public:
  /// Throws std::invalid_argument unless poly is homogeneous of degree k
  /// and its Laplacian vanishes exactly.
  SolidHarmonic(MultiPoly poly, int k);

  const MultiPoly& poly() const { return poly_; }
  int degree() const { return degree_; }
  int dim() const { return poly_.nvars(); }
  const Rational& squared_norm() const { return squared_norm_; }

  /// 1 / sqrt(q * Omega_n): multiplies P into an L^2(S^{n-1}, domega)-unit function.
  double normalization() const;
  /// Y(omega) = normalization() * P(omega).
  double evaluate_normalized(std::span<const double> omega) const;

 private:
  MultiPoly poly_;
  int degree_;
  Rational squared_norm_;
  CompiledPoly compiled_;
};

struct HarmonicIndex {
  int k = 0;
  int j = 1;  // 1..d_k(n)
};

/// d_k(n) = C(n+k-1, k) - C(n+k-3, k-2).
long dimension(int n, int k);

/// Harmonic projection of a homogeneous polynomial of degree k:
/// sum_j (-1)^j |x|^{2j} Delta^j p / (2^j j! prod_{i=1..j} (n + 2k - 2i - 2)).
MultiPoly harmonic_projection(const MultiPoly& p, int k);

/// Orthogonal basis of H_k for n in {2, 3}: Gram-Schmidt, in the sphere inner
/// product, of the harmonic projections of the monomials of degree k whose
/// last exponent is 0 or 1, taken in graded-lex order. Results are cached.
const std::vector<SolidHarmonic>& basis(int n, int k);

struct MultiplyDecomposition {
  SolidHarmonic next;    // P_{k+1} = x_p P - |x|^2/(n+2k-2) dP/dx_p
  MultiPoly remainder;   // |x|^2/(n+2k-2) dP/dx_p
};

/// Splits x_p P = P_{k+1} + |x|^2/(n+2(k-1)) dP/dx_p. Requires k >= 1.
MultiplyDecomposition multiply_decompose(const SolidHarmonic& p, int axis);

/// a_kj(rho) = integral_{S^{n-1}} f(rho omega) Y_kj(omega) domega by quadrature.
/// Throws std::invalid_argument if the rule is not exact to degree 2k.
double project(const std::function<double(std::span<const double>)>& f, double rho,
               const HarmonicIndex& idx, const QuadratureRule& rule);

}  // namespace hypmeans
