#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hypmeans/fields.hpp"
#include "hypmeans/harmonics.hpp"
#include "hypmeans/quadrature.hpp"

using namespace hypmeans;

namespace {

MultiPoly mono(std::vector<int> e, Rational c = 1) { return MultiPoly::monomial(e, c); }

}  // namespace

TEST(MultiPoly, Laplacian) {
  EXPECT_TRUE(laplacian(mono({2, 0}) - mono({0, 2})).is_zero());
  EXPECT_EQ(laplacian(mono({2, 0})), MultiPoly::constant(2, 2));
  // Delta(|x|^2 P) = (4k + 2n) P for harmonic P: 14 x1 x2 for P = x1 x2, n = 3.
  const MultiPoly p = mono({1, 1, 0});
  EXPECT_EQ(laplacian(MultiPoly::radius_power(3, 1) * p), mono({1, 1, 0}, 14));
  EXPECT_EQ(laplacian(MultiPoly::radius_power(2, 1) * mono({1, 1})), mono({1, 1}, 12));
}

TEST(MultiPoly, CanonicalAndArithmetic) {
  const MultiPoly a = mono({1, 0}) + mono({0, 1});
  const MultiPoly b = a - mono({0, 1});
  EXPECT_EQ(b, mono({1, 0}));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ((a * a).coefficient({1, 1}), Rational(2));
  EXPECT_EQ((a * a).degree(), 2);
  EXPECT_TRUE((a * a).is_homogeneous(2));
  EXPECT_EQ(MultiPoly(2).degree(), -1);
  EXPECT_EQ(mono({2, 1}).derivative(1), mono({1, 1}, 2));
  EXPECT_EQ(mono({2, 1}).radial_derivative(), mono({2, 1}, 3));
  const std::vector<double> x{0.5, -2.0};
  EXPECT_DOUBLE_EQ(mono({2, 1}, Rational(3, 2)).evaluate(x), 1.5 * 0.25 * -2.0);
}

TEST(MultiPoly, SphereMean) {
  // Means of x1^2 over S^1 and S^2.
  EXPECT_EQ(mono({2, 0}).sphere_mean(), Rational(1, 2));
  EXPECT_EQ(mono({2, 0, 0}).sphere_mean(), Rational(1, 3));
  EXPECT_EQ(mono({1, 0}).sphere_mean(), Rational(0));
  // Mean of x1^2 x2^2 over S^2 is 1/15.
  EXPECT_EQ(mono({2, 2, 0}).sphere_mean(), Rational(1, 15));
}

TEST(Dimension, Formula) {
  for (int n = 2; n <= 6; ++n) EXPECT_EQ(dimension(n, 0), 1);
  for (int k = 1; k <= 10; ++k) EXPECT_EQ(dimension(2, k), 2);
  for (int k = 0; k <= 10; ++k) EXPECT_EQ(dimension(3, k), 2 * k + 1);
}

TEST(SolidHarmonic, Validation) {
  EXPECT_THROW(SolidHarmonic(mono({2, 0}), 2), std::invalid_argument);
  EXPECT_THROW(SolidHarmonic(mono({1, 0}) + mono({0, 2}), 1), std::invalid_argument);
  EXPECT_NO_THROW(SolidHarmonic(mono({1, 1}), 2));
}

TEST(Basis, SmallCases) {
  const auto& b20 = basis(2, 0);
  ASSERT_EQ(b20.size(), 1u);
  EXPECT_EQ(b20[0].poly(), MultiPoly::constant(2, 1));

  const auto& b21 = basis(2, 1);
  ASSERT_EQ(b21.size(), 2u);
  EXPECT_EQ(b21[0].poly(), mono({1, 0}));
  EXPECT_EQ(b21[1].poly(), mono({0, 1}));
  // integral cos^2 = pi = (1/2) * 2 pi.
  EXPECT_EQ(b21[0].squared_norm(), Rational(1, 2));
  EXPECT_NEAR(b21[0].normalization(), 1.0 / std::sqrt(std::numbers::pi), 1e-15);
  EXPECT_THROW(basis(4, 1), std::invalid_argument);
}

TEST(Basis, ExactGramMatrix) {
  for (int n : {2, 3})
    for (int k = 0; k <= 6; ++k) {
      const auto& b = basis(n, k);
      ASSERT_EQ(static_cast<long>(b.size()), dimension(n, k));
      for (std::size_t a = 0; a < b.size(); ++a)
        for (std::size_t c = 0; c < b.size(); ++c) {
          const Rational ip = (b[a].poly() * b[c].poly()).sphere_mean();
          if (a == c)
            EXPECT_EQ(ip, b[a].squared_norm());
          else
            EXPECT_EQ(ip, Rational(0)) << "n=" << n << " k=" << k;
        }
    }
}

TEST(Basis, DimensionMatchesUpToTen) {
  for (int k = 0; k <= 10; ++k) EXPECT_EQ(static_cast<long>(basis(3, k).size()), 2 * k + 1);
}

TEST(MultiplyDecompose, Examples) {
  const auto d1 = multiply_decompose(SolidHarmonic(mono({1, 0}), 1), 1);
  EXPECT_EQ(d1.next.poly(), mono({2, 0}, Rational(1, 2)) - mono({0, 2}, Rational(1, 2)));
  EXPECT_EQ(d1.remainder, MultiPoly::radius_power(2, 1) * Rational(1, 2));

  const auto d2 = multiply_decompose(SolidHarmonic(mono({0, 1}), 1), 1);
  EXPECT_EQ(d2.next.poly(), mono({1, 1}));
  EXPECT_TRUE(d2.remainder.is_zero());

  EXPECT_THROW(multiply_decompose(SolidHarmonic(MultiPoly::constant(2, 1), 0), 1), std::invalid_argument);
}

TEST(MultiplyDecompose, HarmonicForBasisUpToFive) {
  for (int k = 1; k <= 5; ++k)
    for (const auto& p : basis(3, k))
      for (int axis = 1; axis <= 3; ++axis) {
        const auto d = multiply_decompose(p, axis);
        EXPECT_TRUE(laplacian(d.next.poly()).is_zero());
        EXPECT_EQ(d.next.poly() + d.remainder, MultiPoly::coordinate(3, axis) * p.poly());
      }
}

TEST(Quadrature, CircleTrapezoid) {
  const QuadratureRule rule = build_rule(2, 64);
  EXPECT_NEAR(rule.total_weight(), 2 * std::numbers::pi, 1e-13);
  // Nodes sit at angles 2 pi q / N; reduce k q mod N exactly before taking cos.
  for (std::size_t q = 0; q < rule.size(); ++q) {
    const double th = 2 * std::numbers::pi * static_cast<double>(q) / 64;
    EXPECT_NEAR(rule.node(q)[0], std::cos(th), 1e-16);
    EXPECT_NEAR(rule.node(q)[1], std::sin(th), 1e-16);
  }
  for (int k = 1; k <= 63; ++k) {
    double sum = 0.0;
    for (std::size_t q = 0; q < rule.size(); ++q)
      sum += rule.weight(q) * std::cos(2 * std::numbers::pi * static_cast<double>((k * q) % 64) / 64);
    EXPECT_NEAR(sum, 0.0, 1e-14) << k;
  }
  EXPECT_THROW(build_rule(2, 3), std::invalid_argument);
  EXPECT_THROW(build_rule(4, 8), std::invalid_argument);
}

TEST(Quadrature, SphereProductRule) {
  const QuadratureRule rule = build_rule(3, 24);
  EXPECT_NEAR(rule.total_weight(), 4 * std::numbers::pi, 1e-13);
  EXPECT_GE(rule.exactness(), 20);
  // Harmonic projections of every degree-k monomial integrate to zero for 1 <= k <= 20.
  for (int k = 1; k <= 20; ++k)
    for (int a = 0; a <= k; ++a)
      for (int b = 0; b <= k - a; b += std::max(1, (k - a) / 3)) {
        const CompiledPoly y(harmonic_projection(MultiPoly::monomial({a, b, k - a - b}), k));
        double sum = 0.0, scale = 0.0;
        for (std::size_t q = 0; q < rule.size(); ++q) {
          const double v = y(rule.node(q));
          sum += rule.weight(q) * v;
          scale += rule.weight(q) * std::abs(v);
        }
        if (scale > 0) EXPECT_LE(std::abs(sum) / scale, 1e-12) << k << " " << a << " " << b;
      }
}

TEST(Project, ScaledHarmonic) {
  const QuadratureRule rule = build_rule(2, 64);
  const auto& y21 = basis(2, 2)[0];
  const double rho = 0.6;
  const BallFn f = [&](std::span<const double> x) { return y21.normalization() * y21.poly().evaluate(x); };
  for (int k = 0; k <= 4; ++k)
    for (int j = 1; j <= dimension(2, k); ++j) {
      const double a = project(f, rho, {k, j}, rule);
      EXPECT_NEAR(a, (k == 2 && j == 1) ? rho * rho : 0.0, 1e-13);
    }
  const BallFn radial = [](std::span<const double> x) { return std::exp(x[0] * x[0] + x[1] * x[1]); };
  for (int k = 1; k <= 4; ++k)
    for (int j = 1; j <= 2; ++j) EXPECT_NEAR(project(radial, rho, {k, j}, rule), 0.0, 1e-13);
  EXPECT_THROW(project(f, rho, {40, 1}, rule), std::invalid_argument);
}

TEST(Project, Roundtrip) {
  const QuadratureRule rule = build_rule(2, 64);
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::vector<std::pair<HarmonicIndex, double>> coeffs;
  for (int k = 0; k <= 4; ++k)
    for (int j = 1; j <= dimension(2, k); ++j) coeffs.push_back({{k, j}, unif(rng)});
  const BallFn f = [&](std::span<const double> x) {
    double v = 0.0;
    for (const auto& [idx, c] : coeffs) {
      const auto& y = basis(2, idx.k)[static_cast<std::size_t>(idx.j - 1)];
      v += c * y.normalization() * y.poly().evaluate(x);
    }
    return v;
  };
  const double rho = 0.7;
  double worst = 0.0;
  for (const auto& [idx, c] : coeffs)
    worst = std::max(worst, std::abs(project(f, rho, idx, rule) - c * std::pow(rho, idx.k)));
  EXPECT_LT(worst, 1e-12);
}

TEST(Project, RotationCovariance) {
  // In n = 2 rotating by theta mixes (cos k, sin k) by the angle k theta.
  const QuadratureRule rule = build_rule(2, 64);
  const double th = 0.37;
  const BallFn f = [](std::span<const double> x) { return std::exp(0.8 * x[0] - 0.3 * x[1]) + x[0] * x[1] * x[1]; };
  const BallFn g = [&](std::span<const double> x) {
    const double y[2] = {std::cos(th) * x[0] - std::sin(th) * x[1], std::sin(th) * x[0] + std::cos(th) * x[1]};
    return f(y);
  };
  const double rho = 0.5;
  for (int k = 1; k <= 5; ++k) {
    const double c = project(f, rho, {k, 1}, rule), s = project(f, rho, {k, 2}, rule);
    const double cr = project(g, rho, {k, 1}, rule), sr = project(g, rho, {k, 2}, rule);
    // Basis sign conventions: (cos k, sin k) up to normalization, checked via the norm.
    EXPECT_NEAR(cr * cr + sr * sr, c * c + s * s, 1e-11);
    EXPECT_NEAR(cr, std::cos(k * th) * c + std::sin(k * th) * s, 1e-11);
  }
}

TEST(Project, Parseval) {
  const QuadratureRule rule = build_rule(2, 64);
  const BallFn f = [](std::span<const double> x) { return 1.0 + x[0] - 2.0 * x[0] * x[1] + x[1] * x[1] * x[1]; };
  const double rho = 0.9;
  double total = 0.0;
  for (std::size_t q = 0; q < rule.size(); ++q) {
    const auto w = rule.node(q);
    const double y[2] = {rho * w[0], rho * w[1]};
    total += rule.weight(q) * f(y) * f(y);
  }
  double partial = 0.0;
  for (int k = 0; k <= 6; ++k) {
    for (int j = 1; j <= dimension(2, k); ++j) partial += std::pow(project(f, rho, {k, j}, rule), 2);
    EXPECT_LE(partial, total + 1e-12);
  }
  EXPECT_NEAR(partial, total, 1e-12);
}
