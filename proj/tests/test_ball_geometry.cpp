#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hypmeans/ball_geometry.hpp"
#include "test_util.hpp"

using namespace hypmeans;
using hypmeans::testing::random_point;

TEST(PointBall, RejectsInvalid) {
  EXPECT_THROW(PointBall({0.5}), std::invalid_argument);
  EXPECT_THROW(PointBall({1.0, 0.0}), std::invalid_argument);
  EXPECT_THROW(PointBall({0.8, 0.7}), std::invalid_argument);
  EXPECT_NO_THROW(PointBall({0.7, 0.7}));
  EXPECT_DOUBLE_EQ(PointBall({0.5, 0.0}).metric_factor(), 2.0 / 0.75);
}

TEST(Distance, IdentityAndAxis) {
  const PointBall o = PointBall::origin(2);
  EXPECT_EQ(hyperbolic_distance(o, o), 0.0);
  // At y = 0 the distance reduces to 2 artanh|x|.
  const PointBall x({std::tanh(0.5), 0.0});
  EXPECT_NEAR(std::tanh(0.5), 0.4621171573, 1e-10);
  EXPECT_NEAR(hyperbolic_distance(o, x), 1.0, 1e-14);
  EXPECT_THROW(hyperbolic_distance(PointBall::origin(2), PointBall::origin(3)), std::invalid_argument);
}

TEST(Distance, SymmetricAndTriangle) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 100; ++t) {
    const PointBall x = random_point(rng, 3, 0.95), y = random_point(rng, 3, 0.95),
                    z = random_point(rng, 3, 0.95);
    EXPECT_NEAR(hyperbolic_distance(x, y), hyperbolic_distance(y, x), 1e-15);
    EXPECT_LE(hyperbolic_distance(x, z), hyperbolic_distance(x, y) + hyperbolic_distance(y, z) + 1e-12);
    EXPECT_GT(hyperbolic_distance(x, y), 0.0);
  }
}

TEST(Distance, AgreesWithAcoshForm) {
  // cosh d = 1 + 2|x-y|^2 / ((1-|x|^2)(1-|y|^2)); independent closed form.
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    const PointBall x = random_point(rng, 2, 0.9), y = random_point(rng, 2, 0.9);
    const double dx = x[0] - y[0], dy = x[1] - y[1];
    const double ref = std::acosh(1.0 + 2.0 * (dx * dx + dy * dy) / ((1 - x.norm2()) * (1 - y.norm2())));
    EXPECT_NEAR(hyperbolic_distance(x, y), ref, 1e-9 * std::max(1.0, ref));
  }
}

TEST(RadiusConversion, Basics) {
  EXPECT_EQ(rho_of_s(0.0), 0.0);
  EXPECT_NEAR(rho_of_s(1.0), 0.4621171573, 1e-10);
  EXPECT_NEAR(rho_of_s(1.0), std::tanh(0.5), 1e-15);
  EXPECT_GT(rho_of_s(50.0), 1.0 - 1e-10);
  double prev = 0.0;
  for (double s = 0.5; s < 40.0; s += 0.5) {
    EXPECT_GE(rho_of_s(s), prev);
    prev = rho_of_s(s);
  }
  for (double s : {0.0, 0.3, 1.7, 6.0}) EXPECT_NEAR(s_of_rho(rho_of_s(s)), s, 1e-12);
  EXPECT_THROW(s_of_rho(1.0), std::domain_error);
  EXPECT_THROW(s_of_rho(-0.1), std::domain_error);
}

TEST(Admissible, CentredSpheres) {
  const PointBall o = PointBall::origin(2);
  const AnnulusSpec ann(0.5, 3.0);
  EXPECT_TRUE(admissible(SphereSpec(o, 1.0), ann));
  EXPECT_TRUE(admissible(SphereSpec(o, 2.9), ann));
  EXPECT_FALSE(admissible(SphereSpec(o, 0.4), ann));
  EXPECT_FALSE(admissible(SphereSpec(o, 3.1), ann));
}

TEST(Admissible, BruteForceNearestPoint) {
  // Sample the ball densely, keep points on S_s(x), and find the one nearest the origin.
  const PointBall x = PointBall::at_distance(0.3, std::vector<double>{1.0, 0.0});
  const double s = 1.0;
  double nearest = 1e9;
  const int m = 1200;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const double u = -0.99 + 1.98 * a / (m - 1), v = -0.99 + 1.98 * b / (m - 1);
      if (u * u + v * v >= 0.999) continue;
      const PointBall y({u, v});
      if (std::abs(hyperbolic_distance(x, y) - s) < 5e-3) nearest = std::min(nearest, hyperbolic_distance(PointBall::origin(2), y));
    }
  EXPECT_NEAR(nearest, 0.7, 1e-2);
  EXPECT_LE(nearest, 0.8);
  EXPECT_FALSE(admissible(SphereSpec(x, s), AnnulusSpec::unbounded(0.8)));
  EXPECT_TRUE(admissible(SphereSpec(x, s), AnnulusSpec::unbounded(0.65)));
}

TEST(Admissible, UnboundedOuterRadius) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const PointBall x = random_point(rng, 3, 0.95);
    const double r = 0.5, d0 = hyperbolic_distance(PointBall::origin(3), x);
    EXPECT_TRUE(admissible(SphereSpec(x, r + d0 + 1e-6), AnnulusSpec::unbounded(r)));
  }
}

TEST(Admissible, RotationInvariant) {
  const double c = std::cos(0.9), s = std::sin(0.9);
  const AnnulusSpec ann(0.5, 4.0);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const PointBall x = random_point(rng, 2, 0.8);
    const PointBall qx({c * x[0] - s * x[1], s * x[0] + c * x[1]});
    const double rad = 0.3 + 0.03 * t;
    EXPECT_EQ(admissible(SphereSpec(x, rad), ann), admissible(SphereSpec(qx, rad), ann));
  }
}

TEST(AnnulusSpec, Validation) {
  EXPECT_THROW(AnnulusSpec(1.0, 0.5), std::invalid_argument);
  EXPECT_THROW(AnnulusSpec(-0.1, std::nullopt), std::invalid_argument);
  EXPECT_FALSE(AnnulusSpec::unbounded(1.0).bounded());
  EXPECT_THROW(SphereSpec(PointBall::origin(2), 0.0), std::invalid_argument);
}

TEST(Stereographic, OriginAndRoundTrip) {
  const auto eta0 = stereographic(PointBall::origin(3));
  EXPECT_EQ(eta0, (std::vector<double>{0.0, 0.0, 0.0, -1.0}));
  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    const PointBall x = random_point(rng, 3, 0.99);
    const auto eta = stereographic(x);
    double len = 0.0;
    for (double e : eta) len += e * e;
    EXPECT_NEAR(len, 1.0, 1e-14);
    const PointBall back = inverse_stereographic(eta);
    for (int i = 0; i < 3; ++i) EXPECT_NEAR(back[i], x[i], 1e-14);
  }
  EXPECT_THROW(inverse_stereographic(std::vector<double>{0.6, 0.0, 0.8}), std::domain_error);
  EXPECT_THROW(inverse_stereographic(std::vector<double>{1.0, 0.0, 0.0}), std::domain_error);
}
