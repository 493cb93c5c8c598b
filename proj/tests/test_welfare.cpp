#include <cmath>

#include <gtest/gtest.h>

#include "omg/games.hpp"
#include "omg/quadrature.hpp"
#include "omg/welfare.hpp"

using namespace omg;

TEST(Quadrature, ExactForOddDegree) {
  for (int n : {2, 4, 8, 16, 32}) {
    const int k = 2 * n - 1;
    const double got = integrate([k](double t) { return std::pow(t, k); }, 0.0, 1.0, n);
    EXPECT_NEAR(got, 1.0 / (k + 1), 1e-14) << "n=" << n;
  }
}

TEST(Quadrature, WeightsSumToOneAndNodesAscend) {
  const GaussRule r = gauss_legendre(16);
  double s = 0;
  for (double w : r.weights) s += w;
  EXPECT_NEAR(s, 1.0, 1e-15);
  for (std::size_t i = 1; i < r.nodes.size(); ++i) EXPECT_LT(r.nodes[i - 1], r.nodes[i]);
}

TEST(PathIntegral, CounterexampleMatchesCubic) {
  const GameMap m = make_counterexample();
  const Vec o{0, 0};
  for (const Vec& x : sample_region(m.region, 200, 8)) {
    // F is homogeneous of degree two, so the integral is <F(x), x> / 3.
    const Vec f = m.eval(x);
    const double oracle = (f[0] * x[0] + f[1] * x[1]) / 3.0;
    EXPECT_NEAR(path_integral(m, o, x).value, oracle, 1e-13);
    EXPECT_NEAR(counterexample_loss(x[0], x[1]), oracle, 1e-13);
  }
}

TEST(PathIntegral, AffineExampleValue) {
  // F = (y + 1, -x) from (0, 0) to (-1, 1): <F(v(t)), (-1, 1)> = -1 for every t.
  const Matrix A{{0, 1}, {-1, 0}};
  const Vec b{1, 0};
  const auto pl = affine_path_loss(A, b, Vec{0, 0}, Vec{-1, 1});
  EXPECT_EQ(pl.method, PathMethod::kAffineClosedForm);
  EXPECT_NEAR(pl.value, -1.0, 1e-15);
}

TEST(PathIntegral, ClosedFormAgreesWithQuadrature) {
  CounterRng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix R(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) R(i, j) = rng.normal();
    const Matrix A = R.transpose() * R + Matrix{{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}};
    const Vec b{rng.normal(), rng.normal(), rng.normal()};
    const auto m = make_affine_map("psd", A, b, FeasibleRegion::cube(3, -2, 2));
    const Vec o{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
    const Vec x{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
    const double exact = affine_path_loss(A, b, o, x).value;
    const double quad = path_integral(m, o, x).value;
    EXPECT_NEAR(exact, quad, 1e-11 * (1 + std::abs(exact)));
  }
}

TEST(PathIntegral, WarnsWhenSymmetricPartIsIndefinite) {
  const auto pl = affine_path_loss(Matrix{{-1, 0}, {0, 1}}, Vec{0, 0}, Vec{0, 0}, Vec{1, 1});
  EXPECT_FALSE(pl.warning.empty());
  const auto ok = affine_path_loss(Matrix::identity(2), Vec{0, 0}, Vec{0, 0}, Vec{1, 1});
  EXPECT_TRUE(ok.warning.empty());
}

TEST(PathIntegral, DegenerateSegmentReturnsOffset) {
  const GameMap m = make_counterexample();
  const Vec p{0.3, 0.4};
  EXPECT_EQ(path_integral(m, p, p, 16, 2.5).value, 2.5);
}

TEST(PathIntegral, OutsideRegionRejected) {
  EXPECT_THROW(path_integral(make_counterexample(), Vec{0, 0}, Vec{2, 0}), std::domain_error);
}

TEST(Sandwich, BracketsMonotoneIntegral) {
  const GameMap m = make_counterexample();
  const auto pts = sample_region(m.region, 100, 2);
  for (std::size_t i = 0; i + 1 < pts.size(); i += 2) {
    const auto [lo, hi] = sandwich_bounds(m, pts[i], pts[i + 1]);
    const double v = path_integral(m, pts[i], pts[i + 1]).value;
    EXPECT_LE(lo, v + 1e-12);
    EXPECT_GE(hi, v - 1e-12);
  }
}

TEST(Triangle, Area) {
  EXPECT_DOUBLE_EQ(triangle_area(Vec{0, 0}, Vec{1, 0}, Vec{0, 1}), 0.5);
  EXPECT_DOUBLE_EQ(triangle_area(Vec{0, 0, 0}, Vec{2, 0, 0}, Vec{0, 0, 3}), 3.0);
  EXPECT_EQ(triangle_area(Vec{0, 0}, Vec{1, 1}, Vec{2, 2}), 0.0);
}

TEST(Regret, RotationLoopStaysInsideBand) {
  // F = (-y, x) is tangent to circles about o, so both legs from o vanish and
  // the u -> x leg carries <(-t, 1 - t), (-1, 1)> = 1.
  const auto m = make_affine_map("rot", Matrix{{0, -1}, {1, 0}}, Vec{0, 0}, FeasibleRegion::cube(2, -1, 1));
  const Vec o{0, 0}, u{1, 0}, x{0, 1};
  const auto r = regret_pair(m, o, x, u);
  EXPECT_NEAR(r.regret1_exact - r.regret2_exact, 1.0, 1e-14);

  ConstantsEstimate c;
  c.beta = 1.0;
  c.gamma = 0.0;
  c.L = 1.0;
  const double band = stokes_band(c, o, x, u);
  EXPECT_NEAR(band, std::sqrt(2.0), 1e-15);
  EXPECT_LE(std::abs(r.regret1_exact - r.regret2_exact), band);
  EXPECT_LE(std::abs(r.regret1_exact - r.regret2_exact), r.stokes_band);
}

TEST(Regret, ConservativeFieldHasEqualRegrets) {
  const auto m = make_affine_map("grad", Matrix{{2, 1}, {1, 3}}, Vec{0.5, -1}, FeasibleRegion::cube(2, -1, 1));
  const auto pts = sample_region(m.region, 30, 5);
  for (std::size_t i = 0; i + 2 < pts.size(); i += 3) {
    const auto r = regret_pair(m, pts[i], pts[i + 1], pts[i + 2]);
    EXPECT_NEAR(r.regret1_exact, r.regret2_exact, 1e-12);
    // Monotone F: the linear bound dominates the exact regret.
    EXPECT_GE(r.regret1_bound, r.regret1_exact - 1e-12);
  }
}

TEST(Welfare, CournotDecomposition) {
  CournotParams p;
  p.a = 3;
  p.b = 1;
  p.kappa = {0.5, 1.0, 0.0};
  const GameMap m = make_cournot(p);
  const Vec o{0.2, 0.1, 0.4}, x{1.0, 0.5, 0.7};
  const auto w = welfare_and_decomposition(m, o, x);
  EXPECT_NEAR(w.W_auto, w.W - w.W_o - w.cross_terms, 1e-8);
  EXPECT_NEAR(w.W_auto, cournot_auto_welfare(p, o, x), 1e-10);
}

TEST(Welfare, RequiresPlayers) {
  const auto m = make_affine_map("a", Matrix::identity(2), Vec{0, 0}, FeasibleRegion::cube(2, -1, 1));
  EXPECT_THROW(welfare_and_decomposition(m, Vec{0, 0}, Vec{1, 1}), std::invalid_argument);
}

TEST(Minimax, LossIsSaddleDifference) {
  const SaddleFn V = [](std::span<const double> a, std::span<const double> b) {
    return a[0] * a[0] + 2 * a[0] * b[0] - b[0] * b[0];
  };
  const Vec o1{0.5}, o2{-1}, x1{1}, x2{2};
  const auto pl = minimax_path_loss(V, o1, o2, x1, x2);
  EXPECT_EQ(pl.method, PathMethod::kMinimaxClosedForm);
  EXPECT_DOUBLE_EQ(pl.value, V(x1, o2) - V(o1, x2));

  // Same quantity by quadrature of F = (dV/da, -dV/db) = (2a + 2b, -2a + 2b).
  const auto m = make_affine_map("saddle", Matrix{{2, 2}, {-2, 2}}, Vec{0, 0}, FeasibleRegion::cube(2, -3, 3));
  EXPECT_NEAR(path_integral(m, Vec{0.5, -1}, Vec{1, 2}).value, pl.value, 1e-12);
}
