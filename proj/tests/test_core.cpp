#include <algorithm>
#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "omg/core.hpp"

using namespace omg;

TEST(Matrix, ProductAndTranspose) {
  const Matrix A{{1, 2}, {3, 4}};
  const Matrix B{{0, 1}, {1, 0}};
  EXPECT_EQ(A * B, (Matrix{{2, 1}, {4, 3}}));
  EXPECT_EQ(A.transpose(), (Matrix{{1, 3}, {2, 4}}));
  const Vec y = A * Vec{1, -1};
  EXPECT_DOUBLE_EQ(y[0], -1);
  EXPECT_DOUBLE_EQ(y[1], -1);
  EXPECT_EQ(symmetric_part(A), (Matrix{{1, 2.5}, {2.5, 4}}));
}

TEST(Matrix, PrincipalSubmatrix) {
  const Matrix A{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
  const std::vector<std::size_t> idx{0, 2};
  EXPECT_EQ(A.principal(idx), (Matrix{{1, 3}, {7, 9}}));
}

TEST(Matrix, RaggedRowsRejected) {
  EXPECT_THROW(Matrix::from_rows({{1, 2}, {3}}), std::invalid_argument);
}

TEST(Region, BallProjection) {
  const auto ball = FeasibleRegion::l2_ball(2, 1.0);
  const Vec p = ball.project(Vec{3, 4});
  EXPECT_NEAR(p[0], 0.6, 1e-15);
  EXPECT_NEAR(p[1], 0.8, 1e-15);
  EXPECT_TRUE(ball.contains(p));
  const Vec inside{0.1, -0.2};
  EXPECT_EQ(ball.project(inside), inside);
}

TEST(Region, BoxAndOrthantProjection) {
  const auto box = FeasibleRegion::box({0, -1}, {1, 1});
  EXPECT_EQ(box.project(Vec{2, -3}), (Vec{1, -1}));
  const auto orth = FeasibleRegion::nonneg_orthant(3);
  EXPECT_EQ(orth.project(Vec{-1, 2, 0}), (Vec{0, 2, 0}));
  EXPECT_FALSE(orth.bounded());
}

TEST(Region, ProjectionIsIdempotentAndNearest) {
  CounterRng rng(11, 0);
  const auto ball = FeasibleRegion::l2_ball(3, 2.0);
  const auto box = FeasibleRegion::cube(3, -1, 0.5);
  for (int k = 0; k < 200; ++k) {
    Vec x{rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5)};
    for (const auto* r : {&ball, &box}) {
      const Vec p = r->project(x);
      EXPECT_TRUE(r->contains(p));
      EXPECT_EQ(r->project(p), p);
      // No sampled feasible point is closer than the projection.
      for (const Vec& q : sample_region(*r, 20, k, 9)) EXPECT_GE(distance(x, q) + 1e-12, distance(x, p));
    }
  }
}

TEST(Region, InvalidConstruction) {
  EXPECT_THROW(FeasibleRegion::box({1}, {0}), std::invalid_argument);
  EXPECT_THROW(FeasibleRegion::l2_ball(2, -1), std::invalid_argument);
}

TEST(Spectrum, KnownEigenvalues) {
  const Vec e = symmetric_eigenvalues(Matrix{{2, 1}, {1, 2}});
  ASSERT_EQ(e.size(), 2u);
  EXPECT_NEAR(e[0], 1.0, 1e-14);
  EXPECT_NEAR(e[1], 3.0, 1e-14);
}

TEST(Spectrum, RotatedDiagonal) {
  // Q' D Q with a rotation Q built by hand has spectrum D.
  const double c = std::cos(0.7), s = std::sin(0.7);
  const Matrix Q{{c, -s, 0}, {s, c, 0}, {0, 0, 1}};
  const Matrix D = Matrix::diagonal(Vec{-2.0, 0.5, 4.0});
  const Vec e = symmetric_eigenvalues(Q.transpose() * D * Q);
  EXPECT_NEAR(e[0], -2.0, 1e-12);
  EXPECT_NEAR(e[1], 0.5, 1e-12);
  EXPECT_NEAR(e[2], 4.0, 1e-12);
}

TEST(Spectrum, SymmetrizesBeforeSolving) {
  const SpectrumReport r = sym_spectrum(Matrix{{0, 1}, {-1, 0}});
  EXPECT_NEAR(r.min_eig, 0.0, 1e-15);
  EXPECT_NEAR(r.max_eig, 0.0, 1e-15);
  EXPECT_THROW(sym_spectrum(Matrix{{NAN, 0}, {0, 1}}), std::domain_error);
}

TEST(Spectrum, SpectralNorm) {
  EXPECT_NEAR(spectral_norm(Matrix::diagonal(Vec{3, -5})), 5.0, 1e-12);
  EXPECT_NEAR(spectral_norm(Matrix{{0, 2}, {0, 0}}), 2.0, 1e-12);
}

TEST(Rng, DeterministicPerSeedAndStream) {
  CounterRng a(5, 1), b(5, 1), c(5, 2);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next_u64();
    EXPECT_EQ(x, b.next_u64());
    differs |= x != c.next_u64();
  }
  EXPECT_TRUE(differs);
}

TEST(Rng, MomentsAreSane) {
  CounterRng r(42);
  double su = 0, sn = 0, sn2 = 0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const double u = r.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    su += u;
    const double z = r.normal();
    sn += z;
    sn2 += z * z;
  }
  EXPECT_NEAR(su / n, 0.5, 0.01);
  EXPECT_NEAR(sn / n, 0.0, 0.02);
  EXPECT_NEAR(sn2 / n, 1.0, 0.03);
}

TEST(Sampling, PointsLieInRegion) {
  for (const auto& r : {FeasibleRegion::l2_ball(4, 3.0), FeasibleRegion::cube(2, -2, 2),
                        FeasibleRegion::nonneg_orthant(3)}) {
    const auto pts = sample_region(r, 500, 3);
    ASSERT_EQ(pts.size(), 500u);
    for (const Vec& p : pts) EXPECT_TRUE(r.contains(p));
  }
}

TEST(Sampling, BallSamplesFillTheVolume) {
  // For the uniform law on the unit disc, P(|x| < 1/2) = 1/4.
  const auto pts = sample_region(FeasibleRegion::l2_ball(2, 1.0), 20000, 1);
  const auto inner = std::count_if(pts.begin(), pts.end(), [](const Vec& p) { return norm(p) < 0.5; });
  EXPECT_NEAR(static_cast<double>(inner) / 20000.0, 0.25, 0.015);
}

TEST(Region, BoundingBoxPadsDegenerateAxes) {
  const auto box = bounding_box({{0, 1}, {2, 1}});
  EXPECT_EQ(box.lower()[0], 0);
  EXPECT_EQ(box.upper()[0], 2);
  EXPECT_GT(box.upper()[1] - box.lower()[1], 0);
}
