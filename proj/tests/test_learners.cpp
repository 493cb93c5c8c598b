#include <cmath>

#include <gtest/gtest.h>

#include "omg/games.hpp"
#include "omg/learners.hpp"

using namespace omg;

TEST(Eta, DefaultStepSize) {
  EXPECT_DOUBLE_EQ(default_eta(1, 1, 100), 1.0 / std::sqrt(200.0));
  EXPECT_DOUBLE_EQ(default_eta(2, 4, 8), 0.125);
  EXPECT_THROW(default_eta(0, 1, 10), std::invalid_argument);
  EXPECT_THROW(default_eta(1, 1, 0), std::invalid_argument);
}

TEST(Learner, RejectsBadEta) {
  const auto ball = FeasibleRegion::l2_ball(2, 1);
  EXPECT_THROW(make_learner(LearnerKind::kOgd, ball, 0.0), std::invalid_argument);
  EXPECT_THROW(make_learner(LearnerKind::kOgd, ball, -1.0), std::invalid_argument);
  EXPECT_THROW(make_learner(LearnerKind::kOgd, ball, NAN), std::invalid_argument);
}

TEST(Learner, StartsAtProjectionOfOrigin) {
  const auto s = make_learner(LearnerKind::kOmod, FeasibleRegion::cube(2, 1, 2), 0.1);
  EXPECT_EQ(s.x, (Vec{1, 1}));
  EXPECT_EQ(s.link_name(), "euclidean_box");
}

TEST(Omomd, LazyProjectionOnBall) {
  const auto ball = FeasibleRegion::l2_ball(2, 1);
  const auto m = make_affine_map("const", Matrix(2, 2, 0.0), Vec{3, 0}, FeasibleRegion::l2_ball(2, 1));
  auto s = make_learner(LearnerKind::kOmomd, ball, 1.0);
  auto [s1, r1] = omomd_step(s, m);
  EXPECT_EQ(r1.x_t, (Vec{0, 0}));
  EXPECT_EQ(r1.z_t, (Vec{3, 0}));
  EXPECT_EQ(s1.theta, (Vec{-3, 0}));
  EXPECT_EQ(s1.x, (Vec{-1, 0}));
  // The accumulator keeps growing past the boundary: one step back does not leave it.
  const auto back = make_affine_map("back", Matrix(2, 2, 0.0), Vec{-1, 0}, FeasibleRegion::l2_ball(2, 1));
  auto [s2, r2] = omomd_step(s1, back);
  EXPECT_EQ(s2.theta, (Vec{-2, 0}));
  EXPECT_EQ(s2.x, (Vec{-1, 0}));
}

TEST(Omomd, IdentityLinkIsUnconstrained) {
  const auto m = make_affine_map("const", Matrix(1, 1, 0.0), Vec{5}, FeasibleRegion::l2_ball(1, 1));
  auto s = make_learner(LearnerKind::kOmomd, FeasibleRegion::l2_ball(1, 1), 1.0, LinkKind::kIdentity);
  EXPECT_EQ(s.link_name(), "identity");
  EXPECT_EQ(omomd_step(s, m).first.x, (Vec{-5}));
}

TEST(Ogd, ProjectsUnlessRaw) {
  const auto box = FeasibleRegion::cube(1, -1, 1);
  auto s = make_learner(LearnerKind::kOgd, box, 0.5);
  s = ogd_step(s, Vec{4});
  EXPECT_EQ(s.x, (Vec{-1}));
  auto raw = make_learner(LearnerKind::kOgd, box, 0.5, LinkKind::kProjection, true);
  raw = ogd_step(raw, Vec{4});
  EXPECT_EQ(raw.x, (Vec{-2}));
  EXPECT_EQ(raw.t, 2u);
}

TEST(Ogd, KindMismatchRejected) {
  auto s = make_learner(LearnerKind::kOmod, FeasibleRegion::cube(1, -1, 1), 0.5);
  EXPECT_THROW(ogd_step(s, Vec{1}), std::invalid_argument);
}

TEST(Omod, RawStepsReproduceGtdRecursion) {
  GtdParams p;
  p.A = Matrix{{1.0, 0.2}, {-0.3, 0.8}};
  p.b = Vec{0.5, -0.25};
  p.M = Matrix{{1.0, 0.1}, {0.1, 0.7}};
  p.radius = 1e6;
  const GameMap m = make_gtd(p);
  const double alpha = 0.05;
  auto s = make_learner(LearnerKind::kOmod, m.region, alpha, LinkKind::kProjection, true);

  Vec y{0, 0}, th{0, 0};
  for (int k = 0; k < 1000; ++k) {
    std::tie(s, std::ignore) = omod_step(s, m);
    Vec ny(2), nt(2);
    for (std::size_t i = 0; i < 2; ++i) {
      double r = p.b[i];
      for (std::size_t j = 0; j < 2; ++j) r -= p.A(i, j) * th[j] + p.M(i, j) * y[j];
      ny[i] = y[i] + alpha * r;
      double g = 0;
      for (std::size_t j = 0; j < 2; ++j) g += p.A(j, i) * y[j];
      nt[i] = th[i] + alpha * g;
    }
    y = ny;
    th = nt;
  }
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_NEAR(s.x[i], y[i], 1e-12);
    EXPECT_NEAR(s.x[2 + i], th[i], 1e-12);
  }
}

TEST(RunOnline, RecordsPreviousIterateAsOrigin) {
  const auto m = make_affine_map("id", Matrix::identity(2), Vec{-1, 0.5}, FeasibleRegion::cube(2, -1, 1));
  const auto trace = run_online(make_learner(LearnerKind::kOmod, m.region, 0.3),
                                [&](std::size_t, std::span<const double>) { return MapChoice{&m, 7}; }, 25);
  ASSERT_EQ(trace.size(), 25u);
  EXPECT_EQ(trace[0].o_t, trace[0].x_t);
  for (std::size_t k = 1; k < trace.size(); ++k) {
    EXPECT_EQ(trace[k].t, k + 1);
    EXPECT_EQ(trace[k].o_t, trace[k - 1].x_t);
    EXPECT_EQ(trace[k].game_index, 7);
  }
  // Converges to the root of x + b.
  EXPECT_NEAR(trace.back().x_t[0], 1.0, 1e-3);
  EXPECT_NEAR(trace.back().x_t[1], -0.5, 1e-3);
}

TEST(RunOnline, AdversarySeesCurrentIterate) {
  const auto a = make_affine_map("a", Matrix(1, 1, 0.0), Vec{1}, FeasibleRegion::cube(1, -1, 1));
  const auto b = make_affine_map("b", Matrix(1, 1, 0.0), Vec{-1}, FeasibleRegion::cube(1, -1, 1));
  const auto trace = run_online(make_learner(LearnerKind::kOgd, a.region, 0.25),
                                [&](std::size_t, std::span<const double> x) {
                                  return x[0] >= 0 ? MapChoice{&a, 0} : MapChoice{&b, 1};
                                },
                                8);
  for (const auto& r : trace) EXPECT_EQ(r.game_index, r.x_t[0] >= 0 ? 0 : 1);
}

TEST(RunOnline, RejectsMissingMapAndZeroHorizon) {
  auto s = make_learner(LearnerKind::kOgd, FeasibleRegion::cube(1, -1, 1), 0.1);
  EXPECT_THROW(run_online(s, [](std::size_t, std::span<const double>) { return MapChoice{}; }, 3),
               std::invalid_argument);
  const auto m = make_affine_map("a", Matrix(1, 1, 0.0), Vec{1}, FeasibleRegion::cube(1, -1, 1));
  EXPECT_THROW(run_online(s, [&](std::size_t, std::span<const double>) { return MapChoice{&m, 0}; }, 0),
               std::invalid_argument);
}
