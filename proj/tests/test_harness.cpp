#include <cmath>
#include <cstdlib>
#include <limits>

#include <gtest/gtest.h>

#include "omg/harness.hpp"

using namespace omg;

namespace {

MlnInstance fake_instance(Vec x_star) {
  MlnInstance m;
  m.n = x_star.size();
  m.equilibrium.x_star = std::move(x_star);
  return m;
}

MlnInstance shifted_identity(Vec target) {
  MlnInstance m;
  m.n = target.size();
  m.A = Matrix::identity(m.n);
  m.b = scale(-1.0, target);
  m.map = make_affine_map("shift", m.A, m.b, FeasibleRegion::nonneg_orthant(m.n));
  m.equilibrium.x_star = target;
  return m;
}

}  // namespace

TEST(Adversary, PicksFarthestWithLowestIndexOnTies) {
  std::vector<MlnInstance> pool{fake_instance({1, 0}), fake_instance({0, 1}), fake_instance({-1, 0}),
                                fake_instance({0, 0})};
  EXPECT_EQ(farthest_equilibrium_adversary(pool, Vec{0, 0}), 0u);  // three at distance 1
  EXPECT_EQ(farthest_equilibrium_adversary(pool, Vec{1, 0}), 2u);
  EXPECT_EQ(farthest_equilibrium_adversary(pool, Vec{0, -3}), 1u);
}

TEST(Adversary, SingleInstanceAndCoincidentPoint) {
  std::vector<MlnInstance> one{fake_instance({2, 2})};
  EXPECT_EQ(farthest_equilibrium_adversary(one, Vec{2, 2}), 0u);
  EXPECT_THROW(farthest_equilibrium_adversary({}, Vec{0, 0}), std::invalid_argument);
}

TEST(UT, AveragedNetworkEquilibrium) {
  const std::vector<MlnInstance> pool{shifted_identity({2, 0}), shifted_identity({0, 2})};
  const auto r = approximate_uT(pool);
  EXPECT_NEAR(r.x_star[0], 1.0, 1e-9);
  EXPECT_NEAR(r.x_star[1], 1.0, 1e-9);

  const std::vector<MlnInstance> same{make_mln(5), make_mln(5)};
  const auto s = approximate_uT(same);
  for (std::size_t i = 0; i < s.x_star.size(); ++i) EXPECT_NEAR(s.x_star[i], same[0].equilibrium.x_star[i], 1e-8);
}

TEST(Pool, SeedsAreConsecutive) {
  const auto pool = mln_pool(2, 3);
  ASSERT_EQ(pool.size(), 3u);
  EXPECT_EQ(pool[0].seed, 6u);
  EXPECT_EQ(pool[2].seed, 8u);
  EXPECT_EQ(pool[1].A, make_mln(7).A);
}

TEST(Fig4, ShortRunShapeAndDeterminism) {
  ExperimentConfig cfg;
  cfg.T = 60;
  cfg.pool_size = 4;
  const RegretTrace a = run_fig4(cfg, 1);
  const RegretTrace b = run_fig4(cfg, 1);
  ASSERT_EQ(a.steps.size(), 60u);
  EXPECT_EQ(trace_csv(a), trace_csv(b));
  EXPECT_EQ(a.u_method, "averaged_equilibrium");
  EXPECT_LT(a.u_residual, 1e-9);
  EXPECT_DOUBLE_EQ(a.eta, default_eta(a.B, a.L, 60));
  const Fig4Check c = check_fig4(a, 60);
  EXPECT_TRUE(c.rows_match_T);
  EXPECT_TRUE(c.band());
  EXPECT_TRUE(c.envelope());
  for (const auto& s : a.steps) EXPECT_LT(s.game_idx, 4u);

  const std::string csv = trace_csv(a);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "t,game_idx,regret1,regret2,regret1_bound,band,avg_regret1,avg_regret2");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 61);
}

TEST(Fig4, SweepFollowsSeedOrder) {
  ExperimentConfig cfg;
  cfg.T = 20;
  cfg.pool_size = 3;
  cfg.seeds = {4, 2, 9};
  cfg.jobs = 3;
  const auto traces = run_fig4_sweep(cfg);
  ASSERT_EQ(traces.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(traces[i].seed, cfg.seeds[i]);
    EXPECT_EQ(trace_csv(traces[i]), trace_csv(run_fig4(cfg, cfg.seeds[i])));
  }
}

TEST(Fig4, CheckDetectsMissingRowsAndBandBreach) {
  RegretTrace tr;
  tr.B = 1;
  tr.L = 1;
  for (std::size_t t = 1; t <= 3; ++t) {
    TraceStep s;
    s.t = t;
    s.avg_regret1 = 1.0;
    s.avg_regret2 = t == 2 ? 0.0 : 1.0;
    tr.steps.push_back(s);
  }
  const Fig4Check c = check_fig4(tr, 4);
  EXPECT_FALSE(c.rows_match_T);
  EXPECT_EQ(c.band_violations, 1u);
  EXPECT_EQ(c.first_band_violation, 2u);
  EXPECT_FALSE(c.decay());
  EXPECT_FALSE(c.passed());
}

TEST(Single, FixedGameSettlesAtEquilibrium) {
  const auto m = make_affine_map("a", Matrix{{1, 0.5}, {-0.5, 1}}, Vec{-0.5, 0.25}, FeasibleRegion::cube(2, -1, 1));
  ExperimentConfig cfg;
  cfg.T = 400;
  cfg.learner = LearnerKind::kOmod;
  const RegretTrace tr = run_single(m, cfg);
  EXPECT_EQ(tr.u_method, "equilibrium");
  EXPECT_DOUBLE_EQ(tr.B, std::sqrt(2.0));
  ASSERT_EQ(tr.steps.size(), 400u);
  EXPECT_LT(distance(tr.steps.back().x, tr.u_T), 1e-3);
}

TEST(Output, FormatDoubleRoundTrips) {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, std::numeric_limits<double>::denorm_min()}) {
    EXPECT_EQ(std::strtod(format_double(v).c_str(), nullptr), v);
  }
  EXPECT_EQ(format_double(0.5), "0.5");
}

TEST(Output, RootFollowsEnvironment) {
  ::setenv("MG_OUT_DIR", "/tmp/omg_env_root", 1);
  EXPECT_EQ(output_root(), std::filesystem::path("/tmp/omg_env_root"));
  ::setenv("MG_OUT_DIR", "", 1);
  EXPECT_EQ(output_root(), std::filesystem::path("out"));
  ::unsetenv("MG_OUT_DIR");
  EXPECT_EQ(output_root(), std::filesystem::path("out"));
}

TEST(Output, WriteTextCreatesDirectoriesAndReportsFailure) {
  const auto dir = std::filesystem::temp_directory_path() / "omg_harness_test" / "nested";
  std::filesystem::remove_all(dir.parent_path());
  write_text(dir / "a.txt", "hello");
  EXPECT_TRUE(std::filesystem::exists(dir / "a.txt"));
  // A regular file cannot serve as a directory.
  EXPECT_THROW(write_text(dir / "a.txt" / "b.txt", "x"), IoError);
  std::filesystem::remove_all(dir.parent_path());
}

TEST(Table1, AllCellsMatch) {
  const Table1Result r = run_table1();
  EXPECT_TRUE(r.passed());
  ASSERT_EQ(r.reports.size(), 9u);
  // The monotone row: only c, e, g, i hold.
  const std::array<bool, 9> monotone{false, false, true, false, true, false, true, false, true};
  EXPECT_EQ(r.measured[2], monotone);
  const std::string text = table1_text(r);
  EXPECT_NE(text.find("socially_convex"), std::string::npos);
}

TEST(RegretBound, BoundValueAndScaling) {
  RegretBoundConfig cfg;
  cfg.random_sequences = 3;
  cfg.comparator_samples = 10;
  const auto r100 = run_regret_bound(cfg);
  EXPECT_DOUBLE_EQ(r100.bound, std::sqrt(200.0));
  EXPECT_DOUBLE_EQ(r100.eta, 1.0 / std::sqrt(200.0));
  EXPECT_TRUE(r100.within_bound());
  EXPECT_GE(r100.measured_max, r100.sign_flip);
  cfg.T = 400;
  EXPECT_DOUBLE_EQ(run_regret_bound(cfg).bound, 2.0 * r100.bound);
}

TEST(RegretBound, SignFlipStructure) {
  const double eta = 0.1;
  const auto z = sign_flip_sequence(50, 3, 1.0, 2.0, eta);
  ASSERT_EQ(z.size(), 50u);
  const std::size_t K = 5;  // round(B / (eta L))
  for (std::size_t t = 0; t < z.size(); ++t) {
    ASSERT_EQ(z[t].size(), 3u);
    EXPECT_EQ(z[t][1], 0.0);
    EXPECT_EQ(std::abs(z[t][0]), 2.0);
    if (t >= 50 - K) EXPECT_EQ(z[t][0], 2.0) << t;
  }
  EXPECT_EQ(z[0][0], -z[1][0]);
}

TEST(RegretBound, LinearRegretOracle) {
  std::vector<StepRecord> tr(2);
  tr[0].x_t = {1, 0};
  tr[0].z_t = {1, 1};
  tr[1].x_t = {0, 1};
  tr[1].z_t = {2, -1};
  // sum <z, x> = 1 - 1 = 0 and Z = (3, 0).
  EXPECT_DOUBLE_EQ(linear_regret(tr, Vec{1, 0}), -3.0);
  EXPECT_DOUBLE_EQ(best_linear_regret(tr, 2.0), 6.0);
}

TEST(Config, ParsesAndRejects) {
  const auto c = config_from_json(Json::parse(R"({"experiment":"fig4","T":50,"seeds":[1,2],
      "learner":{"kind":"omod","eta":0.01},"jobs":2})"));
  EXPECT_EQ(c.T, 50u);
  EXPECT_EQ(c.seeds, (std::vector<std::uint64_t>{1, 2}));
  EXPECT_EQ(c.learner, LearnerKind::kOmod);
  ASSERT_TRUE(c.eta.has_value());
  EXPECT_DOUBLE_EQ(*c.eta, 0.01);
  EXPECT_EQ(config_from_json(to_json(c)).T, 50u);

  EXPECT_FALSE(config_from_json(Json::parse(R"({"eta":"auto"})")).eta.has_value());
  EXPECT_THROW(config_from_json(Json::parse(R"({"bogus":1})")), std::invalid_argument);
  EXPECT_THROW(config_from_json(Json::parse(R"({"experiment":"fig5"})")), std::invalid_argument);
  EXPECT_THROW(config_from_json(Json::parse(R"({"T":0})")), std::invalid_argument);
  EXPECT_THROW(config_from_json(Json::parse(R"({"seeds":[]})")), std::invalid_argument);
  EXPECT_THROW(config_from_json(Json::parse(R"({"learner":"sgd"})")), std::invalid_argument);
  EXPECT_THROW(config_from_json(Json::parse(R"({"experiment":"custom"})")), std::invalid_argument);
}

TEST(Counterexample, ReportValues) {
  const CounterexampleReport r = run_counterexample(300, 0);
  EXPECT_TRUE(r.monotone());
  EXPECT_TRUE(r.loss_matches());
  EXPECT_NEAR(r.f_x0, counterexample_loss(0.0, 0.8), 1e-14);
  EXPECT_NEAR(r.f_xf, counterexample_loss(0.5, 0.45), 1e-14);
  EXPECT_NEAR(r.mid[0], 0.25, 1e-15);
  EXPECT_NEAR(r.mid[1], 0.625, 1e-15);
  EXPECT_NEAR(r.f_mid, counterexample_loss(0.25, 0.625), 1e-14);
  EXPECT_TRUE(r.quasi_convexity_violated());
  EXPECT_TRUE(r.passed());
}
