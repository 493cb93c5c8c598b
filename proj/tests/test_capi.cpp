// Exercises the shared library through its C header only.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <thread>

#include <gtest/gtest.h>

#include "omg/omg.h"

namespace {

struct Game {
  omg_game* g = nullptr;
  ~Game() { omg_game_free(g); }
};

std::string take(char* s) {
  std::string out = s != nullptr ? s : "";
  omg_string_free(s);
  return out;
}

}  // namespace

TEST(CApi, CreateEvaluateFree) {
  Game c;
  ASSERT_EQ(omg_game_create_builtin("counterexample", nullptr, &c.g), OMG_OK);
  size_t n = 0;
  ASSERT_EQ(omg_game_dimension(c.g, &n), OMG_OK);
  EXPECT_EQ(n, 2u);
  const double x[2] = {0.5, 0.25};
  double f[2];
  ASSERT_EQ(omg_game_evaluate(c.g, x, 2, f), OMG_OK);
  // (r^2 + 2rc + c^2, -2r^2 + 2rc + c^2) at (1/2, 1/4)
  EXPECT_DOUBLE_EQ(f[0], 0.5625);
  EXPECT_DOUBLE_EQ(f[1], -0.1875);
  EXPECT_STREQ(omg_last_error(), "");
}

TEST(CApi, BuiltinParametersOverride) {
  Game c;
  ASSERT_EQ(omg_game_create_builtin("cournot", R"({"a":3,"b":1,"kappa":[0,0,0]})", &c.g), OMG_OK);
  size_t n = 0;
  omg_game_dimension(c.g, &n);
  EXPECT_EQ(n, 3u);
}

TEST(CApi, InvalidArgumentsReportErrors) {
  omg_game* g = nullptr;
  EXPECT_EQ(omg_game_create_builtin("not_a_game", nullptr, &g), OMG_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(g, nullptr);
  EXPECT_NE(std::string(omg_last_error()).find("not_a_game"), std::string::npos);
  EXPECT_EQ(omg_game_create_builtin(nullptr, nullptr, &g), OMG_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(omg_game_create_json("{not json", &g), OMG_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(omg_game_create_builtin("cournot", R"({"zzz":1})", &g), OMG_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(omg_game_create_builtin("cournot", R"({"a":-1})", &g), OMG_ERR_INVALID_ARGUMENT);
  size_t n;
  EXPECT_EQ(omg_game_dimension(nullptr, &n), OMG_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(omg_certify(nullptr, 10, 0, nullptr, nullptr), OMG_ERR_INVALID_ARGUMENT);
}

TEST(CApi, LastErrorIsPerThread) {
  omg_game* g = nullptr;
  ASSERT_EQ(omg_game_create_builtin("nope", nullptr, &g), OMG_ERR_INVALID_ARGUMENT);
  std::string other;
  std::thread([&] { other = omg_last_error(); }).join();
  EXPECT_EQ(other, "");
  EXPECT_NE(std::string(omg_last_error()), "");
}

TEST(CApi, DimensionMismatchAndDomain) {
  Game c;
  ASSERT_EQ(omg_game_create_builtin("counterexample", nullptr, &c.g), OMG_OK);
  const double x[3] = {0.1, 0.2, 0.3};
  double f[3];
  EXPECT_EQ(omg_game_evaluate(c.g, x, 3, f), OMG_ERR_INVALID_ARGUMENT);
  const double o[2] = {0, 0}, far[2] = {2, 0};
  double v = 0;
  EXPECT_EQ(omg_path_loss(c.g, o, far, 2, 0, &v, nullptr, nullptr), OMG_ERR_DOMAIN);
}

TEST(CApi, PathLossValuesAndMethods) {
  Game c, gtd;
  ASSERT_EQ(omg_game_create_builtin("counterexample", nullptr, &c.g), OMG_OK);
  const double o[2] = {0, 0}, x[2] = {1, 1};
  double v = 0;
  const char* method = nullptr;
  ASSERT_EQ(omg_path_loss(c.g, o, x, 2, 0, &v, &method, nullptr), OMG_OK);
  EXPECT_NEAR(v, 5.0 / 3.0, 1e-14);
  EXPECT_STREQ(method, "quadrature");

  ASSERT_EQ(omg_game_create_builtin("gtd", nullptr, &gtd.g), OMG_OK);
  const double go[2] = {0, 0}, gx[2] = {1, 0};
  char* report = nullptr;
  ASSERT_EQ(omg_path_loss(gtd.g, go, gx, 2, 0, &v, &method, &report), OMG_OK);
  EXPECT_DOUBLE_EQ(v, 0.5);  // M = 1, y from 0 to 1
  EXPECT_STREQ(method, "affine_closed_form");
  EXPECT_NE(take(report).find("affine_closed_form"), std::string::npos);
}

TEST(CApi, VennBNotMonotone) {
  Game c;
  ASSERT_EQ(omg_game_create_builtin("venn_b", nullptr, &c.g), OMG_OK);
  omg_verdict verdict = OMG_VERDICT_MONOTONE;
  char* report = nullptr;
  ASSERT_EQ(omg_certify(c.g, 500, 0, &verdict, &report), OMG_OK);
  EXPECT_EQ(verdict, OMG_VERDICT_NOT_MONOTONE);
  EXPECT_NE(take(report).find("witness"), std::string::npos);
}

TEST(CApi, SpecJsonRoundTrip) {
  Game a, b;
  ASSERT_EQ(omg_game_create_builtin("resource_alloc", R"({"beta":2})", &a.g), OMG_OK);
  char* s = nullptr;
  ASSERT_EQ(omg_game_spec_json(a.g, &s), OMG_OK);
  const std::string spec = take(s);
  ASSERT_EQ(omg_game_create_json(spec.c_str(), &b.g), OMG_OK);
  ASSERT_EQ(omg_game_spec_json(b.g, &s), OMG_OK);
  EXPECT_EQ(take(s), spec);
}

TEST(CApi, EquilibriumOfResourceAllocation) {
  Game c;
  ASSERT_EQ(omg_game_create_builtin("resource_alloc", R"({"alpha":[1,1]})", &c.g), OMG_OK);
  double x[2];
  ASSERT_EQ(omg_equilibrium(c.g, 1e-10, 100000, x, 2, nullptr), OMG_OK);
  EXPECT_NEAR(x[0], 0.25, 1e-8);
  EXPECT_NEAR(x[1], 0.25, 1e-8);
}

TEST(CApi, RunOnlineCsv) {
  Game c;
  ASSERT_EQ(omg_game_create_builtin("gtd", nullptr, &c.g), OMG_OK);
  char* csv = nullptr;
  char* summary = nullptr;
  ASSERT_EQ(omg_run_online(c.g, OMG_LEARNER_OMOD, 0.0, 30, 0, &csv, &summary), OMG_OK);
  const std::string text = take(csv);
  EXPECT_EQ(text.rfind("t,game_idx,", 0), 0u);
  size_t lines = 0;
  for (char ch : text) lines += ch == '\n';
  EXPECT_EQ(lines, 31u);
  EXPECT_NE(take(summary).find("\"eta_mode\": \"auto\""), std::string::npos);
  EXPECT_EQ(omg_run_online(c.g, OMG_LEARNER_OMOD, 0.0, 0, 0, nullptr, nullptr), OMG_ERR_INVALID_ARGUMENT);
}

TEST(CApi, ReproduceRejectsUnknownSuite) {
  int passed = 1;
  EXPECT_EQ(omg_reproduce("fig5", 0, 1, nullptr, &passed, nullptr), OMG_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(omg_reproduce(nullptr, 0, 1, nullptr, &passed, nullptr), OMG_ERR_INVALID_ARGUMENT);
}

TEST(CApi, ReproduceWritesArtifacts) {
  const auto dir = std::filesystem::temp_directory_path() / "omg_capi_counterexample";
  std::filesystem::remove_all(dir);
  int passed = 0;
  char* report = nullptr;
  ASSERT_EQ(omg_reproduce("counterexample", 0, 1, dir.c_str(), &passed, &report), OMG_OK);
  EXPECT_EQ(passed, 1);
  take(report);
  EXPECT_TRUE(std::filesystem::exists(dir / "counterexample" / "summary.json"));
  std::filesystem::remove_all(dir);
}

TEST(CApi, UnwritableOutputIsAnIoError) {
  // A regular file where a directory is expected.
  const auto blocker = std::filesystem::temp_directory_path() / "omg_capi_blocker";
  std::filesystem::remove_all(blocker);
  std::ofstream(blocker) << "x";
  int passed = 1;
  EXPECT_EQ(omg_reproduce("counterexample", 0, 1, (blocker / "sub").c_str(), &passed, nullptr), OMG_ERR_IO);
  EXPECT_NE(std::string(omg_last_error()), "");
  std::filesystem::remove(blocker);
}

TEST(CApi, RunConfigCustomPool) {
  const char* cfg = R"({"experiment":"custom","T":40,"learner":"omod","pool":[
    {"id":"affine","params":{"A":[[1,0],[0,1]],"b":[-0.5,0],"region":{"kind":"box","lower":[-1,-1],"upper":[1,1]}}},
    {"id":"affine","params":{"A":[[1,0.5],[-0.5,1]],"b":[0,-0.5],"region":{"kind":"box","lower":[-1,-1],"upper":[1,1]}}}]})";
  const auto dir = std::filesystem::temp_directory_path() / "omg_capi_custom";
  std::filesystem::remove_all(dir);
  int passed = 0;
  char* summary = nullptr;
  ASSERT_EQ(omg_run_config(cfg, dir.c_str(), &passed, &summary), OMG_OK) << omg_last_error();
  EXPECT_FALSE(take(summary).empty());
  std::filesystem::remove_all(dir);
}
