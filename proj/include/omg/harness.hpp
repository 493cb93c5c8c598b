// Copyright 2026 The OMG Authors.
// SPDX-License-Identifier: Apache-2.0

// Reproducible experiments: the adversarial MLN run, the property table, the
// regret-bound sweep and the counterexample suite, plus CSV / JSON emission.

#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "omg/games.hpp"
#include "omg/learners.hpp"
#include "omg/spec_json.hpp"

namespace omg {

// ---------------------------------------------------------------------------
// Output

/// $MG_OUT_DIR when set and non-empty, else ./out.
std::filesystem::path output_root();

/// printf("%.17g").
std::string format_double(double v);

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Writes the file, creating parent directories. Throws IoError.
void write_text(const std::filesystem::path& path, const std::string& content);

// ---------------------------------------------------------------------------
// Configuration

struct ExperimentConfig {
  std::string experiment = "fig4";  // fig4, table1, regret_bound, custom
  std::size_t T = 1000;
  std::vector<std::uint64_t> seeds{0};
  LearnerKind learner = LearnerKind::kOmomd;
  std::optional<double> eta;   // auto when empty
  std::vector<GameSpec> pool;  // custom runs; fig4 builds its MLN pool per seed
  std::size_t pool_size = 10;
  int nodes = kDefaultNodes;
  std::string output;  // directory; empty means output_root()
  std::size_t jobs = 1;
};

ExperimentConfig config_from_json(const Json& j);
Json to_json(const ExperimentConfig& c);

// ---------------------------------------------------------------------------
// Online regret traces

struct TraceStep {
  std::size_t t = 0;
  std::size_t game_idx = 0;
  double regret1 = 0.0;
  double regret2 = 0.0;
  double regret1_bound = 0.0;
  double band = 0.0;
  double avg_regret1 = 0.0;
  double avg_regret2 = 0.0;
  Vec x;
};

struct RegretTrace {
  std::vector<TraceStep> steps;
  Vec u_T;
  std::string u_method = "averaged_equilibrium";
  double u_residual = 0.0;
  LearnerKind learner = LearnerKind::kOmomd;
  double eta = 0.0;
  bool auto_eta = true;
  double B = 0.0;
  double L = 0.0;
  std::uint64_t seed = 0;
};

/// MLN seeds pool_seed * size ... pool_seed * size + size - 1.
std::vector<MlnInstance> mln_pool(std::uint64_t pool_seed, std::size_t size = 10);

/// argmax_k |x*_k - x|, ties to the lowest index.
std::size_t farthest_equilibrium_adversary(const std::vector<MlnInstance>& pool, std::span<const double> x);

/// Equilibrium of the network with averaged A and b. Throws std::runtime_error
/// when the solver does not converge.
EquilibriumResult approximate_uT(const std::vector<MlnInstance>& pool);

/// Plays T rounds against the pool and scores each round against u.
/// Auto step size: B = 2 max |x*_k|, L = max(|A_k| B + |b_k|).
RegretTrace run_pool_trace(const std::vector<MlnInstance>& pool, const Vec& u, const ExperimentConfig& cfg,
                           std::uint64_t seed);

RegretTrace run_fig4(const ExperimentConfig& cfg, std::uint64_t seed);

/// One trace per seed, spread over cfg.jobs threads. Results follow seed order.
std::vector<RegretTrace> run_fig4_sweep(const ExperimentConfig& cfg);

/// A custom run: the pool is cfg.pool (affine games on a shared region).
RegretTrace run_custom(const ExperimentConfig& cfg, std::uint64_t seed);

/// T rounds on one fixed game, scored against its equilibrium. Auto step size
/// uses the region's radius as B (2 |x*| on the orthant) and the sampled
/// sup |F| as L.
RegretTrace run_single(const GameMap& map, const ExperimentConfig& cfg, std::uint64_t seed = 0);

struct Fig4Check {
  double avg1_at_10 = 0.0;
  double avg1_final = 0.0;
  double avg2_at_10 = 0.0;
  double avg2_final = 0.0;
  bool decay1 = false;
  bool decay2 = false;
  std::size_t band_violations = 0;
  std::size_t first_band_violation = 0;  // t, or 0 when none
  double envelope_C = 0.0;               // max_t avg_regret1(t) sqrt(t)
  double envelope_limit = 0.0;           // 3 B L sqrt(2)
  bool rows_match_T = false;

  bool decay() const noexcept { return decay1 && decay2; }
  bool band() const noexcept { return band_violations == 0; }
  bool envelope() const noexcept { return envelope_C <= envelope_limit; }
  bool passed() const noexcept { return decay() && band() && envelope() && rows_match_T; }
};

Fig4Check check_fig4(const RegretTrace& trace, std::size_t T);

/// Header t,game_idx,regret1,regret2,regret1_bound,band,avg_regret1,avg_regret2
/// and one row per step.
std::string trace_csv(const RegretTrace& trace);

Json to_json(const Fig4Check& c);
Json trace_summary(const RegretTrace& trace);

// ---------------------------------------------------------------------------
// Property table

inline constexpr std::array<char, 9> kVennIds{'a', 'b', 'c', 'd', 'e', 'f', 'g', 'h', 'i'};
inline constexpr std::array<const char*, 4> kPropertyNames{"smooth", "convex", "monotone", "socially_convex"};

struct Table1Result {
  std::array<std::array<bool, 9>, 4> measured{};
  std::array<std::array<bool, 9>, 4> expected{};
  std::vector<PropertyReport> reports;
  std::vector<std::pair<std::size_t, std::size_t>> mismatches;  // (property, example)

  bool passed() const noexcept { return mismatches.empty(); }
};

Table1Result run_table1(std::size_t samples = 500, std::uint64_t seed = 0);

/// Fixed-width T/F grid, one row per property.
std::string table1_text(const Table1Result& r);
Json to_json(const Table1Result& r);

// ---------------------------------------------------------------------------
// Regret bound

struct RegretBoundConfig {
  double B = 1.0;
  double L = 1.0;
  std::size_t T = 100;
  std::size_t dim = 2;
  std::size_t random_sequences = 20;
  std::size_t comparator_samples = 100;
  std::uint64_t seed = 0;
};

struct RegretBoundReport {
  RegretBoundConfig config;
  double bound = 0.0;  // B L sqrt(2T)
  double eta = 0.0;
  double random_max = 0.0;
  double sign_flip = 0.0;
  double measured_max = 0.0;
  double tightness = 0.0;  // sign_flip / bound

  bool within_bound() const noexcept { return measured_max <= bound * (1.0 + 1e-9); }
  bool tight() const noexcept { return tightness >= 0.95; }
};

/// Sum_t <z_t, x_t - u>.
double linear_regret(const std::vector<StepRecord>& trace, std::span<const double> u);

/// Linear regret against the best point of the ball of radius B.
double best_linear_regret(const std::vector<StepRecord>& trace, double B);

/// Alternates +-L e_1 and then holds one sign for round(B / (eta L)) rounds.
std::vector<Vec> sign_flip_sequence(std::size_t T, std::size_t dim, double B, double L, double eta);

RegretBoundReport run_regret_bound(const RegretBoundConfig& cfg);
Json to_json(const RegretBoundReport& r);

// ---------------------------------------------------------------------------
// Counterexample suite

struct CounterexampleReport {
  MonotonicityReport certificate;
  std::size_t loss_points = 0;
  double max_loss_error = 0.0;
  Vec x0{0.0, 0.8};
  Vec xf{0.5, 0.45};
  Vec mid;
  double f_x0 = 0.0;
  double f_xf = 0.0;
  double f_mid = 0.0;

  bool monotone() const noexcept { return certificate.verdict == Verdict::kMonotone; }
  bool loss_matches() const noexcept { return max_loss_error <= 1e-10; }
  bool quasi_convexity_violated() const noexcept { return f_mid > std::max(f_x0, f_xf); }
  bool passed() const noexcept { return monotone() && loss_matches() && quasi_convexity_violated(); }
};

CounterexampleReport run_counterexample(std::size_t samples = 1000, std::uint64_t seed = 0);
Json to_json(const CounterexampleReport& r);

}  // namespace omg
