// Copyright 2026 The OMG Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "omg/core.hpp"

namespace omg {

using Field = std::function<Vec(std::span<const double>)>;
using JacobianFn = std::function<Matrix(std::span<const double>)>;
using ScalarFn = std::function<double(std::span<const double>)>;

/// Player i owns coordinates [begin, end) and pays cost(s) at the joint profile s.
struct PlayerCost {
  std::size_t begin = 0;
  std::size_t end = 0;
  ScalarFn cost;
};

/// F(x) = A x + b, with ||A||_2 cached at construction.
struct AffineForm {
  Matrix A;
  Vec b;
  double op_norm = 0.0;

  static AffineForm make(Matrix A, Vec b);
};

struct GameMap {
  std::string name;
  std::size_t dimension = 0;
  Field eval;
  JacobianFn jacobian_analytic;  // empty when absent
  std::vector<PlayerCost> players;
  FeasibleRegion region;
  std::optional<double> lipschitz_hint;  // Lipschitz constant of F on the region
  std::optional<AffineForm> affine;

  // Piecewise maps report where the segment o + t(x - o) crosses a piece
  // boundary, and ask for composite quadrature.
  std::function<std::vector<double>(std::span<const double>, std::span<const double>)> kinks;
  int quadrature_segments = 1;

  bool has_players() const noexcept { return !players.empty(); }
};

/// Builds a map for F(x) = A x + b with the analytic Jacobian A.
GameMap make_affine_map(std::string name, Matrix A, Vec b, FeasibleRegion region);

/// F(x), raising NumericError on non-finite output.
Vec evaluate(const GameMap& map, std::span<const double> x);

/// Central differences with h_i = max(1e-6, 1e-6 |x_i|).
Matrix fd_jacobian(const GameMap& map, std::span<const double> x);

/// Analytic Jacobian when provided, else fd_jacobian. x must be in the region
/// within 1e-9 (std::domain_error otherwise).
Matrix jacobian(const GameMap& map, std::span<const double> x);

// ---------------------------------------------------------------------------
// Monotonicity

/// A single point (Jacobian test) or a pair (secant test).
struct Witness {
  Vec a;
  std::optional<Vec> b;

  static Witness point(Vec p) { return {std::move(p), std::nullopt}; }
  static Witness pair(Vec p, Vec q) { return {std::move(p), std::move(q)}; }
};

enum class Verdict { kMonotone, kNotMonotone, kInconclusive };
const char* to_string(Verdict v);

struct MonotonicityReport {
  double min_sym_eig_over_samples = 0.0;
  double max_sym_eig_over_samples = 0.0;
  double worst_pair_inner_product = 0.0;
  double strong_parameter = 0.0;
  std::size_t sample_count = 0;
  std::uint64_t seed = 0;
  Verdict verdict = Verdict::kInconclusive;
  // Populated when verdict is kNotMonotone.
  std::optional<Witness> witness;
  double witness_value = 0.0;
  std::size_t failed_evaluations = 0;
};

struct CertifyOptions {
  std::size_t samples = 1000;
  std::size_t pair_samples = 1000;
  std::uint64_t seed = 0;
  std::vector<Witness> witnesses;
};

/// Sampled certificate: minimum eigenvalue of the symmetrized Jacobian at every
/// sample and point witness, and the secant product on sampled and witness
/// pairs. A value below -1e-8 (1 + |max eig|) is a violation; pairs are
/// compared after dividing by |x - x'|^2.
/// A supplied witness that violates is reported ahead of sampled violations.
MonotonicityReport certify_monotone(const GameMap& map, const CertifyOptions& opts);
MonotonicityReport certify_monotone(const GameMap& map, std::size_t samples, std::uint64_t seed,
                                    std::vector<Witness> witnesses = {});

/// Minimum over samples of lambda_min of the principal block of J_s on the
/// given coordinates. Useful for saddle maps that are strongly monotone only in
/// one block.
double block_strong_parameter(const GameMap& map, std::span<const std::size_t> indices,
                              std::size_t samples, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Curl-bound constants

struct ConstantsEstimate {
  double L = 0.0;      // sup |F|_2
  double beta = 0.0;   // sup |J|_2
  double gamma = 0.0;  // sup |J2|_2 with J2_ij = d^2 F_i / dx_j^2
  std::size_t sample_count = 0;
  FeasibleRegion region;
};

inline constexpr double kConstantsInflation = 1.1;

/// Sampled suprema inflated by 10%. Box corners are included for n <= 6 and any
/// extra points are always included.
ConstantsEstimate estimate_constants(const GameMap& map, const FeasibleRegion& region,
                                     std::size_t samples, std::uint64_t seed,
                                     const std::vector<Vec>& extra_points = {});

// ---------------------------------------------------------------------------
// Game classification

enum class CheckStatus { kHolds, kRefuted, kUntested };
const char* to_string(CheckStatus s);

struct PropertyCheck {
  CheckStatus status = CheckStatus::kUntested;
  std::string reason;
  std::vector<Vec> witness;   // point or pair where the inequality fails
  double violation = 0.0;     // amount by which it fails
  std::optional<std::size_t> player;
  std::size_t sample_count = 0;

  bool holds() const noexcept { return status == CheckStatus::kHolds; }
};

struct SmoothWitness {
  Vec s;
  Vec s_star;
};

struct ConvexWitness {
  std::size_t player = 0;
  Vec s;
  Vec s_prime;  // differs from s only in the player's block
};

struct ClassifyOptions {
  std::optional<std::pair<double, double>> smooth_params;
  std::optional<Vec> social_weights;
  std::vector<SmoothWitness> smooth_witnesses;
  std::vector<ConvexWitness> convex_witnesses;
  std::vector<Witness> monotone_witnesses;
  std::vector<Vec> social_witnesses;
  std::size_t samples = 500;
  std::size_t smooth_pairs = 10000;
  std::uint64_t seed = 0;
};

struct PropertyReport {
  PropertyCheck smooth;
  PropertyCheck convex;
  MonotonicityReport monotone;
  PropertyCheck socially_convex;
  double smooth_lambda = 0.0;
  double smooth_mu = 0.0;
};

/// Total cost C(s) = sum_i C_i(s).
double total_cost(const GameMap& map, std::span<const double> s);

/// Finite-difference Hessian of a scalar function, step h.
Matrix fd_hessian(const ScalarFn& f, std::span<const double> x, double h = 1e-4);

PropertyReport classify_game(const GameMap& map, const ClassifyOptions& opts);

}  // namespace omg
