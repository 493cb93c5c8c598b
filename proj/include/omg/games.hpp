// Copyright 2026 The OMG Authors.
// SPDX-License-Identifier: Apache-2.0

// The game zoo: concrete maps with their closed-form losses, the MLN instance
// generator, the nine two-player classification examples and an extragradient
// VI solver.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "omg/maps.hpp"
#include "omg/welfare.hpp"

namespace omg {

// ---------------------------------------------------------------------------
// Parameters

struct CounterexampleParams {};

/// Price p(x) = a - b sum_k x_k, costs c_i = kappa_i x_i^2 / 2.
struct CournotParams {
  double a = 2.0;
  double b = 1.0;
  Vec kappa{0.0, 0.0};
};

/// Utilities u_i = beta x_i / s - alpha_i x_i over [epsilon, 1]^N, N = |alpha|.
struct ResourceAllocParams {
  double beta = 1.0;
  Vec alpha{1.0, 1.0, 1.0};
  double epsilon = 0.05;
};

/// Capacity-1 tail drop. piece = 0 evaluates the full piecewise map, 1 the
/// uncongested (sum <= 1) formula everywhere, 2 the congested one.
struct TailDropParams {
  double beta = 2.0;
  std::size_t N = 3;
  double epsilon = 0.05;
  int piece = 0;
};

/// F(y, theta) = (M y + A theta - b, -A' y) on an L2 ball.
struct GtdParams {
  Matrix A{{1.0}};
  Vec b{0.0};
  Matrix M{{1.0}};
  double radius = 10.0;
};

/// Generator G (n x m, flattened row-major) and discriminator d (n). Batches
/// are averaged over rows.
struct WganParams {
  std::vector<Vec> x_batch{{1.0}};
  std::vector<Vec> z_batch{{1.0}};
  double alpha = 0.0;
  double box = 2.0;
};

struct MlnParams {
  std::uint64_t seed = 0;
  std::size_t firms = 5;
  std::size_t dims_per_firm = 2;
  double d_lo = 0.5;
  double d_hi = 2.0;
  double skew = 0.3;
  double b_lo = -1.0;
  double b_hi = 1.0;
  double shift = 0.1;
};

struct VennParams {
  char id = 'a';
};

struct AffineParams {
  Matrix A;
  Vec b;
  FeasibleRegion region;
};

using GameParams = std::variant<CounterexampleParams, CournotParams, ResourceAllocParams, TailDropParams,
                                GtdParams, WganParams, MlnParams, VennParams, AffineParams>;

struct GameSpec {
  std::string id;
  GameParams params;
};

/// Ids accepted by make_game: counterexample, cournot, resource_alloc, taildrop,
/// gtd, wgan_affine (alias wgan), mln, venn_a ... venn_i, affine.
std::vector<std::string> builtin_game_ids();

/// Spec with default parameters; throws std::invalid_argument on unknown ids.
GameSpec default_spec(const std::string& id);

GameMap make_game(const GameSpec& spec);

// ---------------------------------------------------------------------------
// Individual constructors

GameMap make_counterexample();
GameMap make_cournot(const CournotParams& p);
GameMap make_resource_alloc(const ResourceAllocParams& p);
GameMap make_taildrop(const TailDropParams& p);
GameMap make_gtd(const GtdParams& p);
GameMap make_wgan(const WganParams& p);

/// Scales player i's cost (and its block of F) by weights[i].
GameMap scale_players(const GameMap& map, std::span<const double> weights);

// ---------------------------------------------------------------------------
// Closed forms

/// (r^3 + 3 r c^2 + c^3) / 3: the counterexample loss from the origin.
double counterexample_loss(double r, double c);

/// Interior root of F for resource allocation. Throws std::domain_error when
/// it leaves (epsilon, 1]^N or F(u) is not ~0.
Vec resource_alloc_optimum(double beta, std::span<const double> alpha, std::size_t N, double epsilon);

/// Auto-welfare int_o^x <-F, dv> in closed form, with a 32-node quadrature
/// fallback when the total bids coincide.
double resource_alloc_auto_welfare(double beta, std::span<const double> alpha, std::span<const double> o,
                                   std::span<const double> x);

/// Auto-welfare with player-specific prices p(z_i).
double cournot_auto_welfare(const CournotParams& p, std::span<const double> o, std::span<const double> x);

/// 1/2 (y'My - y0'My0) + y'A theta0 - y0'A theta - b'(y - y0).
double gtd_path_loss(const GtdParams& p, std::span<const double> y0, std::span<const double> theta0,
                     std::span<const double> y, std::span<const double> theta);

/// Saddle function V(y, theta) = 1/2 y'My + y'A theta - b'y.
double gtd_value(const GtdParams& p, std::span<const double> y, std::span<const double> theta);

/// Affine form (J, d) of the GTD map.
AffineForm gtd_affine(const GtdParams& p);

/// d'(G0 z) - d0'(G z) - (d - d0)'x with G flattened row-major (n x m).
double wgan_path_loss(std::span<const double> x, std::span<const double> z, std::span<const double> G0,
                      std::span<const double> d0, std::span<const double> G, std::span<const double> d);

/// Batch means (x-bar, z-bar).
std::pair<Vec, Vec> wgan_batch_means(const WganParams& p);

// ---------------------------------------------------------------------------
// Equilibria

struct EquilibriumResult {
  Vec x_star;
  double natural_residual = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

struct EquilibriumOptions {
  double tol = 1e-8;
  std::size_t max_iterations = 100000;
};

/// Natural residual |x - Proj(x - F(x))|.
double natural_residual(const GameMap& map, const FeasibleRegion& region, std::span<const double> x);

/// Projected extragradient with tau = 1 / (2 L), started at Proj(0).
EquilibriumResult solve_equilibrium(const GameMap& map, const FeasibleRegion& region,
                                    const EquilibriumOptions& opts = {});

// ---------------------------------------------------------------------------
// Machine-learning network instances

struct MlnInstance {
  Matrix A;
  Vec b;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  EquilibriumResult equilibrium;
  GameMap map;
};

MlnInstance make_mln(const MlnParams& p);
MlnInstance make_mln(std::uint64_t seed);

// ---------------------------------------------------------------------------
// Venn diagram examples a..i

struct VennExample {
  char id = 'a';
  GameMap map;
  std::optional<std::pair<double, double>> smooth_params;
  std::optional<Vec> known_social_weights;  // only where the example specifies them
  Vec trial_social_weights;                 // used otherwise
  std::vector<SmoothWitness> smooth_witnesses;
  std::vector<ConvexWitness> convex_witnesses;
  std::vector<Witness> monotone_witnesses;
  std::vector<Vec> social_witnesses;
  std::array<bool, 4> expected{};  // smooth, convex, monotone, socially convex

  ClassifyOptions classify_options(std::size_t samples = 500, std::uint64_t seed = 0) const;
};

VennExample make_venn_example(char id);

}  // namespace omg
