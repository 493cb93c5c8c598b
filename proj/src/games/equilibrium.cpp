// Copyright 2026 The OMG Authors.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include "omg/games.hpp"

namespace omg {

double natural_residual(const GameMap& map, const FeasibleRegion& region, std::span<const double> x) {
  return distance(x, region.project(sub(x, evaluate(map, x))));
}

namespace {

double lipschitz_estimate(const GameMap& map, const FeasibleRegion& region) {
  double L = 0.0;
  if (map.affine) {
    L = map.affine->op_norm;
  } else if (map.lipschitz_hint) {
    L = *map.lipschitz_hint;
  } else if (region.bounded()) {
    L = estimate_constants(map, region, 256, 0).beta;
  } else {
    throw std::invalid_argument("solve_equilibrium: '" + map.name +
                                "' needs a Lipschitz hint on an unbounded region");
  }
  return L > 0.0 ? L : 1.0;
}

}  // namespace

EquilibriumResult solve_equilibrium(const GameMap& map, const FeasibleRegion& region,
                                    const EquilibriumOptions& opts) {
  require_same_size(map.dimension, region.dimension(), "solve_equilibrium region");
  const double tau = 1.0 / (2.0 * lipschitz_estimate(map, region));

  EquilibriumResult res;
  Vec x = region.project(Vec(map.dimension, 0.0));
  for (std::size_t k = 0;; ++k) {
    const Vec fx = evaluate(map, x);
    res.natural_residual = distance(x, region.project(sub(x, fx)));
    res.iterations = k;
    if (res.natural_residual < opts.tol) {
      res.converged = true;
      break;
    }
    if (k >= opts.max_iterations) break;
    const Vec half = region.project(axpy(x, -tau, fx));
    x = region.project(axpy(x, -tau, evaluate(map, half)));
  }
  res.x_star = std::move(x);
  return res;
}

}  // namespace omg
