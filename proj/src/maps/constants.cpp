// Copyright 2026 The OMG Authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>

#include "omg/maps.hpp"

namespace omg {

namespace {

std::vector<Vec> anchor_points(const FeasibleRegion& region) {
  std::vector<Vec> pts;
  const std::size_t n = region.dimension();
  if (region.kind() == FeasibleRegion::Kind::kBox && n <= 6) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      Vec c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = (mask >> i) & 1 ? region.upper()[i] : region.lower()[i];
      pts.push_back(std::move(c));
    }
  } else if (region.kind() == FeasibleRegion::Kind::kL2Ball) {
    for (std::size_t i = 0; i < n; ++i) {
      Vec e(n, 0.0);
      e[i] = region.radius();
      pts.push_back(e);
      e[i] = -region.radius();
      pts.push_back(std::move(e));
    }
  }
  return pts;
}

Matrix jacobian_anywhere(const GameMap& map, std::span<const double> x) {
  return map.jacobian_analytic ? map.jacobian_analytic(x) : fd_jacobian(map, x);
}

double second_derivative_norm(const GameMap& map, std::span<const double> x, const Vec& fx) {
  const std::size_t n = map.dimension;
  Matrix J2(n, n);
  Vec xp(x.begin(), x.end());
  for (std::size_t j = 0; j < n; ++j) {
    const double h = 1e-4 * std::max(1.0, std::abs(x[j]));
    xp[j] = x[j] + h;
    const Vec fp = evaluate(map, xp);
    xp[j] = x[j] - h;
    const Vec fm = evaluate(map, xp);
    xp[j] = x[j];
    for (std::size_t i = 0; i < n; ++i) J2(i, j) = (fp[i] - 2.0 * fx[i] + fm[i]) / (h * h);
  }
  return spectral_norm(J2);
}

}  // namespace

ConstantsEstimate estimate_constants(const GameMap& map, const FeasibleRegion& region,
                                     std::size_t samples, std::uint64_t seed,
                                     const std::vector<Vec>& extra_points) {
  if (samples < 1) throw std::invalid_argument("estimate_constants: samples must be >= 1");
  require_same_size(map.dimension, region.dimension(), "estimate_constants region");

  std::vector<Vec> pts = sample_region(region, samples, seed, 3);
  for (auto& p : anchor_points(region)) pts.push_back(std::move(p));
  for (const auto& p : extra_points) {
    require_same_size(map.dimension, p.size(), "estimate_constants point");
    pts.push_back(p);
  }

  double L = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  for (const Vec& x : pts) {
    const Vec fx = evaluate(map, x);
    L = std::max(L, norm(fx));
    if (!map.affine) {
      beta = std::max(beta, spectral_norm(jacobian_anywhere(map, x)));
      gamma = std::max(gamma, second_derivative_norm(map, x, fx));
    }
  }
  if (map.affine) beta = map.affine->op_norm;

  ConstantsEstimate est;
  est.L = kConstantsInflation * L;
  est.beta = kConstantsInflation * beta;
  est.gamma = kConstantsInflation * gamma;
  est.sample_count = pts.size();
  est.region = region;
  return est;
}

}  // namespace omg
