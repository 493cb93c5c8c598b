// Copyright 2026 The OMG Authors.
// SPDX-License-Identifier: Apache-2.0

// Straight-line path integrals of a game map and the quantities built from
// them: auto-welfare losses, sandwich bounds, one- and two-step regret and the
// curl band on their difference.

#pragma once

#include <string>
#include <utility>

#include "omg/maps.hpp"

namespace omg {

enum class PathMethod { kQuadrature, kAffineClosedForm, kMinimaxClosedForm };
const char* to_string(PathMethod m);

struct PathLoss {
  double value = 0.0;
  PathMethod method = PathMethod::kQuadrature;
  int nodes = 0;  // quadrature only
  Vec origin;
  Vec endpoint;
  double f_o = 0.0;
  double error_estimate = 0.0;
  std::string warning;
};

inline constexpr int kDefaultNodes = 16;

/// f_o + int_0^1 <F(o + t(x - o)), x - o> dt by Gauss-Legendre quadrature.
/// Splits at the map's kinks and honors its segment count. Points outside the
/// region by more than 1e-9 raise std::domain_error.
PathLoss path_integral(const GameMap& map, std::span<const double> o, std::span<const double> x,
                       int nodes = kDefaultNodes, double f_o = 0.0);

/// Exact loss of F(x) = A x + b along o -> x.
PathLoss affine_path_loss(const Matrix& A, std::span<const double> b, std::span<const double> o,
                          std::span<const double> x);

/// (<F(a), b - a>, <F(b), b - a>): the linearizations that bracket the
/// integral from a to b for monotone F.
std::pair<double, double> sandwich_bounds(const GameMap& map, std::span<const double> a,
                                          std::span<const double> b);

/// Area of the triangle (o, x, u) in its own plane.
double triangle_area(std::span<const double> o, std::span<const double> x, std::span<const double> u);

/// 2 sqrt(2 (beta^2 + L gamma)) Area(o, x, u) for given constants.
double stokes_band(const ConstantsEstimate& constants, std::span<const double> o,
                   std::span<const double> x, std::span<const double> u);

/// Same, with constants estimated over the triangle's bounding box.
double stokes_band(const GameMap& map, std::span<const double> o, std::span<const double> x,
                   std::span<const double> u, std::size_t samples = 64, std::uint64_t seed = 0);

struct RegretPair {
  double regret1_bound = 0.0;
  double regret2_bound = 0.0;
  double regret1_exact = 0.0;
  double regret2_exact = 0.0;
  double stokes_band = 0.0;
};

RegretPair regret_pair(const GameMap& map, std::span<const double> o, std::span<const double> x,
                       std::span<const double> u, int nodes = kDefaultNodes);

struct WelfareDecomposition {
  double W = 0.0;            // -sum_i C_i(x)
  double W_o = 0.0;          // -sum_i C_i(o)
  double W_auto = 0.0;       // -path_integral(o -> x) with f_o = 0
  double cross_terms = 0.0;  // sum_i sum_{j != i} int <-d_j C_i, dx_j>
};

/// Cross-gradients by central differences (h = 1e-6). The identity
/// W_auto = W - W_o - cross_terms holds up to quadrature error.
WelfareDecomposition welfare_and_decomposition(const GameMap& map, std::span<const double> o,
                                               std::span<const double> x, int nodes = kDefaultNodes);

using SaddleFn = std::function<double(std::span<const double>, std::span<const double>)>;

/// V(x1, o2) - V(o1, x2): the loss of the map (d1 V, -d2 V) along o -> x.
PathLoss minimax_path_loss(const SaddleFn& V, std::span<const double> o1, std::span<const double> o2,
                           std::span<const double> x1, std::span<const double> x2);

}  // namespace omg
