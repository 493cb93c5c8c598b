// Copyright 2026 The OMG Authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>

#include "omg/maps.hpp"

namespace omg {

AffineForm AffineForm::make(Matrix A, Vec b) {
  if (!A.square()) throw std::invalid_argument("affine map: A must be square");
  require_same_size(A.rows(), b.size(), "affine map b");
  AffineForm f;
  f.op_norm = spectral_norm(A);
  f.A = std::move(A);
  f.b = std::move(b);
  return f;
}

GameMap make_affine_map(std::string name, Matrix A, Vec b, FeasibleRegion region) {
  AffineForm form = AffineForm::make(std::move(A), std::move(b));
  require_same_size(form.A.rows(), region.dimension(), "affine map region");
  GameMap m;
  m.name = std::move(name);
  m.dimension = form.A.rows();
  m.region = std::move(region);
  m.lipschitz_hint = form.op_norm;
  m.eval = [A = form.A, b = form.b](std::span<const double> x) { return add(A * x, b); };
  m.jacobian_analytic = [A = form.A](std::span<const double>) { return A; };
  m.affine = std::move(form);
  return m;
}

Vec evaluate(const GameMap& map, std::span<const double> x) {
  require_same_size(map.dimension, x.size(), "evaluate");
  Vec f = map.eval(x);
  require_same_size(map.dimension, f.size(), "map output");
  if (!all_finite(f)) {
    throw NumericError("map '" + map.name + "' returned a non-finite value", Vec(x.begin(), x.end()));
  }
  return f;
}

Matrix fd_jacobian(const GameMap& map, std::span<const double> x) {
  const std::size_t n = map.dimension;
  require_same_size(n, x.size(), "jacobian");
  Matrix J(n, n);
  Vec xp(x.begin(), x.end());
  for (std::size_t j = 0; j < n; ++j) {
    const double h = std::max(1e-6, 1e-6 * std::abs(x[j]));
    xp[j] = x[j] + h;
    const Vec fp = evaluate(map, xp);
    xp[j] = x[j] - h;
    const Vec fm = evaluate(map, xp);
    xp[j] = x[j];
    for (std::size_t i = 0; i < n; ++i) J(i, j) = (fp[i] - fm[i]) / (2.0 * h);
  }
  return J;
}

Matrix jacobian(const GameMap& map, std::span<const double> x) {
  require_same_size(map.dimension, x.size(), "jacobian");
  if (!map.region.contains(x, 1e-9)) {
    throw std::domain_error("jacobian: point lies outside the region of '" + map.name + "'");
  }
  if (map.jacobian_analytic) {
    Matrix J = map.jacobian_analytic(x);
    for (double v : J.data()) {
      if (!std::isfinite(v)) {
        throw NumericError("analytic Jacobian of '" + map.name + "' is non-finite", Vec(x.begin(), x.end()));
      }
    }
    return J;
  }
  return fd_jacobian(map, x);
}

}  // namespace omg
