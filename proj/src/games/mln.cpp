// Copyright 2026 The OMG Authors.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <string>

#include "omg/games.hpp"

namespace omg {

namespace {

// Columns of a Gaussian matrix, orthonormalized by modified Gram-Schmidt.
Matrix random_orthogonal(std::size_t n, CounterRng& rng) {
  std::vector<Vec> cols(n, Vec(n));
  for (auto& c : cols)
    for (auto& v : c) v = rng.normal();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      const double p = dot(cols[j], cols[k]);
      for (std::size_t i = 0; i < n; ++i) cols[j][i] -= p * cols[k][i];
    }
    const double nrm = norm(cols[j]);
    for (auto& v : cols[j]) v /= nrm;
  }
  Matrix Q(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) Q(i, j) = cols[j][i];
  return Q;
}

}  // namespace

MlnInstance make_mln(const MlnParams& p) {
  if (p.firms < 1 || p.dims_per_firm < 1) throw std::invalid_argument("mln: firms and dims must be positive");
  if (!(p.d_lo > 0 && p.d_lo <= p.d_hi)) throw std::invalid_argument("mln: need 0 < d_lo <= d_hi");
  if (!(p.b_lo <= p.b_hi) || p.skew < 0 || p.shift < 0) throw std::invalid_argument("mln: bad ranges");

  const std::size_t n = p.firms * p.dims_per_firm;
  CounterRng rng(p.seed, 0x4D4C4E);
  const Matrix Q = random_orthogonal(n, rng);
  Vec diag(n);
  for (auto& v : diag) v = rng.uniform(p.d_lo, p.d_hi);
  Matrix A = Q.transpose() * Matrix::diagonal(diag) * Q;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double k = p.skew * rng.uniform(-1.0, 1.0);
      A(i, j) += k;
      A(j, i) -= k;
    }
    A(i, i) += p.shift;
  }
  Vec b(n);
  for (auto& v : b) v = rng.uniform(p.b_lo, p.b_hi);

  MlnInstance inst;
  inst.n = n;
  inst.seed = p.seed;
  if (sym_spectrum(A).min_eig < 0.05) {
    throw std::logic_error("mln: construction produced a weakly monotone operator");
  }
  inst.map = make_affine_map("mln[" + std::to_string(p.seed) + "]", A, b, FeasibleRegion::nonneg_orthant(n));
  inst.A = std::move(A);
  inst.b = std::move(b);
  inst.equilibrium = solve_equilibrium(inst.map, inst.map.region, {1e-10, 100000});
  return inst;
}

MlnInstance make_mln(std::uint64_t seed) {
  MlnParams p;
  p.seed = seed;
  return make_mln(p);
}

}  // namespace omg
