// Copyright 2026 The OMG Authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>

#include "omg/core.hpp"

namespace omg {

Vec symmetric_eigenvalues(const Matrix& sym) {
  if (!sym.square()) throw std::invalid_argument("symmetric_eigenvalues: matrix is not square");
  const std::size_t n = sym.rows();
  Matrix a = sym;
  if (n == 0) return {};

  double frob = 0.0;
  for (double v : a.data()) frob += v * v;
  frob = std::sqrt(frob);
  if (frob == 0.0) return Vec(n, 0.0);

  // Cyclic Jacobi sweeps; each rotation zeroes one off-diagonal pair.
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (std::sqrt(off) <= 1e-17 * frob) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
    }
  }

  Vec eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

SpectrumReport sym_spectrum(const Matrix& m) {
  if (!m.square()) throw std::invalid_argument("sym_spectrum: matrix is not square");
  for (double v : m.data()) {
    if (std::isnan(v)) throw std::domain_error("sym_spectrum: matrix has NaN entries");
  }
  const Vec eig = symmetric_eigenvalues(symmetric_part(m));
  SpectrumReport r;
  r.matrix_dim = m.rows();
  if (!eig.empty()) {
    r.min_eig = eig.front();
    r.max_eig = eig.back();
  }
  return r;
}

}  // namespace omg
