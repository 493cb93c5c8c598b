// Copyright 2026 The OMG Authors.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>

#include "omg/quadrature.hpp"

namespace omg {

GaussRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: node count must be >= 1");
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  // Newton iteration on P_n from the Chebyshev-like initial guess; roots are
  // symmetric so only half are computed.
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (int k = 1; k <= n; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
      }
      dp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    // Recompute the derivative at the converged root.
    double p0 = 1.0;
    double p1 = 0.0;
    for (int k = 1; k <= n; ++k) {
      const double p2 = p1;
      p1 = p0;
      p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
    }
    dp = n * (z * p0 - p1) / (z * z - 1.0);
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    // Map [-1, 1] to [0, 1]: t = (1 + z) / 2, weight halves.
    rule.nodes[i] = 0.5 * (1.0 - z);
    rule.nodes[n - 1 - i] = 0.5 * (1.0 + z);
    rule.weights[i] = 0.5 * w;
    rule.weights[n - 1 - i] = 0.5 * w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.5;
  return rule;
}

double integrate(const std::function<double(double)>& f, double a, double b, int n, int segments) {
  if (segments < 1) throw std::invalid_argument("integrate: segments must be >= 1");
  const GaussRule rule = gauss_legendre(n);
  const double h = (b - a) / segments;
  double total = 0.0;
  for (int s = 0; s < segments; ++s) {
    const double lo = a + s * h;
    double part = 0.0;
    for (int k = 0; k < n; ++k) part += rule.weights[k] * f(lo + h * rule.nodes[k]);
    total += h * part;
  }
  return total;
}

}  // namespace omg
