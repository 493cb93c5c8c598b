// Copyright 2026 The OMG Authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <numeric>

#include "omg/games.hpp"

namespace omg {

double counterexample_loss(double r, double c) { return (r * r * r + 3.0 * r * c * c + c * c * c) / 3.0; }

Vec resource_alloc_optimum(double beta, std::span<const double> alpha, std::size_t N, double epsilon) {
  if (N < 2) throw std::invalid_argument("resource_alloc_optimum: N must be >= 2");
  require_same_size(N, alpha.size(), "resource_alloc_optimum alpha");
  if (!(beta > 0)) throw std::invalid_argument("resource_alloc_optimum: beta must be positive");
  if (std::any_of(alpha.begin(), alpha.end(), [](double a) { return !(a > 0); })) {
    throw std::invalid_argument("resource_alloc_optimum: alpha_i must be positive");
  }
  const double sum_alpha = std::accumulate(alpha.begin(), alpha.end(), 0.0);
  const double n1 = static_cast<double>(N - 1);
  const double s = beta * n1 / sum_alpha;
  Vec u(N);
  for (std::size_t i = 0; i < N; ++i) u[i] = s * (1.0 - alpha[i] / sum_alpha * n1);
  for (double v : u) {
    if (!(v > epsilon && v <= 1.0)) {
      throw std::domain_error("resource_alloc_optimum: interior assumption violated");
    }
  }
  const GameMap m = make_resource_alloc({beta, Vec(alpha.begin(), alpha.end()), epsilon});
  const Vec f = evaluate(m, u);
  const double worst = std::abs(*std::max_element(f.begin(), f.end(), [](double a, double b) {
    return std::abs(a) < std::abs(b);
  }));
  if (worst >= 1e-8) throw std::domain_error("resource_alloc_optimum: F(u) does not vanish");
  return u;
}

double resource_alloc_auto_welfare(double beta, std::span<const double> alpha, std::span<const double> o,
                                   std::span<const double> x) {
  require_same_size(alpha.size(), o.size(), "resource_alloc_auto_welfare o");
  require_same_size(alpha.size(), x.size(), "resource_alloc_auto_welfare x");
  auto positive = [](double v) { return v > 0; };
  if (!std::all_of(o.begin(), o.end(), positive) || !std::all_of(x.begin(), x.end(), positive)) {
    throw std::invalid_argument("resource_alloc_auto_welfare: bids must be positive");
  }
  const double so = std::accumulate(o.begin(), o.end(), 0.0);
  const double sx = std::accumulate(x.begin(), x.end(), 0.0);
  const double ds = sx - so;

  if (std::abs(ds) <= 1e-12) {
    if (std::equal(o.begin(), o.end(), x.begin())) return 0.0;
    // The closed form divides by s_x - s_o; integrate directly instead.
    const double lo = std::min(*std::min_element(o.begin(), o.end()), *std::min_element(x.begin(), x.end()));
    GameMap m = make_resource_alloc({beta, Vec(alpha.begin(), alpha.end()), std::min(0.5, 0.5 * lo)});
    return -path_integral(m, o, x, 32).value;
  }

  const double log_ratio = std::log(sx / so);
  double d2 = 0.0;
  double share = 0.0;
  double cost = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - o[i];
    d2 += d * d;
    share += d / ds * (x[i] / sx - o[i] / so);
    cost += alpha[i] * d;
  }
  return beta * log_ratio * (1.0 - d2 / (ds * ds)) + beta * share - cost;
}

double cournot_auto_welfare(const CournotParams& p, std::span<const double> o, std::span<const double> x) {
  const std::size_t n = p.kappa.size();
  require_same_size(n, o.size(), "cournot_auto_welfare o");
  require_same_size(n, x.size(), "cournot_auto_welfare x");
  double supply = 0.0;
  for (std::size_t k = 0; k < n; ++k) supply += o[k] + x[k];
  double w = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double z = 0.5 * (o[i] + x[i] + supply);
    w += (x[i] - o[i]) * (p.a - p.b * z);
    w -= 0.5 * p.kappa[i] * (x[i] * x[i] - o[i] * o[i]);
  }
  return w;
}

double gtd_value(const GtdParams& p, std::span<const double> y, std::span<const double> theta) {
  require_same_size(p.M.rows(), y.size(), "gtd y");
  require_same_size(p.A.cols(), theta.size(), "gtd theta");
  return 0.5 * dot(y, p.M * y) + dot(y, p.A * theta) - dot(p.b, y);
}

double gtd_path_loss(const GtdParams& p, std::span<const double> y0, std::span<const double> theta0,
                     std::span<const double> y, std::span<const double> theta) {
  require_same_size(p.M.rows(), y0.size(), "gtd y0");
  require_same_size(p.M.rows(), y.size(), "gtd y");
  require_same_size(p.A.cols(), theta0.size(), "gtd theta0");
  require_same_size(p.A.cols(), theta.size(), "gtd theta");
  return 0.5 * (dot(y, p.M * y) - dot(y0, p.M * y0)) + dot(y, p.A * theta0) - dot(y0, p.A * theta) -
         dot(p.b, sub(y, y0));
}

double wgan_path_loss(std::span<const double> x, std::span<const double> z, std::span<const double> G0,
                      std::span<const double> d0, std::span<const double> G, std::span<const double> d) {
  const std::size_t n = x.size();
  const std::size_t m = z.size();
  require_same_size(n * m, G0.size(), "wgan G0");
  require_same_size(n * m, G.size(), "wgan G");
  require_same_size(n, d0.size(), "wgan d0");
  require_same_size(n, d.size(), "wgan d");
  double value = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double g0z = 0.0;
    double gz = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      g0z += G0[i * m + j] * z[j];
      gz += G[i * m + j] * z[j];
    }
    value += d[i] * g0z - d0[i] * gz - (d[i] - d0[i]) * x[i];
  }
  return value;
}

}  // namespace omg
