// Copyright 2026 The OMG Authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>

#include "omg/quadrature.hpp"
#include "omg/welfare.hpp"

namespace omg {

const char* to_string(PathMethod m) {
  switch (m) {
    case PathMethod::kQuadrature:
      return "quadrature";
    case PathMethod::kAffineClosedForm:
      return "affine_closed_form";
    case PathMethod::kMinimaxClosedForm:
      return "minimax_closed_form";
  }
  return "unknown";
}

namespace {

void require_in_region(const GameMap& map, std::span<const double> p, const char* which) {
  require_same_size(map.dimension, p.size(), which);
  if (!map.region.contains(p, 1e-9)) {
    throw std::domain_error(std::string("path_integral: ") + which + " lies outside the region of '" +
                            map.name + "'");
  }
}

double line_integral(const GameMap& map, std::span<const double> o, std::span<const double> x,
                     const Vec& d, const std::vector<double>& breaks, int nodes) {
  const auto integrand = [&](double t) { return dot(evaluate(map, lerp(o, x, t)), d); };
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    total += integrate(integrand, breaks[k], breaks[k + 1], nodes, map.quadrature_segments);
  }
  return total;
}

}  // namespace

PathLoss path_integral(const GameMap& map, std::span<const double> o, std::span<const double> x,
                       int nodes, double f_o) {
  if (nodes < 1) throw std::invalid_argument("path_integral: nodes must be >= 1");
  require_in_region(map, o, "origin");
  require_in_region(map, x, "endpoint");

  PathLoss out;
  out.method = PathMethod::kQuadrature;
  out.nodes = nodes;
  out.origin.assign(o.begin(), o.end());
  out.endpoint.assign(x.begin(), x.end());
  out.f_o = f_o;
  out.value = f_o;
  if (std::equal(o.begin(), o.end(), x.begin())) return out;

  const Vec d = sub(x, o);
  std::vector<double> breaks{0.0, 1.0};
  if (map.kinks) {
    for (double t : map.kinks(o, x)) {
      if (t > 0.0 && t < 1.0) breaks.push_back(t);
    }
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  }

  const double v = line_integral(map, o, x, d, breaks, nodes);
  if (!std::isfinite(v)) throw NumericError("path_integral: non-finite value", out.endpoint);
  out.value = f_o + v;
  if (nodes > 1) {
    out.error_estimate = std::abs(v - line_integral(map, o, x, d, breaks, (nodes + 1) / 2));
  }
  return out;
}

PathLoss affine_path_loss(const Matrix& A, std::span<const double> b, std::span<const double> o,
                          std::span<const double> x) {
  if (!A.square()) throw std::invalid_argument("affine_path_loss: A must be square");
  require_same_size(A.rows(), b.size(), "affine_path_loss b");
  require_same_size(A.rows(), o.size(), "affine_path_loss o");
  require_same_size(A.rows(), x.size(), "affine_path_loss x");

  PathLoss out;
  out.method = PathMethod::kAffineClosedForm;
  out.origin.assign(o.begin(), o.end());
  out.endpoint.assign(x.begin(), x.end());

  const SpectrumReport s = sym_spectrum(A);
  if (s.min_eig < -1e-8 * (1.0 + std::abs(s.max_eig))) {
    out.warning = "symmetrized A is not PSD (min eigenvalue " + std::to_string(s.min_eig) +
                  "); the loss is not convex";
  }

  // 1/2 [x' A_s x + x' (A - A') o - o' A' o] + b'(x - o)
  const Vec Ax = A * x;
  const Vec Ao = A * o;
  const Vec Ato = A.transpose() * o;
  const double quad = dot(x, Ax) + (dot(x, Ao) - dot(x, Ato)) - dot(o, Ao);
  out.value = 0.5 * quad + dot(b, sub(x, o));
  return out;
}

std::pair<double, double> sandwich_bounds(const GameMap& map, std::span<const double> a,
                                          std::span<const double> b) {
  const Vec d = sub(b, a);
  return {dot(evaluate(map, a), d), dot(evaluate(map, b), d)};
}

PathLoss minimax_path_loss(const SaddleFn& V, std::span<const double> o1, std::span<const double> o2,
                           std::span<const double> x1, std::span<const double> x2) {
  require_same_size(o1.size(), x1.size(), "minimax_path_loss first block");
  require_same_size(o2.size(), x2.size(), "minimax_path_loss second block");
  PathLoss out;
  out.method = PathMethod::kMinimaxClosedForm;
  out.origin.assign(o1.begin(), o1.end());
  out.origin.insert(out.origin.end(), o2.begin(), o2.end());
  out.endpoint.assign(x1.begin(), x1.end());
  out.endpoint.insert(out.endpoint.end(), x2.begin(), x2.end());
  out.value = V(x1, o2) - V(o1, x2);
  if (!std::isfinite(out.value)) throw NumericError("minimax_path_loss: non-finite value", out.endpoint);
  return out;
}

}  // namespace omg
