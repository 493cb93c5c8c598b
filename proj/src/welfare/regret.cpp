// Copyright 2026 The OMG Authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>

#include "omg/quadrature.hpp"
#include "omg/welfare.hpp"

namespace omg {

double triangle_area(std::span<const double> o, std::span<const double> x, std::span<const double> u) {
  const Vec a = sub(x, o);
  const Vec b = sub(u, o);
  const double aa = dot(a, a);
  const double bb = dot(b, b);
  const double ab = dot(a, b);
  // Lagrange identity; clamp the rounding residue of collinear inputs.
  return 0.5 * std::sqrt(std::max(0.0, aa * bb - ab * ab));
}

double stokes_band(const ConstantsEstimate& c, std::span<const double> o, std::span<const double> x,
                   std::span<const double> u) {
  const double area = triangle_area(o, x, u);
  if (area < 1e-15) return 0.0;
  return 2.0 * std::sqrt(2.0 * (c.beta * c.beta + c.L * c.gamma)) * area;
}

double stokes_band(const GameMap& map, std::span<const double> o, std::span<const double> x,
                   std::span<const double> u, std::size_t samples, std::uint64_t seed) {
  if (triangle_area(o, x, u) < 1e-15) return 0.0;
  std::vector<Vec> verts{Vec(o.begin(), o.end()), Vec(x.begin(), x.end()), Vec(u.begin(), u.end())};
  const FeasibleRegion box = bounding_box(verts);
  return stokes_band(estimate_constants(map, box, samples, seed, verts), o, x, u);
}

RegretPair regret_pair(const GameMap& map, std::span<const double> o, std::span<const double> x,
                       std::span<const double> u, int nodes) {
  RegretPair r;
  r.regret1_exact = path_integral(map, u, x, nodes).value;
  r.regret2_exact = path_integral(map, o, x, nodes).value - path_integral(map, o, u, nodes).value;

  const Vec fx = evaluate(map, x);
  const Vec fo = evaluate(map, o);
  r.regret1_bound = dot(fx, sub(x, u));
  r.regret2_bound = dot(fx, sub(x, o)) - dot(fo, sub(u, o));
  r.stokes_band = stokes_band(map, o, x, u);
  return r;
}

WelfareDecomposition welfare_and_decomposition(const GameMap& map, std::span<const double> o,
                                               std::span<const double> x, int nodes) {
  if (!map.has_players()) {
    throw std::invalid_argument("welfare_and_decomposition: map '" + map.name + "' has no players");
  }
  WelfareDecomposition w;
  w.W = -total_cost(map, x);
  w.W_o = -total_cost(map, o);
  w.W_auto = -path_integral(map, o, x, nodes).value;

  const Vec d = sub(x, o);
  for (const PlayerCost& p : map.players) {
    const auto integrand = [&](double t) {
      Vec v = lerp(o, x, t);
      double acc = 0.0;
      for (std::size_t j = 0; j < map.dimension; ++j) {
        if ((j >= p.begin && j < p.end) || d[j] == 0.0) continue;
        const double vj = v[j];
        const double h = std::max(1e-6, 1e-6 * std::abs(vj));
        v[j] = vj + h;
        const double cp = p.cost(v);
        v[j] = vj - h;
        const double cm = p.cost(v);
        v[j] = vj;
        acc -= (cp - cm) / (2.0 * h) * d[j];
      }
      return acc;
    };
    w.cross_terms += integrate(integrand, 0.0, 1.0, nodes, map.quadrature_segments);
  }
  return w;
}

}  // namespace omg
