// Copyright 2026 The OMG Authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>

#include "omg/harness.hpp"

namespace omg {

CounterexampleReport run_counterexample(std::size_t samples, std::uint64_t seed) {
  CounterexampleReport r;
  const GameMap map = make_counterexample();
  r.certificate = certify_monotone(map, samples, seed);

  const Vec origin{0.0, 0.0};
  for (const Vec& x : sample_region(map.region, samples, seed, 50)) {
    const double q = path_integral(map, origin, x).value;
    r.max_loss_error = std::max(r.max_loss_error, std::abs(q - counterexample_loss(x[0], x[1])));
    ++r.loss_points;
  }

  r.mid = lerp(r.x0, r.xf, 0.5);
  r.f_x0 = path_integral(map, origin, r.x0).value;
  r.f_xf = path_integral(map, origin, r.xf).value;
  r.f_mid = path_integral(map, origin, r.mid).value;
  return r;
}

Json to_json(const CounterexampleReport& r) {
  Json j;
  j["certificate"] = to_json(r.certificate);
  j["monotone"] = r.monotone();
  j["loss_points"] = r.loss_points;
  j["max_loss_error"] = r.max_loss_error;
  j["x0"] = r.x0;
  j["xf"] = r.xf;
  j["mid"] = r.mid;
  j["f_x0"] = r.f_x0;
  j["f_xf"] = r.f_xf;
  j["f_mid"] = r.f_mid;
  j["quasi_convexity_violated"] = r.quasi_convexity_violated();
  j["passed"] = r.passed();
  return j;
}

}  // namespace omg
