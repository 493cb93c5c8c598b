// Copyright 2026 The OMG Authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>

#include "omg/harness.hpp"

namespace omg {

double linear_regret(const std::vector<StepRecord>& trace, std::span<const double> u) {
  double r = 0.0;
  for (const StepRecord& s : trace) r += dot(s.z_t, sub(s.x_t, u));
  return r;
}

double best_linear_regret(const std::vector<StepRecord>& trace, double B) {
  if (trace.empty()) return 0.0;
  Vec Z(trace.front().z_t.size(), 0.0);
  double played = 0.0;
  for (const StepRecord& s : trace) {
    Z = add(Z, s.z_t);
    played += dot(s.z_t, s.x_t);
  }
  // min over |u| <= B of <Z, u> is -B |Z|.
  return played + B * norm(Z);
}

std::vector<Vec> sign_flip_sequence(std::size_t T, std::size_t dim, double B, double L, double eta) {
  if (dim < 1) throw std::invalid_argument("sign_flip_sequence: dim must be >= 1");
  const auto hold = std::min<std::size_t>(T, static_cast<std::size_t>(std::llround(B / (eta * L))));
  std::vector<Vec> zs;
  zs.reserve(T);
  for (std::size_t t = 0; t < T; ++t) {
    Vec z(dim, 0.0);
    if (t < T - hold) {
      z[0] = (t % 2 == 0) ? L : -L;
    } else {
      z[0] = L;
    }
    zs.push_back(std::move(z));
  }
  return zs;
}

namespace {

std::vector<StepRecord> play(const std::vector<GameMap>& maps, const FeasibleRegion& ball, double eta) {
  const MapProvider provider = [&maps](std::size_t t, std::span<const double>) {
    return MapChoice{&maps[t - 1], static_cast<std::ptrdiff_t>(t - 1)};
  };
  return run_online(make_learner(LearnerKind::kOmomd, ball, eta), provider, maps.size());
}

double measured_regret(const std::vector<StepRecord>& trace, const RegretBoundConfig& cfg,
                       const FeasibleRegion& ball, std::uint64_t stream) {
  double best = best_linear_regret(trace, cfg.B);
  for (const Vec& u : sample_region(ball, cfg.comparator_samples, cfg.seed, stream)) {
    best = std::max(best, linear_regret(trace, u));
  }
  return best;
}

}  // namespace

RegretBoundReport run_regret_bound(const RegretBoundConfig& cfg) {
  if (!(cfg.B > 0.0) || !(cfg.L > 0.0) || cfg.T < 1 || cfg.dim < 1) {
    throw std::invalid_argument("run_regret_bound: need B, L, T, dim > 0");
  }
  RegretBoundReport rep;
  rep.config = cfg;
  rep.bound = cfg.B * cfg.L * std::sqrt(2.0 * static_cast<double>(cfg.T));
  rep.eta = default_eta(cfg.B, cfg.L, cfg.T);
  const FeasibleRegion ball = FeasibleRegion::l2_ball(cfg.dim, cfg.B);

  // Random affine maps scaled so that |F_t| <= L on the ball.
  for (std::size_t r = 0; r < cfg.random_sequences; ++r) {
    CounterRng rng(cfg.seed, 1000 + r);
    std::vector<GameMap> maps;
    maps.reserve(cfg.T);
    for (std::size_t t = 0; t < cfg.T; ++t) {
      Matrix A(cfg.dim, cfg.dim);
      Vec b(cfg.dim);
      for (std::size_t i = 0; i < cfg.dim; ++i)
        for (std::size_t k = 0; k < cfg.dim; ++k) A(i, k) = rng.normal();
      for (auto& v : b) v = rng.normal();
      const double s = cfg.L / (spectral_norm(A) * cfg.B + norm(b));
      A *= s;
      maps.push_back(make_affine_map("random_affine", std::move(A), scale(s, b), ball));
    }
    rep.random_max = std::max(rep.random_max, measured_regret(play(maps, ball, rep.eta), cfg, ball, 2000 + r));
  }

  std::vector<GameMap> flips;
  flips.reserve(cfg.T);
  for (const Vec& z : sign_flip_sequence(cfg.T, cfg.dim, cfg.B, cfg.L, rep.eta)) {
    flips.push_back(make_affine_map("sign_flip", Matrix(cfg.dim, cfg.dim), z, ball));
  }
  rep.sign_flip = measured_regret(play(flips, ball, rep.eta), cfg, ball, 3000);

  rep.measured_max = std::max(rep.random_max, rep.sign_flip);
  rep.tightness = rep.sign_flip / rep.bound;
  return rep;
}

Json to_json(const RegretBoundReport& r) {
  Json j;
  j["B"] = r.config.B;
  j["L"] = r.config.L;
  j["T"] = r.config.T;
  j["dim"] = r.config.dim;
  j["eta"] = r.eta;
  j["bound"] = r.bound;
  j["random_max"] = r.random_max;
  j["sign_flip"] = r.sign_flip;
  j["measured_max"] = r.measured_max;
  j["tightness"] = r.tightness;
  j["within_bound"] = r.within_bound();
  j["tight"] = r.tight();
  return j;
}

}  // namespace omg
