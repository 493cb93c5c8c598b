// Copyright 2026 The OMG Authors.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <tuple>

#include "omg/learners.hpp"

namespace omg {

const char* to_string(LearnerKind k) {
  switch (k) {
    case LearnerKind::kOgd:
      return "ogd";
    case LearnerKind::kOmod:
      return "omod";
    case LearnerKind::kOmomd:
      return "omomd";
  }
  return "unknown";
}

std::string LearnerState::link_name() const {
  if (link == LinkKind::kIdentity) return "identity";
  switch (region.kind()) {
    case FeasibleRegion::Kind::kL2Ball:
      return "euclidean_ball";
    case FeasibleRegion::Kind::kBox:
      return "euclidean_box";
    case FeasibleRegion::Kind::kNonnegOrthant:
      return "euclidean_orthant";
  }
  return "unknown";
}

double default_eta(double B, double L, std::size_t T) {
  if (!(B > 0.0) || !(L > 0.0) || T < 1) {
    throw std::invalid_argument("default_eta: B, L and T must be positive");
  }
  return B / (L * std::sqrt(2.0 * static_cast<double>(T)));
}

LearnerState make_learner(LearnerKind kind, const FeasibleRegion& region, double eta, LinkKind link,
                          bool raw) {
  if (!(eta > 0.0) || !std::isfinite(eta)) throw std::invalid_argument("learner: eta must be positive");
  LearnerState s;
  s.kind = kind;
  s.region = region;
  s.eta = eta;
  s.link = link;
  s.raw = raw;
  const Vec zero(region.dimension(), 0.0);
  s.x = region.contains(zero) ? zero : region.project(zero);
  s.theta = zero;
  return s;
}

namespace {

Vec gradient_move(const LearnerState& s, std::span<const double> z) {
  Vec next = axpy(s.x, -s.eta, z);
  return s.raw ? next : s.region.project(next);
}

StepRecord record_for(const LearnerState& s, const Vec& z) {
  StepRecord r;
  r.t = s.t;
  r.x_t = s.x;
  r.z_t = z;
  return r;
}

}  // namespace

LearnerState ogd_step(LearnerState state, std::span<const double> z) {
  if (state.kind != LearnerKind::kOgd) throw std::invalid_argument("ogd_step: learner is not OGD");
  require_same_size(state.x.size(), z.size(), "ogd_step");
  state.x = gradient_move(state, z);
  ++state.t;
  return state;
}

std::pair<LearnerState, StepRecord> omod_step(LearnerState state, const GameMap& map) {
  if (state.kind != LearnerKind::kOmod) throw std::invalid_argument("omod_step: learner is not OMoD");
  const Vec z = evaluate(map, state.x);
  StepRecord rec = record_for(state, z);
  state.x = gradient_move(state, z);
  ++state.t;
  return {std::move(state), std::move(rec)};
}

std::pair<LearnerState, StepRecord> omomd_step(LearnerState state, const GameMap& map) {
  if (state.kind != LearnerKind::kOmomd) throw std::invalid_argument("omomd_step: learner is not OMoMD");
  const Vec z = evaluate(map, state.x);
  StepRecord rec = record_for(state, z);
  state.theta = axpy(state.theta, -state.eta, z);
  state.x = state.link == LinkKind::kIdentity ? state.theta : state.region.project(state.theta);
  ++state.t;
  return {std::move(state), std::move(rec)};
}

std::vector<StepRecord> run_online(LearnerState learner, const MapProvider& maps, std::size_t T) {
  if (T < 1) throw std::invalid_argument("run_online: T must be >= 1");
  std::vector<StepRecord> trace;
  trace.reserve(T);
  Vec prev = learner.x;
  for (std::size_t t = 1; t <= T; ++t) {
    const MapChoice choice = maps(t, learner.x);
    if (choice.map == nullptr) throw std::invalid_argument("run_online: provider returned no map");
    StepRecord rec;
    switch (learner.kind) {
      case LearnerKind::kOgd: {
        const Vec z = evaluate(*choice.map, learner.x);
        rec = record_for(learner, z);
        learner = ogd_step(std::move(learner), z);
        break;
      }
      case LearnerKind::kOmod:
        std::tie(learner, rec) = omod_step(std::move(learner), *choice.map);
        break;
      case LearnerKind::kOmomd:
        std::tie(learner, rec) = omomd_step(std::move(learner), *choice.map);
        break;
    }
    rec.t = t;
    rec.o_t = prev;
    rec.game_index = choice.index;
    prev = rec.x_t;
    trace.push_back(std::move(rec));
  }
  return trace;
}

}  // namespace omg
