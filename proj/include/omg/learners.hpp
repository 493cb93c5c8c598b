// Copyright 2026 The OMG Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "omg/maps.hpp"

namespace omg {

enum class LearnerKind { kOgd, kOmod, kOmomd };
const char* to_string(LearnerKind k);

/// Projection links map onto the learner's region; the identity link leaves
/// the accumulator unconstrained.
enum class LinkKind { kProjection, kIdentity };

struct LearnerState {
  LearnerKind kind = LearnerKind::kOmod;
  Vec x;
  Vec theta;  // OMoMD dual accumulator
  double eta = 0.0;
  LinkKind link = LinkKind::kProjection;
  FeasibleRegion region;
  bool raw = false;  // skip projection in OGD / OMoD
  std::size_t t = 1;

  /// "euclidean_ball", "euclidean_box", "euclidean_orthant" or "identity".
  std::string link_name() const;
};

struct StepRecord {
  std::size_t t = 0;
  Vec x_t;
  Vec z_t;
  Vec o_t;
  std::ptrdiff_t game_index = -1;
};

/// B / (L sqrt(2T)).
double default_eta(double B, double L, std::size_t T);

/// x_1 = 0 if feasible, else the projection of 0; theta_1 = 0.
LearnerState make_learner(LearnerKind kind, const FeasibleRegion& region, double eta,
                          LinkKind link = LinkKind::kProjection, bool raw = false);

/// x <- Proj(x - eta z) (no projection when raw).
LearnerState ogd_step(LearnerState state, std::span<const double> z);

std::pair<LearnerState, StepRecord> omod_step(LearnerState state, const GameMap& map);

/// theta <- theta - eta z; x <- g(theta).
std::pair<LearnerState, StepRecord> omomd_step(LearnerState state, const GameMap& map);

struct MapChoice {
  const GameMap* map = nullptr;
  std::ptrdiff_t index = -1;
};

/// Called with (t, x_t) before the learner moves, so an adversary may react.
using MapProvider = std::function<MapChoice(std::size_t, std::span<const double>)>;

/// T rounds of play. Record t holds x_t, z_t = F_t(x_t) and o_t = x_{t-1}
/// (o_1 = x_1).
std::vector<StepRecord> run_online(LearnerState learner, const MapProvider& maps, std::size_t T);

}  // namespace omg
