// Copyright 2026 The OMG Authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "omg/maps.hpp"

namespace omg {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kHolds:
      return "holds";
    case CheckStatus::kRefuted:
      return "refuted";
    case CheckStatus::kUntested:
      return "untested";
  }
  return "unknown";
}

namespace {

constexpr double kRefuteTol = 1e-9;

double player_cost(const PlayerCost& p, std::span<const double> s) {
  const double c = p.cost(s);
  if (!std::isfinite(c)) throw NumericError("player cost is non-finite", Vec(s.begin(), s.end()));
  return c;
}

/// sum_i C_i(s*_i, s_{-i})
double unilateral_sum(const GameMap& map, const Vec& s, const Vec& s_star) {
  double total = 0.0;
  Vec mixed = s;
  for (const PlayerCost& p : map.players) {
    std::copy(s_star.begin() + p.begin, s_star.begin() + p.end, mixed.begin() + p.begin);
    total += player_cost(p, mixed);
    std::copy(s.begin() + p.begin, s.begin() + p.end, mixed.begin() + p.begin);
  }
  return total;
}

void validate_players(const GameMap& map) {
  if (!map.has_players()) {
    throw std::invalid_argument("classify_game: map '" + map.name + "' has no player structure");
  }
  std::vector<int> owner(map.dimension, 0);
  for (const PlayerCost& p : map.players) {
    if (p.begin >= p.end || p.end > map.dimension || !p.cost) {
      throw std::invalid_argument("classify_game: malformed player block");
    }
    for (std::size_t k = p.begin; k < p.end; ++k) ++owner[k];
  }
  if (std::any_of(owner.begin(), owner.end(), [](int c) { return c != 1; })) {
    throw std::invalid_argument("classify_game: player blocks must partition the coordinates");
  }
}

PropertyCheck check_smooth(const GameMap& map, const ClassifyOptions& opts) {
  PropertyCheck chk;
  if (opts.smooth_params) {
    const auto [lambda, mu] = *opts.smooth_params;
    auto test = [&](const Vec& s, const Vec& s_star) -> bool {
      const double lhs = unilateral_sum(map, s, s_star);
      const double rhs = lambda * total_cost(map, s_star) + mu * total_cost(map, s);
      ++chk.sample_count;
      if (lhs - rhs > kRefuteTol) {
        chk.status = CheckStatus::kRefuted;
        chk.witness = {s, s_star};
        chk.violation = lhs - rhs;
        std::ostringstream os;
        os << "sum_i C_i(s*_i, s_-i) = " << lhs << " exceeds " << lambda << " C(s*) + " << mu
           << " C(s) = " << rhs;
        chk.reason = os.str();
        return false;
      }
      return true;
    };
    for (const SmoothWitness& w : opts.smooth_witnesses) {
      if (!test(w.s, w.s_star)) return chk;
    }
    const auto a = sample_region(map.region, opts.smooth_pairs, opts.seed, 20);
    const auto b = sample_region(map.region, opts.smooth_pairs, opts.seed, 21);
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (!test(a[k], b[k])) return chk;
    }
    chk.status = CheckStatus::kHolds;
    std::ostringstream os;
    os << "(" << lambda << ", " << mu << ")-smooth on " << chk.sample_count << " sampled pairs";
    chk.reason = os.str();
    return chk;
  }

  // Without parameters a witness can still refute every (lambda, mu): if both
  // outcomes cost nothing, the right-hand side is zero for any choice.
  for (const SmoothWitness& w : opts.smooth_witnesses) {
    ++chk.sample_count;
    const double cs = total_cost(map, w.s);
    const double cstar = total_cost(map, w.s_star);
    const double lhs = unilateral_sum(map, w.s, w.s_star);
    if (std::abs(cs) <= 1e-12 && std::abs(cstar) <= 1e-12 && lhs > kRefuteTol) {
      chk.status = CheckStatus::kRefuted;
      chk.witness = {w.s, w.s_star};
      chk.violation = lhs;
      std::ostringstream os;
      os << "C(s) = C(s*) = 0 but sum_i C_i(s*_i, s_-i) = " << lhs << ", so no (lambda, mu) works";
      chk.reason = os.str();
      return chk;
    }
  }
  chk.reason = "no smoothness parameters supplied";
  return chk;
}

PropertyCheck check_convex(const GameMap& map, const ClassifyOptions& opts) {
  PropertyCheck chk;
  auto test = [&](std::size_t pi, const Vec& s, const Vec& sp) -> bool {
    const PlayerCost& p = map.players[pi];
    const Vec fs = evaluate(map, s);
    const Vec fp = evaluate(map, sp);
    double ip = 0.0;
    for (std::size_t k = p.begin; k < p.end; ++k) ip += (fs[k] - fp[k]) * (s[k] - sp[k]);
    ++chk.sample_count;
    if (ip < -kRefuteTol) {
      chk.status = CheckStatus::kRefuted;
      chk.player = pi;
      chk.witness = {s, sp};
      chk.violation = -ip;
      std::ostringstream os;
      os << "player " << pi << ": own-gradient secant product " << ip << " < 0";
      chk.reason = os.str();
      return false;
    }
    return true;
  };

  for (const ConvexWitness& w : opts.convex_witnesses) {
    if (w.player >= map.players.size()) throw std::invalid_argument("convexity witness: bad player");
    if (!test(w.player, w.s, w.s_prime)) return chk;
  }
  const auto base = sample_region(map.region, opts.samples, opts.seed, 30);
  const auto other = sample_region(map.region, opts.samples, opts.seed, 31);
  for (std::size_t pi = 0; pi < map.players.size(); ++pi) {
    const PlayerCost& p = map.players[pi];
    for (std::size_t k = 0; k < base.size(); ++k) {
      Vec sp = base[k];
      std::copy(other[k].begin() + p.begin, other[k].begin() + p.end, sp.begin() + p.begin);
      if (!test(pi, base[k], sp)) return chk;
    }
  }
  chk.status = CheckStatus::kHolds;
  chk.reason = "own-gradient monotone for every player on " + std::to_string(chk.sample_count) + " segments";
  return chk;
}

PropertyCheck check_social(const GameMap& map, const ClassifyOptions& opts) {
  PropertyCheck chk;
  if (!opts.social_weights) {
    chk.reason = "no social weights supplied";
    return chk;
  }
  const Vec& w = *opts.social_weights;
  require_same_size(map.players.size(), w.size(), "social weights");
  if (std::any_of(w.begin(), w.end(), [](double v) { return !(v > 0.0); })) {
    throw std::invalid_argument("social weights must be positive");
  }
  if (std::abs(std::accumulate(w.begin(), w.end(), 0.0) - 1.0) > 1e-9) {
    throw std::invalid_argument("social weights must sum to 1");
  }

  const ScalarFn g = [&](std::span<const double> s) {
    double v = 0.0;
    for (std::size_t i = 0; i < map.players.size(); ++i) v += w[i] * player_cost(map.players[i], s);
    return v;
  };

  auto tol_for = [](const Matrix& H) {
    double scale = 0.0;
    for (double v : H.data()) scale = std::max(scale, std::abs(v));
    return 1e-6 * (1.0 + scale);
  };

  auto test = [&](const Vec& s) -> bool {
    ++chk.sample_count;
    const Matrix Hg = fd_hessian(g, s);
    const double gmin = symmetric_eigenvalues(symmetric_part(Hg)).front();
    if (gmin < -tol_for(Hg)) {
      chk.status = CheckStatus::kRefuted;
      chk.witness = {s};
      chk.violation = -gmin;
      chk.reason = "weighted cost sum has Hessian eigenvalue " + std::to_string(gmin);
      return false;
    }
    for (std::size_t i = 0; i < map.players.size(); ++i) {
      const PlayerCost& p = map.players[i];
      std::vector<std::size_t> others;
      for (std::size_t k = 0; k < map.dimension; ++k) {
        if (k < p.begin || k >= p.end) others.push_back(k);
      }
      if (others.empty()) continue;
      const Matrix H = fd_hessian([&p](std::span<const double> x) { return player_cost(p, x); }, s);
      const double top = symmetric_eigenvalues(symmetric_part(H).principal(others)).back();
      if (top > tol_for(H)) {
        chk.status = CheckStatus::kRefuted;
        chk.player = i;
        chk.witness = {s};
        chk.violation = top;
        std::ostringstream os;
        os << "player " << i << " cost is not concave in the others' strategies (eigenvalue " << top << ")";
        chk.reason = os.str();
        return false;
      }
    }
    return true;
  };

  for (const Vec& s : opts.social_witnesses) {
    require_same_size(map.dimension, s.size(), "social witness");
    if (!test(s)) return chk;
  }
  for (const Vec& s : sample_region(map.region, opts.samples, opts.seed, 40)) {
    if (!test(s)) return chk;
  }
  chk.status = CheckStatus::kHolds;
  std::ostringstream os;
  os << "weights (";
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? ", " : "") << w[i];
  os << ") on " << chk.sample_count << " points";
  chk.reason = os.str();
  return chk;
}

}  // namespace

double total_cost(const GameMap& map, std::span<const double> s) {
  double c = 0.0;
  for (const PlayerCost& p : map.players) c += player_cost(p, s);
  return c;
}

Matrix fd_hessian(const ScalarFn& f, std::span<const double> x, double h) {
  const std::size_t n = x.size();
  Matrix H(n, n);
  Vec y(x.begin(), x.end());
  Vec step(n);
  for (std::size_t j = 0; j < n; ++j) step[j] = h * std::max(1.0, std::abs(x[j]));
  const double f0 = f(y);
  for (std::size_t j = 0; j < n; ++j) {
    y[j] = x[j] + step[j];
    const double fp = f(y);
    y[j] = x[j] - step[j];
    const double fm = f(y);
    y[j] = x[j];
    H(j, j) = (fp - 2.0 * f0 + fm) / (step[j] * step[j]);
    for (std::size_t k = j + 1; k < n; ++k) {
      double acc = 0.0;
      for (int sj : {1, -1}) {
        for (int sk : {1, -1}) {
          y[j] = x[j] + sj * step[j];
          y[k] = x[k] + sk * step[k];
          acc += sj * sk * f(y);
        }
      }
      y[j] = x[j];
      y[k] = x[k];
      H(j, k) = H(k, j) = acc / (4.0 * step[j] * step[k]);
    }
  }
  return H;
}

PropertyReport classify_game(const GameMap& map, const ClassifyOptions& opts) {
  validate_players(map);
  PropertyReport rep;
  if (opts.smooth_params) {
    rep.smooth_lambda = opts.smooth_params->first;
    rep.smooth_mu = opts.smooth_params->second;
  }
  rep.smooth = check_smooth(map, opts);
  rep.convex = check_convex(map, opts);
  rep.monotone = certify_monotone(map, opts.samples, opts.seed, opts.monotone_witnesses);
  rep.socially_convex = check_social(map, opts);
  return rep;
}

}  // namespace omg
