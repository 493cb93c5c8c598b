// Copyright 2026 The OMG Authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <sstream>
#include <thread>

#include "omg/harness.hpp"

namespace omg {

std::vector<MlnInstance> mln_pool(std::uint64_t pool_seed, std::size_t size) {
  if (size < 1) throw std::invalid_argument("mln_pool: size must be >= 1");
  std::vector<MlnInstance> pool;
  pool.reserve(size);
  for (std::size_t k = 0; k < size; ++k) pool.push_back(make_mln(pool_seed * size + k));
  return pool;
}

std::size_t farthest_equilibrium_adversary(const std::vector<MlnInstance>& pool, std::span<const double> x) {
  if (pool.empty()) throw std::invalid_argument("adversary: empty pool");
  std::size_t best = 0;
  double best_d = -1.0;
  for (std::size_t k = 0; k < pool.size(); ++k) {
    const double d = distance(pool[k].equilibrium.x_star, x);
    if (d > best_d) {
      best_d = d;
      best = k;
    }
  }
  return best;
}

EquilibriumResult approximate_uT(const std::vector<MlnInstance>& pool) {
  if (pool.empty()) throw std::invalid_argument("approximate_uT: empty pool");
  const std::size_t n = pool.front().n;
  Matrix A(n, n);
  Vec b(n, 0.0);
  for (const auto& inst : pool) {
    require_same_size(n, inst.n, "approximate_uT instance");
    A += inst.A;
    b = add(b, inst.b);
  }
  const double w = 1.0 / static_cast<double>(pool.size());
  A *= w;
  b = scale(w, b);
  const GameMap avg = make_affine_map("averaged_network", A, b, pool.front().map.region);
  EquilibriumResult r = solve_equilibrium(avg, avg.region, {1e-10, 200000});
  if (!r.converged) {
    throw std::runtime_error("approximate_uT: solver stopped at residual " + format_double(r.natural_residual));
  }
  return r;
}

namespace {

void score(RegretTrace& tr, const std::vector<StepRecord>& records,
           const std::function<const GameMap&(std::size_t)>& map_of, int nodes) {
  tr.steps.reserve(records.size());
  double sum1 = 0.0;
  double sum2 = 0.0;
  for (const StepRecord& rec : records) {
    const std::size_t k = static_cast<std::size_t>(std::max<std::ptrdiff_t>(0, rec.game_index));
    const RegretPair rp = regret_pair(map_of(k), rec.o_t, rec.x_t, tr.u_T, nodes);
    sum1 += rp.regret1_exact;
    sum2 += rp.regret2_exact;
    TraceStep s;
    s.t = rec.t;
    s.game_idx = k;
    s.regret1 = rp.regret1_exact;
    s.regret2 = rp.regret2_exact;
    s.regret1_bound = rp.regret1_bound;
    s.band = rp.stokes_band;
    s.avg_regret1 = sum1 / static_cast<double>(rec.t);
    s.avg_regret2 = sum2 / static_cast<double>(rec.t);
    s.x = rec.x_t;
    tr.steps.push_back(std::move(s));
  }
}

double region_radius(const FeasibleRegion& r) {
  if (r.kind() == FeasibleRegion::Kind::kL2Ball) return r.radius();
  double s = 0.0;
  for (std::size_t i = 0; i < r.dimension(); ++i) {
    const double m = std::max(std::abs(r.lower()[i]), std::abs(r.upper()[i]));
    s += m * m;
  }
  return std::sqrt(s);
}

}  // namespace

RegretTrace run_pool_trace(const std::vector<MlnInstance>& pool, const Vec& u, const ExperimentConfig& cfg,
                           std::uint64_t seed) {
  if (pool.empty()) throw std::invalid_argument("run_pool_trace: empty pool");
  if (cfg.T < 1) throw std::invalid_argument("run_pool_trace: T must be >= 1");
  const FeasibleRegion& region = pool.front().map.region;

  RegretTrace tr;
  tr.u_T = u;
  tr.learner = cfg.learner;
  tr.seed = seed;
  for (const auto& inst : pool) tr.B = std::max(tr.B, 2.0 * norm(inst.equilibrium.x_star));
  if (tr.B <= 0.0) tr.B = 1.0;
  for (const auto& inst : pool) {
    tr.L = std::max(tr.L, spectral_norm(inst.A) * tr.B + norm(inst.b));
  }
  if (tr.L <= 0.0) tr.L = 1.0;
  tr.auto_eta = !cfg.eta.has_value();
  tr.eta = cfg.eta ? *cfg.eta : default_eta(tr.B, tr.L, cfg.T);

  const MapProvider adversary = [&pool](std::size_t, std::span<const double> x) {
    const std::size_t k = farthest_equilibrium_adversary(pool, x);
    return MapChoice{&pool[k].map, static_cast<std::ptrdiff_t>(k)};
  };
  const auto records = run_online(make_learner(cfg.learner, region, tr.eta), adversary, cfg.T);
  score(tr, records, [&pool](std::size_t k) -> const GameMap& { return pool[k].map; }, cfg.nodes);
  return tr;
}

RegretTrace run_fig4(const ExperimentConfig& cfg, std::uint64_t seed) {
  const auto pool = mln_pool(seed, cfg.pool_size);
  const EquilibriumResult u = approximate_uT(pool);
  RegretTrace tr = run_pool_trace(pool, u.x_star, cfg, seed);
  tr.u_residual = u.natural_residual;
  return tr;
}

std::vector<RegretTrace> run_fig4_sweep(const ExperimentConfig& cfg) {
  std::vector<RegretTrace> out(cfg.seeds.size());
  std::vector<std::exception_ptr> errors(cfg.seeds.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < cfg.seeds.size(); i = next++) {
      try {
        out[i] = run_fig4(cfg, cfg.seeds[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t jobs = std::clamp<std::size_t>(cfg.jobs, 1, std::max<std::size_t>(1, cfg.seeds.size()));
  std::vector<std::thread> threads;
  for (std::size_t j = 1; j < jobs; ++j) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

RegretTrace run_custom(const ExperimentConfig& cfg, std::uint64_t seed) {
  if (cfg.pool.empty()) throw std::invalid_argument("run_custom: empty pool");
  std::vector<MlnInstance> pool;
  for (const GameSpec& spec : cfg.pool) {
    MlnInstance inst;
    inst.map = make_game(spec);
    if (!inst.map.affine) {
      throw std::invalid_argument("run_custom: game '" + spec.id + "' is not affine");
    }
    if (!pool.empty() && !(inst.map.region == pool.front().map.region)) {
      throw std::invalid_argument("run_custom: pool games must share one region");
    }
    inst.A = inst.map.affine->A;
    inst.b = inst.map.affine->b;
    inst.n = inst.map.dimension;
    inst.seed = seed;
    inst.equilibrium = solve_equilibrium(inst.map, inst.map.region, {1e-10, 200000});
    pool.push_back(std::move(inst));
  }
  const EquilibriumResult u = approximate_uT(pool);
  RegretTrace tr = run_pool_trace(pool, u.x_star, cfg, seed);
  tr.u_residual = u.natural_residual;
  return tr;
}

RegretTrace run_single(const GameMap& map, const ExperimentConfig& cfg, std::uint64_t seed) {
  if (cfg.T < 1) throw std::invalid_argument("run_single: T must be >= 1");
  const EquilibriumResult eq = solve_equilibrium(map, map.region);
  RegretTrace tr;
  tr.u_T = eq.x_star;
  tr.u_method = "equilibrium";
  tr.u_residual = eq.natural_residual;
  tr.learner = cfg.learner;
  tr.seed = seed;
  if (map.region.bounded()) {
    tr.B = region_radius(map.region);
    tr.L = estimate_constants(map, map.region, 256, seed).L;
  } else {
    tr.B = std::max(2.0 * norm(eq.x_star), 1.0);
    if (!map.affine) throw std::invalid_argument("run_single: unbounded region needs an affine map");
    tr.L = map.affine->op_norm * tr.B + norm(map.affine->b);
  }
  if (tr.B <= 0.0) tr.B = 1.0;
  if (tr.L <= 0.0) tr.L = 1.0;
  tr.auto_eta = !cfg.eta.has_value();
  tr.eta = cfg.eta ? *cfg.eta : default_eta(tr.B, tr.L, cfg.T);

  const MapProvider fixed = [&map](std::size_t, std::span<const double>) { return MapChoice{&map, 0}; };
  const auto records = run_online(make_learner(cfg.learner, map.region, tr.eta), fixed, cfg.T);
  score(tr, records, [&map](std::size_t) -> const GameMap& { return map; }, cfg.nodes);
  return tr;
}

Fig4Check check_fig4(const RegretTrace& trace, std::size_t T) {
  Fig4Check c;
  c.rows_match_T = trace.steps.size() == T;
  if (trace.steps.empty()) return c;
  const TraceStep& at10 = trace.steps[std::min<std::size_t>(9, trace.steps.size() - 1)];
  const TraceStep& last = trace.steps.back();
  c.avg1_at_10 = at10.avg_regret1;
  c.avg2_at_10 = at10.avg_regret2;
  c.avg1_final = last.avg_regret1;
  c.avg2_final = last.avg_regret2;
  c.decay1 = c.avg1_final <= 0.2 * c.avg1_at_10;
  c.decay2 = c.avg2_final <= 0.2 * c.avg2_at_10;

  double band_sum = 0.0;
  for (const TraceStep& s : trace.steps) {
    band_sum += s.band;
    const double t = static_cast<double>(s.t);
    if (std::abs(s.avg_regret1 - s.avg_regret2) > band_sum / t + 1e-6) {
      if (c.band_violations++ == 0) c.first_band_violation = s.t;
    }
    c.envelope_C = std::max(c.envelope_C, s.avg_regret1 * std::sqrt(t));
  }
  c.envelope_limit = 3.0 * trace.B * trace.L * std::sqrt(2.0);
  return c;
}

std::string trace_csv(const RegretTrace& trace) {
  std::ostringstream os;
  os << "t,game_idx,regret1,regret2,regret1_bound,band,avg_regret1,avg_regret2\n";
  for (const TraceStep& s : trace.steps) {
    os << s.t << ',' << s.game_idx << ',' << format_double(s.regret1) << ',' << format_double(s.regret2) << ','
       << format_double(s.regret1_bound) << ',' << format_double(s.band) << ',' << format_double(s.avg_regret1)
       << ',' << format_double(s.avg_regret2) << '\n';
  }
  return os.str();
}

Json to_json(const Fig4Check& c) {
  Json j;
  j["avg_regret1_at_10"] = c.avg1_at_10;
  j["avg_regret1_final"] = c.avg1_final;
  j["avg_regret2_at_10"] = c.avg2_at_10;
  j["avg_regret2_final"] = c.avg2_final;
  j["decay_regret1"] = c.decay1;
  j["decay_regret2"] = c.decay2;
  j["band_violations"] = c.band_violations;
  if (c.band_violations > 0) j["first_band_violation_t"] = c.first_band_violation;
  j["envelope_C"] = c.envelope_C;
  j["envelope_limit"] = c.envelope_limit;
  j["rows_match_T"] = c.rows_match_T;
  j["passed"] = c.passed();
  return j;
}

Json trace_summary(const RegretTrace& trace) {
  Json j;
  j["seed"] = trace.seed;
  j["learner"] = to_string(trace.learner);
  j["eta"] = trace.eta;
  j["eta_mode"] = trace.auto_eta ? "auto" : "fixed";
  j["B"] = trace.B;
  j["L"] = trace.L;
  j["u_T"] = trace.u_T;
  j["u_T_method"] = trace.u_method;
  j["u_T_residual"] = trace.u_residual;
  j["rows"] = trace.steps.size();
  return j;
}

}  // namespace omg
