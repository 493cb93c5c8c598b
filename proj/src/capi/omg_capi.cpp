// Copyright 2026 The OMG Authors.
// SPDX-License-Identifier: Apache-2.0

#include "omg/omg.h"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>

#include "omg/harness.hpp"

struct omg_game {
  omg::GameSpec spec;
  omg::GameMap map;
  std::optional<omg::VennExample> venn;
};

namespace {

thread_local std::string g_last_error;

omg_status fail(omg_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put(char** out, const std::string& s) {
  if (out != nullptr) *out = dup_string(s);
}

// Runs body and maps exceptions onto status codes.
template <typename Body>
omg_status guarded(Body&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const omg::NumericError& e) {
    return fail(OMG_ERR_NUMERIC, e.what());
  } catch (const omg::IoError& e) {
    return fail(OMG_ERR_IO, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(OMG_ERR_INVALID_ARGUMENT, std::string("json: ") + e.what());
  } catch (const std::invalid_argument& e) {
    return fail(OMG_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::domain_error& e) {
    return fail(OMG_ERR_DOMAIN, e.what());
  } catch (const std::out_of_range& e) {
    return fail(OMG_ERR_DOMAIN, e.what());
  } catch (const std::exception& e) {
    return fail(OMG_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(OMG_ERR_INTERNAL, "unknown error");
  }
}

omg_status require(bool cond, const char* msg) {
  return cond ? OMG_OK : fail(OMG_ERR_INVALID_ARGUMENT, msg);
}

omg_game* build(omg::GameSpec spec) {
  auto* g = new omg_game;
  try {
    g->map = omg::make_game(spec);
    if (spec.id.size() == 6 && spec.id.rfind("venn_", 0) == 0) g->venn = omg::make_venn_example(spec.id[5]);
    g->spec = std::move(spec);
  } catch (...) {
    delete g;
    throw;
  }
  return g;
}

std::filesystem::path out_root(const char* out_dir) {
  return (out_dir != nullptr && *out_dir != '\0') ? std::filesystem::path(out_dir) : omg::output_root();
}

omg::LearnerKind learner_kind(omg_learner l) {
  switch (l) {
    case OMG_LEARNER_OGD:
      return omg::LearnerKind::kOgd;
    case OMG_LEARNER_OMOD:
      return omg::LearnerKind::kOmod;
    case OMG_LEARNER_OMOMD:
      return omg::LearnerKind::kOmomd;
  }
  throw std::invalid_argument("unknown learner");
}

struct SuiteResult {
  bool passed = true;
  omg::Json report;
};

void mark(SuiteResult& r, omg::Json& failed, bool ok, const char* name) {
  if (ok) return;
  r.passed = false;
  for (const auto& f : failed) {
    if (f == name) return;
  }
  failed.push_back(name);
}

SuiteResult fig4_suite(const omg::ExperimentConfig& cfg, const std::filesystem::path& dir) {
  SuiteResult r;
  omg::Json failed = omg::Json::array();
  omg::Json runs = omg::Json::array();
  const auto traces = omg::run_fig4_sweep(cfg);
  for (const auto& tr : traces) {
    const omg::Fig4Check c = omg::check_fig4(tr, cfg.T);
    const std::string file = "seed_" + std::to_string(tr.seed) + ".csv";
    omg::write_text(dir / file, omg::trace_csv(tr));
    omg::Json run = omg::trace_summary(tr);
    run["csv"] = (dir / file).string();
    run["checks"] = omg::to_json(c);
    runs.push_back(std::move(run));
    mark(r, failed, c.decay(), "fig4.decay");
    mark(r, failed, c.band(), "fig4.stokes_band");
    mark(r, failed, c.envelope(), "fig4.envelope");
    mark(r, failed, c.rows_match_T, "fig4.rows");
  }
  r.report["experiment"] = "fig4";
  r.report["config"] = omg::to_json(cfg);
  r.report["runs"] = std::move(runs);
  r.report["failed"] = std::move(failed);
  r.report["passed"] = r.passed;
  omg::write_text(dir / "summary.json", r.report.dump(2) + "\n");
  return r;
}

SuiteResult table1_suite(std::uint64_t seed, const std::filesystem::path& dir) {
  SuiteResult r;
  const omg::Table1Result t = omg::run_table1(500, seed);
  omg::Json failed = omg::Json::array();
  for (const auto& [p, e] : t.mismatches) {
    failed.push_back(std::string("table1.") + omg::kPropertyNames[p] + "." + omg::kVennIds[e]);
  }
  r.passed = t.passed();
  r.report = omg::to_json(t);
  r.report["experiment"] = "table1";
  r.report["seed"] = seed;
  r.report["table"] = omg::table1_text(t);
  r.report["failed"] = std::move(failed);
  omg::write_text(dir / "table1.txt", omg::table1_text(t));
  omg::write_text(dir / "summary.json", r.report.dump(2) + "\n");
  return r;
}

SuiteResult regret_bound_suite(std::uint64_t seed, std::size_t T_override, const std::filesystem::path& dir) {
  SuiteResult r;
  omg::Json failed = omg::Json::array();
  omg::Json runs = omg::Json::array();
  std::vector<std::size_t> horizons{100, 1000};
  if (T_override != 0) horizons = {T_override};
  for (std::size_t T : horizons) {
    omg::RegretBoundConfig c;
    c.T = T;
    c.seed = seed;
    const omg::RegretBoundReport rep = omg::run_regret_bound(c);
    runs.push_back(omg::to_json(rep));
    mark(r, failed, rep.within_bound(), "regret_bound.within_bound");
    mark(r, failed, rep.tight(), "regret_bound.tightness");
  }
  r.report["experiment"] = "regret_bound";
  r.report["seed"] = seed;
  r.report["runs"] = std::move(runs);
  r.report["failed"] = std::move(failed);
  r.report["passed"] = r.passed;
  omg::write_text(dir / "summary.json", r.report.dump(2) + "\n");
  return r;
}

SuiteResult counterexample_suite(std::uint64_t seed, const std::filesystem::path& dir) {
  SuiteResult r;
  const omg::CounterexampleReport c = omg::run_counterexample(1000, seed);
  omg::Json failed = omg::Json::array();
  mark(r, failed, c.monotone(), "counterexample.monotone");
  mark(r, failed, c.loss_matches(), "counterexample.loss");
  mark(r, failed, c.quasi_convexity_violated(), "counterexample.quasi_convexity");
  r.report = omg::to_json(c);
  r.report["experiment"] = "counterexample";
  r.report["seed"] = seed;
  r.report["failed"] = std::move(failed);
  omg::write_text(dir / "summary.json", r.report.dump(2) + "\n");
  return r;
}

}  // namespace

extern "C" {

const char* omg_version(void) { return "0.1.0"; }

const char* omg_last_error(void) { return g_last_error.c_str(); }

void omg_string_free(char* s) { std::free(s); }

omg_status omg_game_create_builtin(const char* id, const char* params_json, omg_game** out) {
  return guarded([&] {
    if (omg_status s = require(id != nullptr && out != nullptr, "id and out must be non-null"); s != OMG_OK) return s;
    omg::Json doc;
    doc["id"] = id;
    if (params_json != nullptr && *params_json != '\0') doc["params"] = omg::Json::parse(params_json);
    *out = build(omg::spec_from_json(doc));
    return OMG_OK;
  });
}

omg_status omg_game_create_json(const char* spec_json, omg_game** out) {
  return guarded([&] {
    if (omg_status s = require(spec_json != nullptr && out != nullptr, "spec and out must be non-null");
        s != OMG_OK)
      return s;
    *out = build(omg::spec_from_json(omg::Json::parse(spec_json)));
    return OMG_OK;
  });
}

void omg_game_free(omg_game* game) { delete game; }

omg_status omg_game_dimension(const omg_game* game, size_t* out) {
  if (game == nullptr || out == nullptr) return fail(OMG_ERR_INVALID_ARGUMENT, "game and out must be non-null");
  *out = game->map.dimension;
  return OMG_OK;
}

omg_status omg_game_spec_json(const omg_game* game, char** out) {
  return guarded([&] {
    if (omg_status s = require(game != nullptr && out != nullptr, "game and out must be non-null"); s != OMG_OK)
      return s;
    put(out, omg::to_json(game->spec).dump());
    return OMG_OK;
  });
}

omg_status omg_game_evaluate(const omg_game* game, const double* x, size_t n, double* out_f) {
  return guarded([&] {
    if (omg_status s = require(game != nullptr && x != nullptr && out_f != nullptr, "null argument"); s != OMG_OK)
      return s;
    if (n != game->map.dimension) return fail(OMG_ERR_INVALID_ARGUMENT, "dimension mismatch");
    const omg::Vec f = omg::evaluate(game->map, std::span<const double>(x, n));
    std::copy(f.begin(), f.end(), out_f);
    return OMG_OK;
  });
}

omg_status omg_certify(const omg_game* game, size_t samples, uint64_t seed, omg_verdict* verdict,
                       char** report_json) {
  return guarded([&] {
    if (omg_status s = require(game != nullptr, "game must be non-null"); s != OMG_OK) return s;
    std::vector<omg::Witness> witnesses;
    if (game->venn) witnesses = game->venn->monotone_witnesses;
    const omg::MonotonicityReport rep = omg::certify_monotone(game->map, samples, seed, witnesses);
    if (verdict != nullptr) *verdict = static_cast<omg_verdict>(static_cast<int>(rep.verdict));
    omg::Json j = omg::to_json(rep);
    j["game"] = omg::to_json(game->spec);
    put(report_json, j.dump(2));
    return OMG_OK;
  });
}

omg_status omg_classify(const omg_game* game, size_t samples, uint64_t seed, char** report_json) {
  return guarded([&] {
    if (omg_status s = require(game != nullptr, "game must be non-null"); s != OMG_OK) return s;
    omg::ClassifyOptions opts;
    if (game->venn) {
      opts = game->venn->classify_options(samples, seed);
    } else {
      opts.samples = samples;
      opts.seed = seed;
    }
    const omg::PropertyReport rep = omg::classify_game(game->map, opts);
    omg::Json j = omg::to_json(rep);
    j["game"] = omg::to_json(game->spec);
    j["seed"] = seed;
    put(report_json, j.dump(2));
    return OMG_OK;
  });
}

omg_status omg_path_loss(const omg_game* game, const double* o, const double* x, size_t n, int nodes,
                         double* value, const char** method, char** report_json) {
  return guarded([&] {
    if (omg_status s = require(game != nullptr && o != nullptr && x != nullptr, "null argument"); s != OMG_OK)
      return s;
    if (n != game->map.dimension) return fail(OMG_ERR_INVALID_ARGUMENT, "dimension mismatch");
    const std::span<const double> os(o, n);
    const std::span<const double> xs(x, n);
    omg::PathLoss p;
    if (game->map.affine) {
      if (!game->map.region.contains(os, 1e-9) || !game->map.region.contains(xs, 1e-9)) {
        throw std::domain_error("path loss endpoints must lie in the region of '" + game->map.name + "'");
      }
      p = omg::affine_path_loss(game->map.affine->A, game->map.affine->b, os, xs);
    } else {
      p = omg::path_integral(game->map, os, xs, nodes > 0 ? nodes : omg::kDefaultNodes);
    }
    if (value != nullptr) *value = p.value;
    if (method != nullptr) *method = omg::to_string(p.method);
    put(report_json, omg::to_json(p).dump(2));
    return OMG_OK;
  });
}

omg_status omg_equilibrium(const omg_game* game, double tol, size_t max_iterations, double* x_out, size_t n,
                           char** report_json) {
  return guarded([&] {
    if (omg_status s = require(game != nullptr, "game must be non-null"); s != OMG_OK) return s;
    if (x_out != nullptr && n != game->map.dimension) return fail(OMG_ERR_INVALID_ARGUMENT, "dimension mismatch");
    omg::EquilibriumOptions opts;
    if (tol > 0.0) opts.tol = tol;
    if (max_iterations > 0) opts.max_iterations = max_iterations;
    const omg::EquilibriumResult r = omg::solve_equilibrium(game->map, game->map.region, opts);
    if (x_out != nullptr) std::copy(r.x_star.begin(), r.x_star.end(), x_out);
    omg::Json j = omg::to_json(r);
    j["game"] = omg::to_json(game->spec);
    put(report_json, j.dump(2));
    return OMG_OK;
  });
}

omg_status omg_run_online(const omg_game* game, omg_learner learner, double eta, size_t T, int nodes, char** csv,
                          char** summary_json) {
  return guarded([&] {
    if (omg_status s = require(game != nullptr && T >= 1, "game must be non-null and T >= 1"); s != OMG_OK)
      return s;
    omg::ExperimentConfig cfg;
    cfg.experiment = "custom";
    cfg.T = T;
    cfg.learner = learner_kind(learner);
    if (eta > 0.0) cfg.eta = eta;
    if (nodes > 0) cfg.nodes = nodes;
    const omg::RegretTrace tr = omg::run_single(game->map, cfg);
    put(csv, omg::trace_csv(tr));
    omg::Json j = omg::trace_summary(tr);
    j["game"] = omg::to_json(game->spec);
    j["T"] = T;
    put(summary_json, j.dump(2));
    return OMG_OK;
  });
}

omg_status omg_run_config(const char* config_json, const char* out_dir, int* passed, char** summary_json) {
  return guarded([&] {
    if (omg_status s = require(config_json != nullptr, "config must be non-null"); s != OMG_OK) return s;
    omg::ExperimentConfig cfg = omg::config_from_json(omg::Json::parse(config_json));
    std::filesystem::path root = out_dir != nullptr && *out_dir != '\0' ? std::filesystem::path(out_dir)
                                 : !cfg.output.empty()                 ? std::filesystem::path(cfg.output)
                                                                       : omg::output_root();
    SuiteResult r;
    if (cfg.experiment == "fig4") {
      r = fig4_suite(cfg, root / "fig4");
    } else if (cfg.experiment == "table1") {
      r = table1_suite(cfg.seeds.front(), root / "table1");
    } else if (cfg.experiment == "regret_bound") {
      r = regret_bound_suite(cfg.seeds.front(), cfg.T, root / "regret_bound");
    } else {
      omg::Json runs = omg::Json::array();
      for (std::uint64_t seed : cfg.seeds) {
        const omg::RegretTrace tr = omg::run_custom(cfg, seed);
        const auto file = root / "custom" / ("seed_" + std::to_string(seed) + ".csv");
        omg::write_text(file, omg::trace_csv(tr));
        omg::Json run = omg::trace_summary(tr);
        run["csv"] = file.string();
        runs.push_back(std::move(run));
      }
      r.report["experiment"] = "custom";
      r.report["config"] = omg::to_json(cfg);
      r.report["runs"] = std::move(runs);
      r.report["passed"] = true;
      omg::write_text(root / "custom" / "summary.json", r.report.dump(2) + "\n");
    }
    if (passed != nullptr) *passed = r.passed ? 1 : 0;
    put(summary_json, r.report.dump(2));
    return OMG_OK;
  });
}

omg_status omg_reproduce(const char* which, uint64_t seed, size_t jobs, const char* out_dir, int* passed,
                         char** report_json) {
  return guarded([&] {
    if (omg_status s = require(which != nullptr, "which must be non-null"); s != OMG_OK) return s;
    const std::string w = which;
    const std::filesystem::path root = out_root(out_dir);
    SuiteResult r;
    if (w == "fig4") {
      omg::ExperimentConfig cfg;
      cfg.seeds = {seed};
      cfg.jobs = jobs == 0 ? 1 : jobs;
      r = fig4_suite(cfg, root / "fig4");
    } else if (w == "table1") {
      r = table1_suite(seed, root / "table1");
    } else if (w == "regret-bound" || w == "regret_bound") {
      r = regret_bound_suite(seed, 0, root / "regret_bound");
    } else if (w == "counterexample") {
      r = counterexample_suite(seed, root / "counterexample");
    } else {
      return fail(OMG_ERR_INVALID_ARGUMENT,
                  "unknown suite '" + w + "' (expected fig4, table1, regret-bound or counterexample)");
    }
    if (passed != nullptr) *passed = r.passed ? 1 : 0;
    put(report_json, r.report.dump(2));
    return OMG_OK;
  });
}

}  // extern "C"
