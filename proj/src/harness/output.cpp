// Copyright 2026 The OMG Authors.
// SPDX-License-Identifier: Apache-2.0

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>

#include "omg/harness.hpp"

namespace omg {

std::filesystem::path output_root() {
  const char* env = std::getenv("MG_OUT_DIR");
  if (env != nullptr && *env != '\0') return std::filesystem::path(env);
  return std::filesystem::path("out");
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_text(const std::filesystem::path& path, const std::string& content) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << content;
  if (!out.flush()) throw IoError("write failed for " + path.string());
}

namespace {

LearnerKind learner_from_string(const std::string& s) {
  if (s == "ogd") return LearnerKind::kOgd;
  if (s == "omod") return LearnerKind::kOmod;
  if (s == "omomd") return LearnerKind::kOmomd;
  throw std::invalid_argument("unknown learner '" + s + "'");
}

}  // namespace

ExperimentConfig config_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("experiment config must be a JSON object");
  static const std::set<std::string> known{"experiment", "T",     "seeds", "learner", "eta",
                                           "pool",       "pool_size", "nodes", "output",  "jobs"};
  for (const auto& [key, _] : j.items()) {
    if (!known.count(key)) throw std::invalid_argument("experiment config: unknown key '" + key + "'");
  }
  ExperimentConfig c;
  c.experiment = j.value("experiment", c.experiment);
  if (c.experiment != "fig4" && c.experiment != "table1" && c.experiment != "regret_bound" &&
      c.experiment != "custom") {
    throw std::invalid_argument("experiment config: unknown experiment '" + c.experiment + "'");
  }
  c.T = j.value("T", c.T);
  if (c.T < 1) throw std::invalid_argument("experiment config: T must be >= 1");
  if (j.contains("seeds")) c.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
  if (c.seeds.empty()) throw std::invalid_argument("experiment config: seeds must be nonempty");
  if (j.contains("learner")) {
    const Json& l = j.at("learner");
    if (l.is_string()) {
      c.learner = learner_from_string(l.get<std::string>());
    } else {
      c.learner = learner_from_string(l.at("kind").get<std::string>());
      if (l.contains("eta") && !l.at("eta").is_string()) c.eta = l.at("eta").get<double>();
    }
  }
  if (j.contains("eta")) {
    const Json& e = j.at("eta");
    if (e.is_string()) {
      if (e.get<std::string>() != "auto") throw std::invalid_argument("experiment config: eta must be a number or \"auto\"");
      c.eta.reset();
    } else {
      c.eta = e.get<double>();
    }
  }
  if (j.contains("pool")) {
    for (const Json& g : j.at("pool")) c.pool.push_back(spec_from_json(g));
  }
  if (c.experiment == "custom" && c.pool.empty()) {
    throw std::invalid_argument("experiment config: custom runs need a nonempty pool");
  }
  c.pool_size = j.value("pool_size", c.pool_size);
  if (c.pool_size < 1) throw std::invalid_argument("experiment config: pool_size must be >= 1");
  c.nodes = j.value("nodes", c.nodes);
  c.output = j.value("output", c.output);
  c.jobs = j.value("jobs", c.jobs);
  return c;
}

Json to_json(const ExperimentConfig& c) {
  Json j;
  j["experiment"] = c.experiment;
  j["T"] = c.T;
  j["seeds"] = c.seeds;
  j["learner"] = to_string(c.learner);
  if (c.eta) {
    j["eta"] = *c.eta;
  } else {
    j["eta"] = "auto";
  }
  if (!c.pool.empty()) {
    Json pool = Json::array();
    for (const auto& g : c.pool) pool.push_back(to_json(g));
    j["pool"] = std::move(pool);
  }
  j["pool_size"] = c.pool_size;
  j["nodes"] = c.nodes;
  if (!c.output.empty()) j["output"] = c.output;
  j["jobs"] = c.jobs;
  return j;
}

}  // namespace omg
