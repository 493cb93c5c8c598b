// Copyright 2026 The OMG Authors.
// SPDX-License-Identifier: Apache-2.0

#include "omg/spec_json.hpp"

#include <set>

namespace omg {

namespace {

void reject_unknown(const Json& params, std::initializer_list<const char*> allowed, const std::string& id) {
  if (!params.is_object()) throw std::invalid_argument(id + ": params must be a JSON object");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, _] : params.items()) {
    if (!ok.count(key)) throw std::invalid_argument(id + ": unknown parameter '" + key + "'");
  }
}

template <typename T>
void read(const Json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

void read_matrix(const Json& j, const char* key, Matrix& out) {
  if (j.contains(key)) out = matrix_from_json(j.at(key));
}

Json vecs(const std::vector<Vec>& rows) {
  Json a = Json::array();
  for (const auto& r : rows) a.push_back(r);
  return a;
}

}  // namespace

Json to_json(const Matrix& m) {
  Json a = Json::array();
  for (const auto& r : m.to_rows()) a.push_back(r);
  return a;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix must be an array of rows");
  return Matrix::from_rows(j.get<std::vector<Vec>>());
}

Json to_json(const FeasibleRegion& r) {
  Json j;
  switch (r.kind()) {
    case FeasibleRegion::Kind::kBox:
      j["kind"] = "box";
      j["lower"] = r.lower();
      j["upper"] = r.upper();
      break;
    case FeasibleRegion::Kind::kL2Ball:
      j["kind"] = "l2_ball";
      j["n"] = r.dimension();
      j["radius"] = r.radius();
      break;
    case FeasibleRegion::Kind::kNonnegOrthant:
      j["kind"] = "nonneg_orthant";
      j["n"] = r.dimension();
      break;
  }
  return j;
}

FeasibleRegion region_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "box") return FeasibleRegion::box(j.at("lower").get<Vec>(), j.at("upper").get<Vec>());
  if (kind == "l2_ball") return FeasibleRegion::l2_ball(j.at("n").get<std::size_t>(), j.at("radius").get<double>());
  if (kind == "nonneg_orthant") return FeasibleRegion::nonneg_orthant(j.at("n").get<std::size_t>());
  throw std::invalid_argument("unknown region kind '" + kind + "'");
}

Json to_json(const GameSpec& spec) {
  Json j;
  j["id"] = spec.id;
  Json p = Json::object();
  std::visit(
      [&p](const auto& v) {
        using P = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<P, CournotParams>) {
          p["a"] = v.a;
          p["b"] = v.b;
          p["kappa"] = v.kappa;
        } else if constexpr (std::is_same_v<P, ResourceAllocParams>) {
          p["beta"] = v.beta;
          p["alpha"] = v.alpha;
          p["epsilon"] = v.epsilon;
        } else if constexpr (std::is_same_v<P, TailDropParams>) {
          p["beta"] = v.beta;
          p["N"] = v.N;
          p["epsilon"] = v.epsilon;
          p["piece"] = v.piece;
        } else if constexpr (std::is_same_v<P, GtdParams>) {
          p["A"] = to_json(v.A);
          p["b"] = v.b;
          p["M"] = to_json(v.M);
          p["radius"] = v.radius;
        } else if constexpr (std::is_same_v<P, WganParams>) {
          p["x"] = vecs(v.x_batch);
          p["z"] = vecs(v.z_batch);
          p["alpha"] = v.alpha;
          p["box"] = v.box;
        } else if constexpr (std::is_same_v<P, MlnParams>) {
          p["seed"] = v.seed;
          p["firms"] = v.firms;
          p["dims_per_firm"] = v.dims_per_firm;
          p["d_range"] = {v.d_lo, v.d_hi};
          p["skew"] = v.skew;
          p["b_range"] = {v.b_lo, v.b_hi};
          p["shift"] = v.shift;
        } else if constexpr (std::is_same_v<P, AffineParams>) {
          p["A"] = to_json(v.A);
          p["b"] = v.b;
          p["region"] = to_json(v.region);
        }
      },
      spec.params);
  j["params"] = std::move(p);
  return j;
}

GameSpec spec_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("id")) throw std::invalid_argument("game spec needs an \"id\"");
  GameSpec spec = default_spec(j.at("id").get<std::string>());
  const Json params = j.value("params", Json::object());
  const std::string& id = spec.id;

  std::visit(
      [&](auto& v) {
        using P = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<P, CounterexampleParams> || std::is_same_v<P, VennParams>) {
          reject_unknown(params, {}, id);
        } else if constexpr (std::is_same_v<P, CournotParams>) {
          reject_unknown(params, {"a", "b", "kappa"}, id);
          read(params, "a", v.a);
          read(params, "b", v.b);
          read(params, "kappa", v.kappa);
        } else if constexpr (std::is_same_v<P, ResourceAllocParams>) {
          reject_unknown(params, {"beta", "alpha", "epsilon"}, id);
          read(params, "beta", v.beta);
          read(params, "alpha", v.alpha);
          read(params, "epsilon", v.epsilon);
        } else if constexpr (std::is_same_v<P, TailDropParams>) {
          reject_unknown(params, {"beta", "N", "epsilon", "piece"}, id);
          read(params, "beta", v.beta);
          read(params, "N", v.N);
          read(params, "epsilon", v.epsilon);
          read(params, "piece", v.piece);
        } else if constexpr (std::is_same_v<P, GtdParams>) {
          reject_unknown(params, {"A", "b", "M", "radius"}, id);
          read_matrix(params, "A", v.A);
          read(params, "b", v.b);
          read_matrix(params, "M", v.M);
          read(params, "radius", v.radius);
        } else if constexpr (std::is_same_v<P, WganParams>) {
          reject_unknown(params, {"x", "z", "alpha", "box"}, id);
          read(params, "x", v.x_batch);
          read(params, "z", v.z_batch);
          read(params, "alpha", v.alpha);
          read(params, "box", v.box);
        } else if constexpr (std::is_same_v<P, MlnParams>) {
          reject_unknown(params, {"seed", "firms", "dims_per_firm", "d_range", "skew", "b_range", "shift"}, id);
          read(params, "seed", v.seed);
          read(params, "firms", v.firms);
          read(params, "dims_per_firm", v.dims_per_firm);
          if (params.contains("d_range")) {
            const auto r = params.at("d_range").get<std::vector<double>>();
            if (r.size() != 2) throw std::invalid_argument("mln: d_range needs two values");
            v.d_lo = r[0];
            v.d_hi = r[1];
          }
          read(params, "skew", v.skew);
          if (params.contains("b_range")) {
            const auto r = params.at("b_range").get<std::vector<double>>();
            if (r.size() != 2) throw std::invalid_argument("mln: b_range needs two values");
            v.b_lo = r[0];
            v.b_hi = r[1];
          }
          read(params, "shift", v.shift);
        } else if constexpr (std::is_same_v<P, AffineParams>) {
          reject_unknown(params, {"A", "b", "region"}, id);
          if (!params.contains("A") || !params.contains("b") || !params.contains("region")) {
            throw std::invalid_argument("affine: params A, b and region are required");
          }
          v.A = matrix_from_json(params.at("A"));
          v.b = params.at("b").get<Vec>();
          v.region = region_from_json(params.at("region"));
        }
      },
      spec.params);
  return spec;
}

Json to_json(const Witness& w) {
  Json j;
  if (w.b) {
    j["kind"] = "pair";
    j["x"] = w.a;
    j["x_prime"] = *w.b;
  } else {
    j["kind"] = "point";
    j["x"] = w.a;
  }
  return j;
}

Json to_json(const MonotonicityReport& r) {
  Json j;
  j["verdict"] = to_string(r.verdict);
  j["min_sym_eig_over_samples"] = r.min_sym_eig_over_samples;
  j["max_sym_eig_over_samples"] = r.max_sym_eig_over_samples;
  j["worst_pair_inner_product"] = r.worst_pair_inner_product;
  j["strong_parameter"] = r.strong_parameter;
  j["sample_count"] = r.sample_count;
  j["seed"] = r.seed;
  j["failed_evaluations"] = r.failed_evaluations;
  if (r.witness) {
    j["witness"] = to_json(*r.witness);
    j["witness_value"] = r.witness_value;
  }
  return j;
}

Json to_json(const ConstantsEstimate& c) {
  Json j;
  j["L"] = c.L;
  j["beta"] = c.beta;
  j["gamma"] = c.gamma;
  j["sample_count"] = c.sample_count;
  j["region"] = to_json(c.region);
  return j;
}

Json to_json(const PropertyCheck& c) {
  Json j;
  j["status"] = to_string(c.status);
  j["reason"] = c.reason;
  j["sample_count"] = c.sample_count;
  if (!c.witness.empty()) {
    j["witness"] = vecs(c.witness);
    j["violation"] = c.violation;
  }
  if (c.player) j["player"] = *c.player;
  return j;
}

Json to_json(const PropertyReport& r) {
  Json j;
  j["smooth"] = to_json(r.smooth);
  j["convex"] = to_json(r.convex);
  j["monotone"] = to_json(r.monotone);
  j["socially_convex"] = to_json(r.socially_convex);
  return j;
}

Json to_json(const PathLoss& p) {
  Json j;
  j["value"] = p.value;
  j["method"] = to_string(p.method);
  if (p.method == PathMethod::kQuadrature) j["nodes"] = p.nodes;
  j["origin"] = p.origin;
  j["endpoint"] = p.endpoint;
  j["f_o"] = p.f_o;
  j["error_estimate"] = p.error_estimate;
  if (!p.warning.empty()) j["warning"] = p.warning;
  return j;
}

Json to_json(const EquilibriumResult& e) {
  Json j;
  j["x_star"] = e.x_star;
  j["natural_residual"] = e.natural_residual;
  j["iterations"] = e.iterations;
  j["converged"] = e.converged;
  return j;
}

}  // namespace omg
