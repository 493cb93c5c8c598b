// Copyright 2026 The OMG Authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <limits>

#include "omg/maps.hpp"

namespace omg {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kMonotone:
      return "monotone";
    case Verdict::kNotMonotone:
      return "not_monotone";
    case Verdict::kInconclusive:
      return "inconclusive";
  }
  return "unknown";
}

namespace {

struct Candidate {
  double value = std::numeric_limits<double>::infinity();
  Witness where;
};

}  // namespace

MonotonicityReport certify_monotone(const GameMap& map, const CertifyOptions& opts) {
  if (opts.samples < 1) throw std::invalid_argument("certify_monotone: samples must be >= 1");
  MonotonicityReport rep;
  rep.seed = opts.seed;

  double min_eig = std::numeric_limits<double>::infinity();
  double max_abs_eig = 0.0;
  double max_eig = -std::numeric_limits<double>::infinity();
  Candidate worst_point;
  Candidate worst_pair;  // normalized by |d|^2
  double worst_raw_pair = std::numeric_limits<double>::infinity();

  // Supplied witnesses that violate are reported ahead of sampled ones.
  Candidate worst_supplied;
  bool supplied = false;

  auto check_point = [&](const Vec& x) {
    try {
      const SpectrumReport s = sym_spectrum(jacobian(map, x));
      ++rep.sample_count;
      min_eig = std::min(min_eig, s.min_eig);
      max_eig = std::max(max_eig, s.max_eig);
      max_abs_eig = std::max({max_abs_eig, std::abs(s.max_eig), std::abs(s.min_eig)});
      if (s.min_eig < worst_point.value) worst_point = {s.min_eig, Witness::point(x)};
      if (supplied && s.min_eig < worst_supplied.value) worst_supplied = {s.min_eig, Witness::point(x)};
    } catch (const NumericError&) {
      ++rep.failed_evaluations;
    } catch (const std::domain_error&) {
      ++rep.failed_evaluations;
    }
  };

  auto check_pair = [&](const Vec& a, const Vec& b) {
    const Vec d = sub(a, b);
    const double d2 = dot(d, d);
    if (d2 < 1e-24) return;
    try {
      const double ip = dot(sub(evaluate(map, a), evaluate(map, b)), d);
      worst_raw_pair = std::min(worst_raw_pair, ip);
      if (ip / d2 < worst_pair.value) worst_pair = {ip / d2, Witness::pair(a, b)};
      if (supplied && ip / d2 < worst_supplied.value) worst_supplied = {ip / d2, Witness::pair(a, b)};
    } catch (const NumericError&) {
      ++rep.failed_evaluations;
    }
  };

  for (const Vec& x : sample_region(map.region, opts.samples, opts.seed, 0)) check_point(x);
  if (opts.pair_samples > 0) {
    const auto lhs = sample_region(map.region, opts.pair_samples, opts.seed, 1);
    const auto rhs = sample_region(map.region, opts.pair_samples, opts.seed, 2);
    for (std::size_t k = 0; k < lhs.size(); ++k) check_pair(lhs[k], rhs[k]);
  }
  supplied = true;
  for (const Witness& w : opts.witnesses) {
    require_same_size(map.dimension, w.a.size(), "monotonicity witness");
    if (w.b) {
      require_same_size(map.dimension, w.b->size(), "monotonicity witness");
      check_pair(w.a, *w.b);
    } else {
      check_point(w.a);
    }
  }

  if (rep.sample_count == 0) {
    rep.verdict = Verdict::kInconclusive;
    return rep;
  }

  rep.min_sym_eig_over_samples = min_eig;
  rep.max_sym_eig_over_samples = max_eig;
  rep.worst_pair_inner_product =
      std::isfinite(worst_raw_pair) ? worst_raw_pair : 0.0;
  rep.strong_parameter = std::max(0.0, min_eig);

  const double tol = 1e-8 * (1.0 + max_abs_eig);
  const Candidate& sampled = worst_pair.value < worst_point.value ? worst_pair : worst_point;
  const Candidate& worst = worst_supplied.value < -tol ? worst_supplied : sampled;
  if (worst.value < -tol) {
    rep.verdict = Verdict::kNotMonotone;
    rep.witness = worst.where;
    rep.witness_value = worst.value;
  } else if (rep.failed_evaluations > 0) {
    rep.verdict = Verdict::kInconclusive;
  } else {
    rep.verdict = Verdict::kMonotone;
  }
  return rep;
}

MonotonicityReport certify_monotone(const GameMap& map, std::size_t samples, std::uint64_t seed,
                                    std::vector<Witness> witnesses) {
  CertifyOptions opts;
  opts.samples = samples;
  opts.pair_samples = samples;
  opts.seed = seed;
  opts.witnesses = std::move(witnesses);
  return certify_monotone(map, opts);
}

double block_strong_parameter(const GameMap& map, std::span<const std::size_t> indices,
                              std::size_t samples, std::uint64_t seed) {
  if (indices.empty()) throw std::invalid_argument("block_strong_parameter: empty index set");
  for (std::size_t i : indices) {
    if (i >= map.dimension) throw std::invalid_argument("block_strong_parameter: index out of range");
  }
  double mu = std::numeric_limits<double>::infinity();
  for (const Vec& x : sample_region(map.region, samples, seed, 0)) {
    const Matrix Js = symmetric_part(jacobian(map, x));
    mu = std::min(mu, symmetric_eigenvalues(Js.principal(indices)).front());
  }
  return std::max(0.0, mu);
}

}  // namespace omg
