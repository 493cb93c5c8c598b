// Copyright 2026 The OMG Authors.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>

#include "omg/core.hpp"

namespace omg {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t CounterRng::mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(mix64(seed) ^ mix64(stream * kGolden + 0x632BE59BD9B4E019ULL)) {}

std::uint64_t CounterRng::next_u64() {
  ++counter_;
  return mix64(key_ + counter_ * kGolden);
}

double CounterRng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double CounterRng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double CounterRng::normal() {
  // Box-Muller, one variate per call; 1 - u keeps the log argument in (0, 1].
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::vector<Vec> sample_region(const FeasibleRegion& region, std::size_t count,
                               std::uint64_t seed, std::uint64_t stream) {
  if (count < 1) throw std::invalid_argument("sample_region: count must be >= 1");
  const std::size_t n = region.dimension();
  CounterRng rng(seed, stream);
  std::vector<Vec> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    Vec x(n);
    switch (region.kind()) {
      case FeasibleRegion::Kind::kBox:
        for (std::size_t i = 0; i < n; ++i) x[i] = rng.uniform(region.lower()[i], region.upper()[i]);
        break;
      case FeasibleRegion::Kind::kNonnegOrthant:
        for (auto& v : x) v = rng.uniform();
        break;
      case FeasibleRegion::Kind::kL2Ball: {
        double r2 = 0.0;
        for (auto& v : x) {
          v = rng.normal();
          r2 += v * v;
        }
        const double dir = r2 > 0 ? 1.0 / std::sqrt(r2) : 0.0;
        const double rad = region.radius() * std::pow(rng.uniform(), 1.0 / static_cast<double>(n));
        for (auto& v : x) v *= dir * rad;
        x = region.project(x);
        break;
      }
    }
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace omg
