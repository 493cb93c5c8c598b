// Copyright 2026 The OMG Authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <sstream>

#include "omg/core.hpp"

namespace omg {

FeasibleRegion FeasibleRegion::box(Vec lower, Vec upper) {
  require_same_size(lower.size(), upper.size(), "box bounds");
  if (lower.empty()) throw std::invalid_argument("box: dimension must be positive");
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (!(lower[i] < upper[i])) {
      throw std::invalid_argument("box: lower[" + std::to_string(i) + "] must be < upper");
    }
  }
  FeasibleRegion r;
  r.kind_ = Kind::kBox;
  r.dim_ = lower.size();
  r.lower_ = std::move(lower);
  r.upper_ = std::move(upper);
  return r;
}

FeasibleRegion FeasibleRegion::cube(std::size_t n, double lower, double upper) {
  return box(Vec(n, lower), Vec(n, upper));
}

FeasibleRegion FeasibleRegion::l2_ball(std::size_t n, double radius) {
  if (n == 0) throw std::invalid_argument("l2_ball: dimension must be positive");
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw std::invalid_argument("l2_ball: radius must be positive");
  }
  FeasibleRegion r;
  r.kind_ = Kind::kL2Ball;
  r.dim_ = n;
  r.radius_ = radius;
  return r;
}

FeasibleRegion FeasibleRegion::nonneg_orthant(std::size_t n) {
  if (n == 0) throw std::invalid_argument("nonneg_orthant: dimension must be positive");
  FeasibleRegion r;
  r.kind_ = Kind::kNonnegOrthant;
  r.dim_ = n;
  return r;
}

Vec FeasibleRegion::project(std::span<const double> x) const {
  require_same_size(dim_, x.size(), "project");
  Vec p(x.begin(), x.end());
  switch (kind_) {
    case Kind::kBox:
      for (std::size_t i = 0; i < dim_; ++i) p[i] = std::clamp(p[i], lower_[i], upper_[i]);
      break;
    case Kind::kNonnegOrthant:
      for (auto& v : p) v = std::max(v, 0.0);
      break;
    case Kind::kL2Ball: {
      // Points already inside (to tolerance) are returned untouched, which
      // makes the projection exactly idempotent despite rounding in the scale.
      const double n = norm(p);
      if (n > radius_ + kMembershipTol) {
        const double s = radius_ / n;
        for (auto& v : p) v *= s;
      }
      break;
    }
  }
  return p;
}

bool FeasibleRegion::contains(std::span<const double> x, double tol) const {
  if (x.size() != dim_) return false;
  switch (kind_) {
    case Kind::kBox:
      for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i] < lower_[i] - tol || x[i] > upper_[i] + tol) return false;
      }
      return true;
    case Kind::kNonnegOrthant:
      return std::all_of(x.begin(), x.end(), [tol](double v) { return v >= -tol; });
    case Kind::kL2Ball:
      return norm(x) <= radius_ + tol;
  }
  return false;
}

std::string FeasibleRegion::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::kBox:
      os << "box(n=" << dim_ << ")";
      break;
    case Kind::kL2Ball:
      os << "l2_ball(n=" << dim_ << ", B=" << radius_ << ")";
      break;
    case Kind::kNonnegOrthant:
      os << "nonneg_orthant(n=" << dim_ << ")";
      break;
  }
  return os.str();
}

FeasibleRegion bounding_box(const std::vector<Vec>& points, double min_width) {
  if (points.empty()) throw std::invalid_argument("bounding_box: no points");
  Vec lo = points.front();
  Vec hi = points.front();
  for (const auto& p : points) {
    require_same_size(lo.size(), p.size(), "bounding_box");
    for (std::size_t i = 0; i < p.size(); ++i) {
      lo[i] = std::min(lo[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }
  }
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (hi[i] - lo[i] < min_width) {
      const double mid = 0.5 * (lo[i] + hi[i]);
      lo[i] = mid - 0.5 * min_width;
      hi[i] = mid + 0.5 * min_width;
    }
  }
  return FeasibleRegion::box(std::move(lo), std::move(hi));
}

}  // namespace omg
