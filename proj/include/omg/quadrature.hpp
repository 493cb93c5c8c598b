// Copyright 2026 The OMG Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>

#include "omg/core.hpp"

namespace omg {

struct GaussRule {
  Vec nodes;    // on [0, 1], ascending
  Vec weights;  // sum to 1
};

/// n-point Gauss-Legendre rule mapped to [0, 1]. Exact for polynomials of
/// degree <= 2n - 1.
GaussRule gauss_legendre(int n);

/// Composite rule: `segments` equal pieces of [a, b], n nodes each, summed in
/// a fixed order.
double integrate(const std::function<double(double)>& f, double a, double b, int n, int segments = 1);

}  // namespace omg
