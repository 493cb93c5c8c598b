// Copyright 2026 The OMG Authors.
// SPDX-License-Identifier: Apache-2.0

// JSON schema for game specs and reports. Matrices are arrays of rows.
//
//   {"id": "resource_alloc", "params": {"beta": 1, "alpha": [1, 1], "epsilon": 0.05}}
//   {"id": "affine", "params": {"A": [[1, 0], [0, 1]], "b": [0, 0],
//                               "region": {"kind": "box", "lower": [-1, -1], "upper": [1, 1]}}}
//
// Params omitted from a spec take their defaults; unknown keys are rejected.

#pragma once

#include <json.hpp>

#include "omg/games.hpp"

namespace omg {

using Json = nlohmann::ordered_json;

Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json to_json(const FeasibleRegion& r);
FeasibleRegion region_from_json(const Json& j);

Json to_json(const GameSpec& spec);
GameSpec spec_from_json(const Json& j);

Json to_json(const Witness& w);
Json to_json(const MonotonicityReport& r);
Json to_json(const ConstantsEstimate& c);
Json to_json(const PropertyCheck& c);
Json to_json(const PropertyReport& r);
Json to_json(const PathLoss& p);
Json to_json(const EquilibriumResult& e);

}  // namespace omg
