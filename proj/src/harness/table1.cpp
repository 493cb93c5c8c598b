// Copyright 2026 The OMG Authors.
// SPDX-License-Identifier: Apache-2.0

#include <sstream>

#include "omg/harness.hpp"

namespace omg {

Table1Result run_table1(std::size_t samples, std::uint64_t seed) {
  Table1Result r;
  r.reports.reserve(kVennIds.size());
  for (std::size_t e = 0; e < kVennIds.size(); ++e) {
    const VennExample ex = make_venn_example(kVennIds[e]);
    PropertyReport rep = classify_game(ex.map, ex.classify_options(samples, seed));
    const std::array<bool, 4> got{rep.smooth.holds(), rep.convex.holds(),
                                  rep.monotone.verdict == Verdict::kMonotone, rep.socially_convex.holds()};
    for (std::size_t p = 0; p < 4; ++p) {
      r.measured[p][e] = got[p];
      r.expected[p][e] = ex.expected[p];
      if (got[p] != ex.expected[p]) r.mismatches.emplace_back(p, e);
    }
    r.reports.push_back(std::move(rep));
  }
  return r;
}

std::string table1_text(const Table1Result& r) {
  std::ostringstream os;
  os << "                ";
  for (char id : kVennIds) os << ' ' << id;
  os << '\n';
  for (std::size_t p = 0; p < 4; ++p) {
    std::string name = kPropertyNames[p];
    name.resize(16, ' ');
    os << name;
    for (std::size_t e = 0; e < kVennIds.size(); ++e) os << ' ' << (r.measured[p][e] ? 'T' : 'F');
    os << '\n';
  }
  return os.str();
}

Json to_json(const Table1Result& r) {
  Json j;
  Json matrix = Json::object();
  for (std::size_t p = 0; p < 4; ++p) {
    Json row = Json::object();
    for (std::size_t e = 0; e < kVennIds.size(); ++e) row[std::string(1, kVennIds[e])] = r.measured[p][e];
    matrix[kPropertyNames[p]] = std::move(row);
  }
  j["matrix"] = std::move(matrix);
  Json mism = Json::array();
  for (const auto& [p, e] : r.mismatches) {
    mism.push_back({{"property", kPropertyNames[p]}, {"example", std::string(1, kVennIds[e])}});
  }
  j["mismatches"] = std::move(mism);
  Json details = Json::object();
  for (std::size_t e = 0; e < r.reports.size(); ++e) {
    details[std::string("venn_") + kVennIds[e]] = to_json(r.reports[e]);
  }
  j["details"] = std::move(details);
  j["passed"] = r.passed();
  return j;
}

}  // namespace omg
