// Copyright 2026 The sqc developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// JSON serialization for the CLI; requires the vendored nlohmann/json
// single header on the include path.

#include <string>
#include <vector>

#include <json.hpp>

#include "sqc/circuit.hpp"
#include "sqc/gates.hpp"
#include "sqc/linalg.hpp"

namespace sqc {

using json = nlohmann::json;

inline constexpr int kJsonSchemaVersion = 1;

/// Matrices serialize row-major, each entry as an [re, im] pair.
inline json matrix_json(const Mat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json labels_json(const std::vector<ModeInfo>& modes) {
  json out = json::array();
  for (const auto& m : modes) out.push_back(m.label);
  return out;
}

inline json truth_table_json(const TruthTable& t) {
  json rows = json::array();
  for (const auto& r : t.rows) {
    json row;
    row["in"] = r.in;
    row["out"] = r.out;
    row["phase"] = {r.phase.real(), r.phase.imag()};
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json verdict_json(const GateVerdict& v) {
  json out;
  out["schema_version"] = kJsonSchemaVersion;
  out["gate"] = v.gate;
  out["pass"] = v.pass;
  out["max_error"] = v.max_error;
  out["phase"] = {v.phase.real(), v.phase.imag()};
  if (!v.detail.empty()) out["detail"] = v.detail;
  return out;
}

}  // namespace sqc
