// Copyright 2026 The activeset Authors
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

#include "activeset/serialize.hpp"

#include "activeset/error.hpp"

namespace activeset {

ordered_json path_to_json(const LatticePath& path) {
  ordered_json steps = ordered_json::array();
  for (const Step& s : path.steps()) steps.push_back({s.dx, s.dy});
  return {{"steps", std::move(steps)}};
}

LatticePath path_from_json(const nlohmann::json& value) {
  if (!value.is_object() || !value.contains("steps") || !value["steps"].is_array()) {
    throw Error(ErrorCode::kInvalidInput, "expected an object with a \"steps\" array");
  }
  std::vector<Step> steps;
  for (const auto& s : value["steps"]) {
    if (!s.is_array() || s.size() != 2 || !s[0].is_number_integer() ||
        !s[1].is_number_integer()) {
      throw Error(ErrorCode::kInvalidStep, "step must be a pair of integers: " + s.dump());
    }
    steps.push_back({s[0].get<int>(), s[1].get<int>()});
  }
  return LatticePath::from_steps(std::move(steps));
}

ordered_json point_to_json(Point p) { return {p.x, p.y}; }

ordered_json line_set_to_json(const LineSet& set) {
  ordered_json out = ordered_json::array();
  for (int k : set.members()) out.push_back(k);
  return out;
}

ordered_json finding_to_json(const ActiveFinding& finding) {
  return {
      {"k", finding.k},
      {"vertex", point_to_json(finding.vertex)},
      {"condition", active_condition_name(finding.condition)},
  };
}

ordered_json trace_to_json(const DeactivationTrace& trace) {
  ordered_json out;
  out["direction"] =
      trace.direction == TraceDirection::kDeactivate ? "deactivate" : "activate";
  out["k"] = trace.k;
  out["case"] = case_name(trace.ftilde_case.id);
  if (trace.ftilde_case.subcase) {
    out["subcase"] = *trace.ftilde_case.subcase == SlopeClass::kLessThanOne
                         ? "slope<1"
                         : "slope>=1";
  } else {
    out["subcase"] = nullptr;
  }
  out["P"] = point_to_json(trace.p);
  out["A"] = point_to_json(trace.a);
  out["B"] = point_to_json(trace.b);
  out["B_prime"] = trace.b_prime ? point_to_json(*trace.b_prime) : ordered_json();
  out["Q"] = trace.q ? point_to_json(*trace.q) : ordered_json();
  out["h"] = trace.h;
  out["shifted_range"] = {trace.shifted_range.begin, trace.shifted_range.end};
  return out;
}

ordered_json active_report(const LatticePath& path, ActivityReading reading) {
  ordered_json findings = ordered_json::array();
  for (const auto& f : active_findings(path, reading)) {
    findings.push_back(finding_to_json(f));
  }
  return {
      {"n", path.order()},
      {"active_set", line_set_to_json(active_set(path, reading))},
      {"findings", std::move(findings)},
  };
}

}  // namespace activeset
