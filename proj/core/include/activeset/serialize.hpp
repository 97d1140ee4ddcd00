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

#ifndef ACTIVESET_SERIALIZE_HPP_
#define ACTIVESET_SERIALIZE_HPP_

#include <nlohmann/json.hpp>

#include "activeset/active_lines.hpp"
#include "activeset/bijection.hpp"
#include "activeset/line_set.hpp"
#include "activeset/path.hpp"

namespace activeset {

using ordered_json = nlohmann::ordered_json;

/// {"steps": [[dx,dy], ...]}; n is derived on reading.
ordered_json path_to_json(const LatticePath& path);
LatticePath path_from_json(const nlohmann::json& value);

ordered_json point_to_json(Point p);
ordered_json line_set_to_json(const LineSet& set);
ordered_json finding_to_json(const ActiveFinding& finding);
ordered_json trace_to_json(const DeactivationTrace& trace);

/// {"n":..., "active_set":[...], "findings":[...]}
ordered_json active_report(const LatticePath& path,
                           ActivityReading reading = ActivityReading::kExistential);

}  // namespace activeset

#endif  // ACTIVESET_SERIALIZE_HPP_
