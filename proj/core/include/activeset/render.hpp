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

#ifndef ACTIVESET_RENDER_HPP_
#define ACTIVESET_RENDER_HPP_

#include <optional>
#include <string>

#include "activeset/bijection.hpp"
#include "activeset/path.hpp"

namespace activeset {

enum class RenderFormat { kAscii, kSvg };

struct RenderOptions {
  RenderFormat format = RenderFormat::kAscii;
  std::optional<int> highlight;  // line x = k, 1 <= k <= n-1
  bool show_trace = false;       // label P, A, B, B', Q from the trace
};

/// Draws the grid, the diagonal, the path and the highlighted line. The
/// highlighted line is red when active and blue when inactive. Output is a
/// pure function of the arguments. Throws Error{kInvalidInput} for an
/// out-of-range highlight.
std::string render(const LatticePath& path, const RenderOptions& options,
                   const std::optional<DeactivationTrace>& trace = std::nullopt);

}  // namespace activeset

#endif  // ACTIVESET_RENDER_HPP_
