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

#include "activeset/path.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "activeset/error.hpp"

namespace activeset {

std::string_view path_class_name(PathClass cls) {
  switch (cls) {
    case PathClass::kGeneral: return "general";
    case PathClass::kSubdiagonal: return "subdiagonal";
    case PathClass::kDelannoy: return "delannoy";
    case PathClass::kSubDelannoy: return "subdelannoy";
  }
  return "unknown";
}

std::optional<PathClass> parse_path_class(std::string_view name) {
  for (auto cls : {PathClass::kGeneral, PathClass::kSubdiagonal,
                   PathClass::kDelannoy, PathClass::kSubDelannoy}) {
    if (path_class_name(cls) == name) return cls;
  }
  return std::nullopt;
}

PathClass delannoy_variant(PathClass cls) noexcept {
  switch (cls) {
    case PathClass::kGeneral:
    case PathClass::kDelannoy:
      return PathClass::kDelannoy;
    case PathClass::kSubdiagonal:
    case PathClass::kSubDelannoy:
      return PathClass::kSubDelannoy;
  }
  return PathClass::kDelannoy;
}

LatticePath LatticePath::from_steps(std::vector<Step> steps) {
  if (steps.empty()) {
    throw Error(ErrorCode::kInvalidInput, "path has no steps");
  }
  long long sx = 0;
  long long sy = 0;
  for (const Step& s : steps) {
    if (s.dx < 0 || s.dy < 0 || (s.dx == 0 && s.dy == 0)) {
      throw Error(ErrorCode::kInvalidStep,
                  "step (" + std::to_string(s.dx) + "," +
                      std::to_string(s.dy) + ") is not in N x N \\ {(0,0)}");
    }
    sx += s.dx;
    sy += s.dy;
  }
  if (sx != sy) {
    throw Error(ErrorCode::kUnbalancedPath,
                "endpoint (" + std::to_string(sx) + "," + std::to_string(sy) +
                    ") is not on the diagonal");
  }
  return LatticePath(static_cast<int>(sx), std::move(steps));
}

LatticePath LatticePath::from_vertices(std::span<const Point> vertices) {
  if (vertices.empty() || vertices.front() != Point{0, 0}) {
    throw Error(ErrorCode::kInvalidInput, "vertex list must start at (0,0)");
  }
  std::vector<Step> steps;
  steps.reserve(vertices.size() - 1);
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    steps.push_back({vertices[i].x - vertices[i - 1].x,
                     vertices[i].y - vertices[i - 1].y});
  }
  return from_steps(std::move(steps));
}

std::vector<Point> LatticePath::vertices() const {
  std::vector<Point> out;
  out.reserve(steps_.size() + 1);
  Point at{0, 0};
  out.push_back(at);
  for (const Step& s : steps_) {
    at = {at.x + s.dx, at.y + s.dy};
    out.push_back(at);
  }
  return out;
}

bool ClassMembership::contains(PathClass cls) const noexcept {
  switch (cls) {
    case PathClass::kGeneral: return true;
    case PathClass::kSubdiagonal: return subdiagonal;
    case PathClass::kDelannoy: return delannoy;
    case PathClass::kSubDelannoy: return subdiagonal && delannoy;
  }
  return false;
}

std::vector<PathClass> ClassMembership::tags() const {
  std::vector<PathClass> out;
  for (auto cls : {PathClass::kGeneral, PathClass::kSubdiagonal,
                   PathClass::kDelannoy, PathClass::kSubDelannoy}) {
    if (contains(cls)) out.push_back(cls);
  }
  return out;
}

ClassMembership path_class_membership(const LatticePath& path) {
  ClassMembership m;
  m.delannoy = std::ranges::all_of(
      path.steps(), [](Step s) { return s.dx <= 1 && s.dy <= 1; });
  // Segment endpoints suffice: a straight segment lies weakly below y = x
  // iff both of its endpoints do.
  const auto vs = path.vertices();
  m.subdiagonal =
      std::ranges::all_of(vs, [](Point v) { return diag_level(v) <= 0; });
  return m;
}

LatticePath parse_path(std::string_view text) {
  std::vector<Step> steps;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    const auto comma = token.find(',');
    auto bad = [&] {
      return Error(ErrorCode::kInvalidStep,
                   "malformed token '" + token + "' (expected dx,dy)");
    };
    if (comma == std::string::npos) throw bad();
    auto read = [&](std::size_t from, std::size_t to) {
      int value = 0;
      const char* first = token.data() + from;
      const char* last = token.data() + to;
      if (first == last || *first == '+' || *first == '-') throw bad();
      auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc{} || ptr != last) throw bad();
      return value;
    };
    Step s{read(0, comma), read(comma + 1, token.size())};
    steps.push_back(s);
  }
  return LatticePath::from_steps(std::move(steps));
}

std::string format_path(const LatticePath& path) {
  std::string out;
  for (const Step& s : path.steps()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(s.dx);
    out += ',';
    out += std::to_string(s.dy);
  }
  return out;
}

LatticePath rotate180(const LatticePath& path) {
  // Reflecting through the center negates every step; traversing backwards
  // negates it again, so the step list is simply reversed.
  std::vector<Step> steps(path.steps().rbegin(), path.steps().rend());
  return LatticePath::from_steps(std::move(steps));
}

}  // namespace activeset

std::size_t std::hash<activeset::LatticePath>::operator()(
    const activeset::LatticePath& path) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const auto& s : path.steps()) {
    h ^= static_cast<std::size_t>(s.dx) * 0x9e3779b97f4a7c15ULL +
         static_cast<std::size_t>(s.dy);
    h *= 0x100000001b3ULL;
  }
  return h;
}
