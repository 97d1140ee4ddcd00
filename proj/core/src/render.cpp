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

#include "activeset/render.hpp"

#include <map>
#include <sstream>
#include <vector>

#include "activeset/error.hpp"

namespace activeset {

namespace {

using Labels = std::vector<std::pair<std::string, Point>>;

Labels trace_labels(const std::optional<DeactivationTrace>& trace) {
  Labels out;
  if (!trace) return out;
  out.emplace_back("P", trace->p);
  out.emplace_back("A", trace->a);
  out.emplace_back("B", trace->b);
  if (trace->b_prime) out.emplace_back("B'", *trace->b_prime);
  if (trace->q) out.emplace_back("Q", *trace->q);
  return out;
}

std::string point_text(Point p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

std::string ascii(const LatticePath& path, const RenderOptions& options,
                  const Labels& labels) {
  const int n = path.order();
  std::map<Point, std::string> marks;
  for (const Point& v : path.vertices()) marks[v] = "o";
  // Earlier labels win when two trace points coincide.
  for (auto it = labels.rbegin(); it != labels.rend(); ++it) marks[it->second] = it->first;

  std::ostringstream out;
  for (int y = n; y >= 0; --y) {
    for (int x = 0; x <= n; ++x) {
      std::string cell;
      if (auto it = marks.find({x, y}); it != marks.end()) {
        cell = it->second;
      } else if (options.highlight && x == *options.highlight) {
        cell = "|";
      } else if (x == y) {
        cell = "/";
      } else {
        cell = ".";
      }
      cell.resize(2, ' ');
      out << cell;
    }
    out << '\n';
  }
  out << "path: " << format_path(path) << '\n';
  if (options.highlight) out << "line: x=" << *options.highlight << '\n';
  for (const auto& [name, p] : labels) out << name << "=" << point_text(p) << '\n';
  return out.str();
}

constexpr int kUnit = 40;
constexpr int kMargin = 30;

std::string svg(const LatticePath& path, const RenderOptions& options,
                const Labels& labels, const std::optional<DeactivationTrace>& trace) {
  const int n = path.order();
  const int size = 2 * kMargin + n * kUnit;
  auto sx = [](int x) { return kMargin + x * kUnit; };
  auto sy = [n](int y) { return kMargin + (n - y) * kUnit; };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size
      << "\" height=\"" << size << "\" viewBox=\"0 0 " << size << ' ' << size
      << "\">\n";
  out << "<g fill=\"#999999\">\n";
  for (int x = 0; x <= n; ++x) {
    for (int y = 0; y <= n; ++y) {
      out << "<circle cx=\"" << sx(x) << "\" cy=\"" << sy(y) << "\" r=\"1.5\"/>\n";
    }
  }
  out << "</g>\n";
  out << "<line x1=\"" << sx(0) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(n)
      << "\" y2=\"" << sy(n)
      << "\" stroke=\"#999999\" stroke-dasharray=\"4 4\"/>\n";
  if (options.highlight) {
    // Red for a line the trace deactivates, blue otherwise.
    const bool deact =
        trace && trace->direction == TraceDirection::kDeactivate;
    out << "<line x1=\"" << sx(*options.highlight) << "\" y1=\"" << sy(0)
        << "\" x2=\"" << sx(*options.highlight) << "\" y2=\"" << sy(n)
        << "\" stroke=\"" << (deact ? "#cc0000" : "#0044cc")
        << "\" stroke-width=\"2\"/>\n";
  }
  out << "<polyline fill=\"none\" stroke=\"#000000\" stroke-width=\"2\" points=\"";
  bool first = true;
  for (const Point& v : path.vertices()) {
    out << (first ? "" : " ") << sx(v.x) << ',' << sy(v.y);
    first = false;
  }
  out << "\"/>\n";
  for (const Point& v : path.vertices()) {
    out << "<circle cx=\"" << sx(v.x) << "\" cy=\"" << sy(v.y) << "\" r=\"3\"/>\n";
  }
  for (const auto& [name, p] : labels) {
    out << "<text x=\"" << sx(p.x) + 5 << "\" y=\"" << sy(p.y) - 5
        << "\" font-family=\"monospace\" font-size=\"11\">"
        << (name == "B'" ? "B&apos;" : name) << '=' << point_text(p)
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace

std::string render(const LatticePath& path, const RenderOptions& options,
                   const std::optional<DeactivationTrace>& trace) {
  const int n = path.order();
  if (options.highlight && (*options.highlight < 1 || *options.highlight > n - 1)) {
    throw Error(ErrorCode::kInvalidInput,
                "highlight x=" + std::to_string(*options.highlight) +
                    " is outside 1.." + std::to_string(n - 1));
  }
  const Labels labels = options.show_trace ? trace_labels(trace) : Labels{};
  return options.format == RenderFormat::kAscii ? ascii(path, options, labels)
                                                : svg(path, options, labels, trace);
}

}  // namespace activeset
