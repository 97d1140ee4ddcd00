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

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "activeset/bijection.hpp"
#include "activeset/certification.hpp"
#include "activeset/enumeration.hpp"
#include "activeset/error.hpp"
#include "activeset/render.hpp"
#include "activeset/serialize.hpp"

namespace activeset::cli {

namespace {

PathClass class_arg(const std::string& name) {
  if (auto cls = parse_path_class(name)) return *cls;
  throw Error(ErrorCode::kInvalidInput, "unknown class '" + name + "'");
}

ActivityReading reading_arg(const std::string& name) {
  for (auto r : {ActivityReading::kExistential, ActivityReading::kMaximal}) {
    if (activity_reading_name(r) == name) return r;
  }
  throw Error(ErrorCode::kInvalidInput, "unknown reading '" + name + "'");
}

std::uint64_t budget_from_env() {
  const char* text = std::getenv("ACTIVESET_BUDGET");
  if (text == nullptr || *text == '\0') return kDefaultEnumerationBudget;
  std::uint64_t value = 0;
  const std::string_view sv(text);
  auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), value);
  if (ec != std::errc() || ptr != sv.data() + sv.size()) {
    throw Error(ErrorCode::kInvalidInput,
                "ACTIVESET_BUDGET must be a non-negative integer, got '" +
                    std::string(sv) + "'");
  }
  return value;
}

MapResult apply_map(bool deactivate, PathClass cls, const LatticePath& p, int k,
                    ActivityReading reading) {
  if (cls == PathClass::kSubdiagonal) {
    if (!belongs_to(p, cls)) {
      throw Error(ErrorCode::kNotSubdiagonal,
                  "path '" + format_path(p) + "' dips above y=x");
    }
    return deactivate ? deactivate_sub(p, k, reading) : activate_sub(p, k, reading);
  }
  if (cls != PathClass::kGeneral) {
    throw Error(ErrorCode::kInvalidInput,
                "maps act on general or subdiagonal paths");
  }
  return deactivate ? deactivate_gen(p, k, reading) : activate_gen(p, k, reading);
}

std::vector<CheckKind> checks_arg(const std::string& text) {
  std::vector<CheckKind> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = std::min(text.find(',', start), text.size());
    const std::string name = text.substr(start, comma - start);
    auto kind = parse_check(name);
    if (!kind) throw Error(ErrorCode::kInvalidInput, "unknown check '" + name + "'");
    out.push_back(*kind);
    start = comma + 1;
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Active lines on lattice paths"};
  app.name("activeset");
  app.require_subcommand(1);

  std::string cls_name = "general";
  std::string reading_name = "existential";
  std::string path_text;
  std::string set_text;
  std::string delannoy_text;
  std::string format = "ascii";
  std::string checks_text;
  std::string out_file;
  int n = 0;
  int k = 0;
  std::optional<int> highlight;
  std::optional<std::uint64_t> limit;
  unsigned jobs = 1;
  bool trace_flag = false;
  bool alt_reading = false;

  auto add_reading = [&](CLI::App* sub) {
    sub->add_option("--reading", reading_name,
                    "existential (default) or maximal reading of condition (ii)");
  };
  const auto class_help = "general|subdiagonal|delannoy|subdelannoy";

  auto* count = app.add_subcommand("count", "number of paths in a class");
  count->add_option("--class", cls_name, class_help)->required();
  count->add_option("--n", n, "order")->required();

  auto* enumerate = app.add_subcommand("enumerate", "list a class, one path per line");
  enumerate->add_option("--class", cls_name, class_help)->required();
  enumerate->add_option("--n", n, "order")->required();
  enumerate->add_option("--limit", limit, "stop after M paths");

  auto* active = app.add_subcommand("active", "active set with witnessing vertices");
  active->add_option("--path", path_text, "steps, e.g. \"1,0 0,1\"")->required();
  add_reading(active);

  auto* deact = app.add_subcommand("deactivate", "deactivate line x=K");
  auto* act = app.add_subcommand("activate", "activate line x=K");
  for (auto* sub : {deact, act}) {
    sub->add_option("--path", path_text, "steps")->required();
    sub->add_option("--k", k, "line index")->required();
    sub->add_option("--class", cls_name, "general (default) or subdiagonal");
    sub->add_flag("--trace", trace_flag, "accepted for compatibility; the trace is always emitted");
    add_reading(sub);
  }

  auto* enc = app.add_subcommand("encode", "path to (active set, Delannoy path)");
  enc->add_option("--class", cls_name, "general or subdiagonal")->required();
  enc->add_option("--path", path_text, "steps")->required();
  add_reading(enc);

  auto* dec = app.add_subcommand("decode", "(active set, Delannoy path) to path");
  dec->add_option("--class", cls_name, "general or subdiagonal")->required();
  dec->add_option("--set", set_text, "comma-separated line indices");
  dec->add_option("--delannoy", delannoy_text, "steps")->required();
  add_reading(dec);

  auto* cert = app.add_subcommand("certify", "exhaustive checks over one class");
  cert->add_option("--class", cls_name, "general or subdiagonal")->required();
  cert->add_option("--n", n, "order")->required();
  cert->add_option("--checks", checks_text,
                   "uniformity,bijection,commutativity,prop1,counting,case_table");
  cert->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  cert->add_option("--out", out_file, "also write the report here");
  cert->add_flag("--alt-reading", alt_reading,
                 "record the uniformity histogram under the other reading too");
  add_reading(cert);

  auto* rend = app.add_subcommand("render", "ASCII or SVG diagram");
  rend->add_option("--path", path_text, "steps")->required();
  rend->add_option("--k", highlight, "highlighted line");
  rend->add_option("--format", format, "ascii or svg")
      ->check(CLI::IsMember({"ascii", "svg"}));
  rend->add_option("--class", cls_name, "class used for the trace map");
  rend->add_flag("--trace", trace_flag, "label P, A, B, B', Q for line K");
  add_reading(rend);

  if (!args.empty() && !args.front().starts_with("-") &&
      std::ranges::none_of(app.get_subcommands({}), [&](const CLI::App* sub) {
        return sub->get_name() == args.front();
      })) {
    err << "usage error: unknown subcommand '" << args.front() << "'\n" << app.help();
    return kUsage;
  }
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return kUsage;
  }

  try {
    const ActivityReading reading = reading_arg(reading_name);
    if (count->parsed()) {
      const PathClass cls = class_arg(cls_name);
      out << ordered_json{{"n", n},
                          {"class", path_class_name(cls)},
                          {"count", count_paths(n, cls).str()}}
                 .dump()
          << '\n';
    } else if (enumerate->parsed()) {
      const PathClass cls = class_arg(cls_name);
      std::uint64_t emitted = 0;
      PathEnumerator paths(n, cls);
      while (!limit || emitted < *limit) {
        auto p = paths.next();
        if (!p) break;
        out << format_path(*p) << '\n';
        ++emitted;
      }
    } else if (active->parsed()) {
      out << active_report(parse_path(path_text), reading).dump() << '\n';
    } else if (deact->parsed() || act->parsed()) {
      const MapResult r = apply_map(deact->parsed(), class_arg(cls_name),
                                    parse_path(path_text), k, reading);
      out << ordered_json{{"k", k},
                          {"path", format_path(r.path)},
                          {"trace", trace_to_json(r.trace)}}
                 .dump()
          << '\n';
    } else if (enc->parsed()) {
      const Encoding e = encode(parse_path(path_text), class_arg(cls_name),
                                LineOrder::kAscending, reading);
      out << ordered_json{{"set", line_set_to_json(e.active)},
                          {"delannoy", format_path(e.delannoy)}}
                 .dump()
          << '\n';
    } else if (dec->parsed()) {
      const LatticePath d = parse_path(delannoy_text);
      const LineSet s = LineSet::parse(d.order(), set_text);
      const LatticePath p =
          decode(s, d, class_arg(cls_name), LineOrder::kDescending, reading);
      out << ordered_json{{"path", format_path(p)}}.dump() << '\n';
    } else if (cert->parsed()) {
      CertifyOptions options;
      options.checks = checks_arg(checks_text);
      options.jobs = jobs;
      options.budget = budget_from_env();
      options.reading = reading;
      options.record_alternative_reading = alt_reading;
      const CertificationReport report = certify(n, class_arg(cls_name), options);
      const std::string text = report_to_json(report).dump(2);
      out << text << '\n';
      if (!out_file.empty()) {
        std::ofstream file(out_file);
        file << text << '\n';
        if (!file) {
          throw Error(ErrorCode::kInvalidInput, "cannot write '" + out_file + "'");
        }
      }
      if (!report.passed()) {
        err << "certification failed\n";
        return kCheckFailed;
      }
    } else if (rend->parsed()) {
      const LatticePath p = parse_path(path_text);
      RenderOptions options;
      options.format = format == "svg" ? RenderFormat::kSvg : RenderFormat::kAscii;
      options.highlight = highlight;
      options.show_trace = trace_flag;
      std::optional<DeactivationTrace> trace;
      if (trace_flag) {
        if (!highlight) {
          throw Error(ErrorCode::kInvalidInput, "--trace needs --k");
        }
        const PathClass cls = class_arg(cls_name);
        const bool is_active =
            *highlight >= 1 && *highlight < p.order() &&
            active_set(p, reading).contains(*highlight);
        if (*highlight >= 1 && *highlight < p.order()) {
          trace = apply_map(is_active, cls, p, *highlight, reading).trace;
        }
      }
      out << render(p, options, trace);
    }
  } catch (const Error& e) {
    err << e.what() << '\n';
    return e.code() == ErrorCode::kInternalAssertion ? kCheckFailed : kUsage;
  }
  return kOk;
}

}  // namespace activeset::cli
