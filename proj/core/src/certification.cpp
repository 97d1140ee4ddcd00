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

#include "activeset/certification.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <thread>

#include "activeset/bijection.hpp"
#include "activeset/error.hpp"
#include "activeset/serialize.hpp"

namespace activeset {

std::string_view check_name(CheckKind kind) {
  switch (kind) {
    case CheckKind::kUniformity: return "uniformity";
    case CheckKind::kBijection: return "bijection";
    case CheckKind::kCommutativity: return "commutativity";
    case CheckKind::kProp1: return "prop1";
    case CheckKind::kCounting: return "counting";
    case CheckKind::kCaseTable: return "case_table";
  }
  return "unknown";
}

std::vector<CheckKind> all_checks() {
  return {CheckKind::kUniformity, CheckKind::kBijection,
          CheckKind::kCommutativity, CheckKind::kProp1,
          CheckKind::kCounting, CheckKind::kCaseTable};
}

std::optional<CheckKind> parse_check(std::string_view name) {
  for (auto kind : all_checks()) {
    if (check_name(kind) == name) return kind;
  }
  return std::nullopt;
}

bool CertificationReport::passed() const noexcept {
  return std::ranges::all_of(
      checks, [](const CheckResult& c) { return c.status == CheckStatus::kPass; });
}

const CheckResult* CertificationReport::find(CheckKind kind) const noexcept {
  auto it = std::ranges::find(checks, kind, &CheckResult::kind);
  return it == checks.end() ? nullptr : &*it;
}

namespace {

struct Sink {
  std::vector<Witness> witnesses;
  std::uint64_t failures = 0;

  void fail(const LatticePath& path, int line, std::string detail) {
    ++failures;
    if (witnesses.size() < kMaxWitnesses) {
      witnesses.push_back({format_path(path), line, std::move(detail)});
    }
  }

  void absorb(Sink&& other) {
    failures += other.failures;
    for (auto& w : other.witnesses) {
      if (witnesses.size() == kMaxWitnesses) break;
      witnesses.push_back(std::move(w));
    }
  }
};

struct Context {
  int n = 0;
  PathClass cls = PathClass::kGeneral;
  ActivityReading reading = ActivityReading::kExistential;
  bool sub() const { return cls == PathClass::kSubdiagonal; }

  MapResult deactivate(const LatticePath& p, int k) const {
    return sub() ? deactivate_sub(p, k, reading) : deactivate_gen(p, k, reading);
  }
  MapResult activate(const LatticePath& p, int k) const {
    return sub() ? activate_sub(p, k, reading) : activate_gen(p, k, reading);
  }
};

ActivityReading other_reading(ActivityReading r) {
  return r == ActivityReading::kExistential ? ActivityReading::kMaximal
                                            : ActivityReading::kExistential;
}

std::string set_text(const LineSet& s) { return "{" + s.to_string() + "}"; }

struct ShardState {
  std::uint64_t paths = 0;

  std::vector<std::uint64_t> histogram;
  std::vector<std::uint64_t> alternative;
  std::vector<std::string> samples;  // first path seen per active set

  Sink bijection;
  std::uint64_t active_pairs = 0;
  std::uint64_t inactive_pairs = 0;
  std::vector<std::pair<LatticePath, int>> images;

  Sink commutativity;
  std::uint64_t deactivation_pairs = 0;
  std::uint64_t activation_pairs = 0;
  std::uint64_t encodings = 0;

  Sink prop1;
  std::uint64_t delannoy_paths = 0;
  std::uint64_t full_active_paths = 0;

  Sink case_table;
  std::uint64_t applications = 0;
  std::uint64_t classified = 0;
  std::uint64_t overlaps = 0;
  std::array<std::uint64_t, 5> domain_cases{};
  std::array<std::uint64_t, 5> image_cases{};
};

bool wanted(std::optional<int> only, int k) { return !only || *only == k; }

void check_uniformity(const Context& ctx, const LatticePath& p,
                      ShardState& st, bool alternative) {
  const LineSet s = active_set(p, ctx.reading);
  const auto mask = s.mask();
  if (st.histogram[mask]++ == 0 && st.samples[mask].empty()) {
    st.samples[mask] = format_path(p);
  }
  if (alternative) ++st.alternative[active_set(p, other_reading(ctx.reading)).mask()];
}

void check_bijection(const Context& ctx, const LatticePath& p, ShardState& st,
                     std::optional<int> only) {
  LineSet active(ctx.n);
  try {
    active = active_set(p, ctx.reading);
  } catch (const Error& e) {
    st.bijection.fail(p, 0, e.what());
    return;
  }
  for (int k = 1; k < ctx.n; ++k) {
    if (!wanted(only, k)) continue;
    try {
      const bool was_active = active.contains(k);
      LineSet expected = active;
      if (was_active) {
        ++st.active_pairs;
        expected.erase(k);
      } else {
        ++st.inactive_pairs;
        expected.insert(k);
      }
      const MapResult r = was_active ? ctx.deactivate(p, k) : ctx.activate(p, k);
      if (ctx.sub() && !path_class_membership(r.path).subdiagonal) {
        st.bijection.fail(p, k, "result '" + format_path(r.path) +
                                    "' is not subdiagonal");
        continue;
      }
      const LineSet got = active_set(r.path, ctx.reading);
      if (got != expected) {
        st.bijection.fail(p, k, "activity delta: expected " +
                                    set_text(expected) + ", got " +
                                    set_text(got));
        continue;
      }
      const MapResult back =
          was_active ? ctx.activate(r.path, k) : ctx.deactivate(r.path, k);
      if (back.path != p) {
        st.bijection.fail(p, k, std::string(was_active ? "activate(deactivate)"
                                                       : "deactivate(activate)") +
                                    " returned '" + format_path(back.path) + "'");
        continue;
      }
      if (was_active) st.images.emplace_back(r.path, k);
    } catch (const Error& e) {
      st.bijection.fail(p, k, e.what());
    }
  }
}

void check_commutativity(const Context& ctx, const LatticePath& p,
                         ShardState& st, std::optional<int> only) {
  try {
    const LineSet active = active_set(p, ctx.reading);
    for (int k = 1; k < ctx.n; ++k) {
      if (!wanted(only, k)) continue;
      for (int l = k + 1; l < ctx.n; ++l) {
        if (active.contains(k) != active.contains(l)) continue;
        const bool deact = active.contains(k);
        auto apply = [&](const LatticePath& x, int line) {
          return deact ? ctx.deactivate(x, line).path
                       : ctx.activate(x, line).path;
        };
        ++(deact ? st.deactivation_pairs : st.activation_pairs);
        try {
          const LatticePath kl = apply(apply(p, k), l);
          const LatticePath lk = apply(apply(p, l), k);
          if (kl != lk) {
            st.commutativity.fail(
                p, k,
                std::string(deact ? "deactivating" : "activating") + " x=" +
                    std::to_string(k) + " then x=" + std::to_string(l) +
                    " gives '" + format_path(kl) + "', reverse order gives '" +
                    format_path(lk) + "'");
          }
        } catch (const Error& e) {
          st.commutativity.fail(p, k, "pair with x=" + std::to_string(l) +
                                          ": " + e.what());
        }
      }
    }
    if (only) return;
    ++st.encodings;
    const Encoding up = encode(p, ctx.cls, LineOrder::kAscending, ctx.reading);
    const Encoding down = encode(p, ctx.cls, LineOrder::kDescending, ctx.reading);
    if (up != down) {
      st.commutativity.fail(p, 0, "encode differs by line order: '" +
                                      format_path(up.delannoy) + "' vs '" +
                                      format_path(down.delannoy) + "'");
      return;
    }
    for (auto order : {LineOrder::kAscending, LineOrder::kDescending}) {
      const LatticePath back =
          decode(up.active, up.delannoy, ctx.cls, order, ctx.reading);
      if (back != p) {
        st.commutativity.fail(
            p, 0,
            std::string(order == LineOrder::kAscending ? "ascending"
                                                       : "descending") +
                " decode returned '" + format_path(back) + "'");
      }
    }
  } catch (const Error& e) {
    st.commutativity.fail(p, only.value_or(0), e.what());
  }
}

void check_prop1(const Context& ctx, const LatticePath& p, ShardState& st) {
  try {
    const Prop1Verdict v = check_prop1(p, ctx.reading);
    st.delannoy_paths += v.delannoy ? 1 : 0;
    st.full_active_paths += v.all_active ? 1 : 0;
    if (!v.consistent) st.prop1.fail(p, 0, v.detail);
  } catch (const Error& e) {
    st.prop1.fail(p, 0, e.what());
  }
}

std::string rows_text(const std::vector<CaseId>& rows) {
  std::string out;
  for (auto id : rows) {
    if (!out.empty()) out += ",";
    out += case_name(id);
  }
  return "[" + out + "]";
}

void check_case_table(const Context& ctx, const LatticePath& p, ShardState& st,
                      std::optional<int> only) {
  LineSet active(ctx.n);
  try {
    active = active_set(p, ctx.reading);
  } catch (const Error& e) {
    st.case_table.fail(p, 0, e.what());
    return;
  }
  const std::vector<CaseId> overlap{CaseId::kCase1, CaseId::kCase2};
  for (int k = 1; k < ctx.n; ++k) {
    if (!wanted(only, k)) continue;
    try {
      if (active.contains(k)) {
        ++st.applications;
        const MapResult r = ctx.deactivate(p, k);
        const FTildeCase domain = r.trace.ftilde_case;
        const FTildeCase image = classify_image_case(r.path, k, ctx.reading);
        ++st.domain_cases[static_cast<int>(domain.id) - 1];
        const bool agree =
            domain == image ||
            (domain.id == CaseId::kCase2 && image.id == CaseId::kCase1 &&
             image_case_candidates(r.path, k, ctx.reading) == overlap);
        if (!agree) {
          st.case_table.fail(
              p, k,
              "applied " + std::string(case_name(domain.id)) +
                  " but the image classifies as " +
                  std::string(case_name(image.id)));
        }
      } else {
        ++st.classified;
        const auto rows = image_case_candidates(p, k, ctx.reading);
        if (rows == overlap) {
          ++st.overlaps;
          // activate_gen cross-checks both inverse routes on the overlap.
          (void)activate_gen(p, k, ctx.reading);
        } else if (rows.size() != 1) {
          st.case_table.fail(p, k, "image table rows matched: " + rows_text(rows));
          continue;
        }
        ++st.image_cases[static_cast<int>(rows.front()) - 1];
      }
    } catch (const Error& e) {
      st.case_table.fail(p, k, e.what());
    }
  }
}

void run_path(const Context& ctx, const std::vector<CheckKind>& checks,
              bool alternative, const LatticePath& p, ShardState& st) {
  ++st.paths;
  for (auto kind : checks) {
    switch (kind) {
      case CheckKind::kUniformity: check_uniformity(ctx, p, st, alternative); break;
      case CheckKind::kBijection: check_bijection(ctx, p, st, std::nullopt); break;
      case CheckKind::kCommutativity: check_commutativity(ctx, p, st, std::nullopt); break;
      case CheckKind::kProp1: check_prop1(ctx, p, st); break;
      case CheckKind::kCaseTable: check_case_table(ctx, p, st, std::nullopt); break;
      case CheckKind::kCounting: break;
    }
  }
}

ShardState new_state(int n) {
  ShardState st;
  const std::size_t subsets = std::size_t{1} << (n - 1);
  st.histogram.assign(subsets, 0);
  st.alternative.assign(subsets, 0);
  st.samples.assign(subsets, {});
  return st;
}

void merge_into(ShardState& total, ShardState&& s) {
  total.paths += s.paths;
  for (std::size_t i = 0; i < total.histogram.size(); ++i) {
    total.histogram[i] += s.histogram[i];
    total.alternative[i] += s.alternative[i];
    if (total.samples[i].empty()) total.samples[i] = std::move(s.samples[i]);
  }
  total.bijection.absorb(std::move(s.bijection));
  total.active_pairs += s.active_pairs;
  total.inactive_pairs += s.inactive_pairs;
  std::ranges::move(s.images, std::back_inserter(total.images));
  total.commutativity.absorb(std::move(s.commutativity));
  total.deactivation_pairs += s.deactivation_pairs;
  total.activation_pairs += s.activation_pairs;
  total.encodings += s.encodings;
  total.prop1.absorb(std::move(s.prop1));
  total.delannoy_paths += s.delannoy_paths;
  total.full_active_paths += s.full_active_paths;
  total.case_table.absorb(std::move(s.case_table));
  total.applications += s.applications;
  total.classified += s.classified;
  total.overlaps += s.overlaps;
  for (std::size_t i = 0; i < 5; ++i) {
    total.domain_cases[i] += s.domain_cases[i];
    total.image_cases[i] += s.image_cases[i];
  }
}

ShardState enumerate_sharded(const Context& ctx,
                             const std::vector<CheckKind>& checks,
                             bool alternative, unsigned jobs) {
  const auto shards = first_steps(ctx.n, ctx.cls);
  std::vector<ShardState> results;
  results.reserve(shards.size());
  for (std::size_t i = 0; i < shards.size(); ++i) results.push_back(new_state(ctx.n));
  std::vector<std::exception_ptr> errors(shards.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < shards.size(); i = next++) {
      try {
        PathEnumerator e(ctx.n, ctx.cls, shards[i]);
        while (auto p = e.next()) run_path(ctx, checks, alternative, *p, results[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned workers =
      std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(shards.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < workers; ++t) pool.emplace_back(worker);
    worker();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  ShardState total = new_state(ctx.n);
  for (auto& r : results) merge_into(total, std::move(r));
  return total;
}

CheckResult make_result(CheckKind kind, Sink&& sink) {
  CheckResult r;
  r.kind = kind;
  r.failures = sink.failures;
  r.witnesses = std::move(sink.witnesses);
  r.status = r.failures == 0 ? CheckStatus::kPass : CheckStatus::kFail;
  return r;
}

ordered_json histogram_json(int n, const std::vector<std::uint64_t>& counts) {
  ordered_json out = ordered_json::array();
  for (std::size_t mask = 0; mask < counts.size(); ++mask) {
    out.push_back({{"set", line_set_to_json(LineSet::from_mask(n, mask))},
                   {"count", counts[mask]}});
  }
  return out;
}

bool all_equal_to(const std::vector<std::uint64_t>& counts,
                  const BigCount& expected) {
  return std::ranges::all_of(
      counts, [&](std::uint64_t c) { return BigCount(c) == expected; });
}

CheckResult finish_uniformity(const Context& ctx, ShardState& st,
                              bool alternative) {
  Sink sink;
  const BigCount expected = count_paths(ctx.n, delannoy_variant(ctx.cls));
  for (std::size_t mask = 0; mask < st.histogram.size(); ++mask) {
    if (BigCount(st.histogram[mask]) == expected) continue;
    const LineSet s = LineSet::from_mask(ctx.n, mask);
    ++sink.failures;
    if (sink.witnesses.size() < kMaxWitnesses) {
      sink.witnesses.push_back(
          {st.samples[mask], 0,
           "active set " + set_text(s) + " occurs " +
               std::to_string(st.histogram[mask]) + " times, expected " +
               expected.str()});
    }
  }
  CheckResult r = make_result(CheckKind::kUniformity, std::move(sink));
  r.stats["paths_examined"] = st.paths;
  r.stats["reading"] = activity_reading_name(ctx.reading);
  r.stats["subsets"] = st.histogram.size();
  r.stats["expected_per_subset"] = expected.str();
  r.stats["uniform"] = r.status == CheckStatus::kPass;
  r.stats["histogram"] = histogram_json(ctx.n, st.histogram);
  if (alternative) {
    r.stats["alternative"] = {
        {"reading", activity_reading_name(other_reading(ctx.reading))},
        {"uniform", all_equal_to(st.alternative, expected)},
        {"histogram", histogram_json(ctx.n, st.alternative)},
    };
  }
  return r;
}

CheckResult finish_bijection(ShardState& st) {
  Sink sink = std::move(st.bijection);
  std::ranges::sort(st.images);
  std::uint64_t distinct = 0;
  for (std::size_t i = 0; i < st.images.size(); ++i) {
    if (i > 0 && st.images[i] == st.images[i - 1]) {
      sink.fail(st.images[i].first, st.images[i].second,
                "image pair reached from two different domain pairs");
    } else {
      ++distinct;
    }
  }
  if (st.active_pairs != st.inactive_pairs) {
    ++sink.failures;
    if (sink.witnesses.size() < kMaxWitnesses) {
      sink.witnesses.push_back(
          {"", 0,
           std::to_string(st.active_pairs) + " active pairs but " +
               std::to_string(st.inactive_pairs) + " inactive pairs"});
    }
  }
  CheckResult r = make_result(CheckKind::kBijection, std::move(sink));
  r.stats["paths_examined"] = st.paths;
  r.stats["active_pairs"] = st.active_pairs;
  r.stats["inactive_pairs"] = st.inactive_pairs;
  r.stats["distinct_images"] = distinct;
  return r;
}

CheckResult finish_counting(const Context& ctx, std::optional<std::uint64_t> enumerated) {
  Sink sink;
  const BigCount dp = count_paths(ctx.n, ctx.cls);
  const BigCount unit = count_paths(ctx.n, delannoy_variant(ctx.cls));
  const BigCount relation = (BigCount(1) << (ctx.n - 1)) * unit;
  auto fail = [&](std::string detail) {
    ++sink.failures;
    sink.witnesses.push_back({"", 0, std::move(detail)});
  };
  if (dp != relation) {
    fail("count " + dp.str() + " != 2^" + std::to_string(ctx.n - 1) + " * " +
         unit.str());
  }
  if (enumerated && BigCount(*enumerated) != dp) {
    fail("enumeration produced " + std::to_string(*enumerated) +
         " paths, dynamic programming says " + dp.str());
  }
  CheckResult r = make_result(CheckKind::kCounting, std::move(sink));
  r.stats["count"] = dp.str();
  r.stats["delannoy_variant_count"] = unit.str();
  r.stats["relation_value"] = relation.str();
  r.stats["enumerated"] = enumerated.has_value();
  if (enumerated) r.stats["paths_examined"] = *enumerated;
  return r;
}

}  // namespace

CertificationReport certify(int n, PathClass cls, const CertifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (n < 1) {
    throw Error(ErrorCode::kInvalidInput,
                "order must be at least 1, got " + std::to_string(n));
  }
  if (cls != PathClass::kGeneral && cls != PathClass::kSubdiagonal) {
    throw Error(ErrorCode::kInvalidInput,
                "certification runs over general or subdiagonal paths");
  }
  std::vector<CheckKind> checks = options.checks.empty() ? all_checks() : options.checks;
  {
    std::vector<CheckKind> unique;
    for (auto kind : all_checks()) {
      if (std::ranges::find(checks, kind) != checks.end()) unique.push_back(kind);
    }
    checks = std::move(unique);
  }
  const Context ctx{n, cls, options.reading};

  const bool counting_only =
      checks.size() == 1 && checks.front() == CheckKind::kCounting;
  const bool enumerate = !counting_only || count_paths(n, cls) <= options.budget;
  if (enumerate) {
    require_within_budget(n, cls, options.budget);
    if (n - 1 > 30) {
      throw Error(ErrorCode::kBudgetExceeded, "too many line subsets");
    }
  }

  CertificationReport report;
  report.n = n;
  report.cls = cls;
  report.reading = options.reading;
  std::optional<ShardState> st;
  if (enumerate) {
    st = enumerate_sharded(ctx, checks, options.record_alternative_reading,
                           options.jobs);
  }
  for (auto kind : checks) {
    switch (kind) {
      case CheckKind::kUniformity:
        report.checks.push_back(
            finish_uniformity(ctx, *st, options.record_alternative_reading));
        break;
      case CheckKind::kBijection:
        report.checks.push_back(finish_bijection(*st));
        break;
      case CheckKind::kCommutativity: {
        auto r = make_result(kind, std::move(st->commutativity));
        r.stats["paths_examined"] = st->paths;
        r.stats["deactivation_pairs"] = st->deactivation_pairs;
        r.stats["activation_pairs"] = st->activation_pairs;
        r.stats["encodings"] = st->encodings;
        report.checks.push_back(std::move(r));
        break;
      }
      case CheckKind::kProp1: {
        auto r = make_result(kind, std::move(st->prop1));
        r.stats["paths_examined"] = st->paths;
        r.stats["delannoy_paths"] = st->delannoy_paths;
        r.stats["full_active_set_paths"] = st->full_active_paths;
        report.checks.push_back(std::move(r));
        break;
      }
      case CheckKind::kCounting:
        report.checks.push_back(finish_counting(
            ctx, st ? std::optional<std::uint64_t>(st->paths) : std::nullopt));
        break;
      case CheckKind::kCaseTable: {
        auto r = make_result(kind, std::move(st->case_table));
        r.stats["paths_examined"] = st->paths;
        r.stats["applications"] = st->applications;
        r.stats["inactive_pairs"] = st->classified;
        r.stats["overlaps"] = st->overlaps;
        ordered_json domain = ordered_json::object();
        ordered_json image = ordered_json::object();
        for (int i = 0; i < 5; ++i) {
          const auto name = std::string(case_name(static_cast<CaseId>(i + 1)));
          domain[name] = st->domain_cases[i];
          image[name] = st->image_cases[i];
        }
        r.stats["domain_cases"] = std::move(domain);
        r.stats["image_cases"] = std::move(image);
        report.checks.push_back(std::move(r));
        break;
      }
    }
  }
  report.wall_time = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

std::vector<std::string> replay_witness(CheckKind kind, const Witness& witness,
                                        PathClass cls, ActivityReading reading) {
  const LatticePath p = parse_path(witness.path);
  const Context ctx{p.order(), cls, reading};
  std::optional<int> only;
  if (witness.line != 0) only = witness.line;
  ShardState st = new_state(p.order());
  Sink* sink = nullptr;
  switch (kind) {
    case CheckKind::kBijection:
      check_bijection(ctx, p, st, only);
      sink = &st.bijection;
      break;
    case CheckKind::kCommutativity:
      check_commutativity(ctx, p, st, only);
      sink = &st.commutativity;
      break;
    case CheckKind::kProp1:
      check_prop1(ctx, p, st);
      sink = &st.prop1;
      break;
    case CheckKind::kCaseTable:
      check_case_table(ctx, p, st, only);
      sink = &st.case_table;
      break;
    case CheckKind::kUniformity:
    case CheckKind::kCounting:
      // Aggregate checks: a single path cannot fail them.
      return {};
  }
  std::vector<std::string> details;
  for (const auto& w : sink->witnesses) details.push_back(w.detail);
  return details;
}

nlohmann::ordered_json report_to_json(const CertificationReport& report,
                                      bool include_timing) {
  ordered_json out;
  out["n"] = report.n;
  out["class"] = path_class_name(report.cls);
  out["reading"] = activity_reading_name(report.reading);
  out["checks"] = ordered_json::array();
  for (const auto& c : report.checks) {
    ordered_json witnesses = ordered_json::array();
    for (const auto& w : c.witnesses) {
      witnesses.push_back({{"path", w.path}, {"line", w.line}, {"detail", w.detail}});
    }
    out["checks"].push_back({
        {"name", check_name(c.kind)},
        {"status", c.status == CheckStatus::kPass ? "pass" : "fail"},
        {"failures", c.failures},
        {"witnesses", std::move(witnesses)},
        {"stats", c.stats},
    });
  }
  if (include_timing) out["wall_time_ms"] = report.wall_time.count();
  return out;
}

}  // namespace activeset
