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

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "activeset/bijection.hpp"
#include "activeset/serialize.hpp"
#include "cli.hpp"

namespace activeset {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(CliTest, Count) {
  const Outcome o = run({"count", "--class", "general", "--n", "4"});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out, "{\"n\":4,\"class\":\"general\",\"count\":\"2568\"}\n");
  EXPECT_EQ(run({"count", "--class", "subdelannoy", "--n", "5"}).out,
            "{\"n\":5,\"class\":\"subdelannoy\",\"count\":\"394\"}\n");
}

TEST(CliTest, DeactivateEmbedsCoreResult) {
  const std::string path = "2,0 2,1 3,2 2,1 1,2 0,1 1,1 1,2 0,1 0,1";
  const Outcome o = run({"deactivate", "--k", "4", "--path", path});
  ASSERT_EQ(o.code, 0) << o.err;
  const auto j = nlohmann::ordered_json::parse(o.out);
  EXPECT_EQ(j["path"], "2,0 5,1 2,1 1,2 0,1 1,1 1,4 0,1 0,1");
  EXPECT_EQ(j["trace"]["h"], 2);
  EXPECT_EQ(j["trace"]["case"], "case1");
  EXPECT_EQ(j["trace"]["P"], nlohmann::ordered_json::parse("[4,1]"));
  EXPECT_EQ(j["trace"]["Q"], nlohmann::ordered_json::parse("[12,10]"));
  const MapResult r = deactivate_gen(parse_path(path), 4);
  EXPECT_EQ(j["trace"], trace_to_json(r.trace));
  EXPECT_EQ(run({"deactivate", "--k", "4", "--path", path, "--trace"}).out, o.out);
}

TEST(CliTest, SubdiagonalClassFlag) {
  const Outcome o = run({"activate", "--class", "subdiagonal", "--k", "6", "--path",
                         "3,0 2,0 4,3 1,0 1,7 1,1 0,1"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(nlohmann::json::parse(o.out)["path"], "3,0 2,0 1,5 3,2 1,0 1,3 1,1 0,1");
  const Outcome bad = run({"activate", "--class", "subdiagonal", "--k", "1", "--path", "0,2 2,0"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("NotSubdiagonal"), std::string::npos);
}

TEST(CliTest, ActivateOnFullActiveSetFails) {
  const Outcome o = run({"activate", "--k", "3", "--path", "1,1 1,1 1,1"});
  EXPECT_EQ(o.code, 2);
  EXPECT_NE(o.err.find("LineNotInactive"), std::string::npos);
  EXPECT_TRUE(o.out.empty());
  EXPECT_EQ(run({"activate", "--k", "1", "--path", "1,1 1,1 1,1"}).code, 2);
}

TEST(CliTest, Active) {
  const Outcome o = run({"active", "--path", "2,1 1,1 1,0 1,3"});
  ASSERT_EQ(o.code, 0);
  EXPECT_EQ(o.out,
            "{\"n\":5,\"active_set\":[2],\"findings\":[{\"k\":2,\"vertex\":[2,1],"
            "\"condition\":\"below_balanced\"}]}\n");
  const Outcome m = run({"active", "--path", "2,1 1,1 1,0 1,3", "--reading", "maximal"});
  EXPECT_EQ(nlohmann::json::parse(m.out)["active_set"].size(), 0U);
}

TEST(CliTest, EncodeDecode) {
  const Outcome e = run({"encode", "--class", "subdiagonal", "--path", "1,0 1,0 0,2"});
  ASSERT_EQ(e.code, 0);
  EXPECT_EQ(e.out, "{\"set\":[],\"delannoy\":\"1,0 0,1 1,0 0,1\"}\n");
  const Outcome d = run({"decode", "--class", "subdiagonal", "--set", "", "--delannoy",
                         "1,0 0,1 1,0 0,1"});
  ASSERT_EQ(d.code, 0) << d.err;
  EXPECT_EQ(d.out, "{\"path\":\"1,0 1,0 0,2\"}\n");
  const Outcome full = run({"decode", "--class", "general", "--set", "1,2,3", "--delannoy",
                            "1,1 1,1 1,1 1,1"});
  EXPECT_EQ(full.out, "{\"path\":\"1,1 1,1 1,1 1,1\"}\n");
  const Outcome part = run({"decode", "--class", "general", "--set", "1,3", "--delannoy",
                            "1,1 1,1 1,1 1,1"});
  EXPECT_EQ(part.out, "{\"path\":\"1,1 2,2 1,1\"}\n");
  EXPECT_EQ(run({"decode", "--class", "general", "--set", "", "--delannoy", "2,2"}).code, 2);
}

TEST(CliTest, EnumerateStreamsWithLimit) {
  const Outcome all = run({"enumerate", "--class", "general", "--n", "2"});
  EXPECT_EQ(std::ranges::count(all.out, '\n'), 26);
  const Outcome some = run({"enumerate", "--class", "general", "--n", "2", "--limit", "4"});
  EXPECT_EQ(std::ranges::count(some.out, '\n'), 4);
  EXPECT_EQ(all.out.substr(0, some.out.size()), some.out);
}

TEST(CliTest, Certify) {
  const auto file = std::filesystem::temp_directory_path() / "activeset_cli_report.json";
  const Outcome o = run({"certify", "--class", "subdiagonal", "--n", "3", "--checks",
                         "uniformity,counting", "--jobs", "2", "--out", file.string(),
                         "--alt-reading"});
  ASSERT_EQ(o.code, 0) << o.err;
  const auto j = nlohmann::ordered_json::parse(o.out);
  EXPECT_EQ(j["checks"].size(), 2U);
  EXPECT_TRUE(j["checks"][0]["stats"].contains("alternative"));
  std::ifstream in(file);
  EXPECT_EQ(nlohmann::ordered_json::parse(in), j);
  std::filesystem::remove(file);
}

TEST(CliTest, CertifyFailureExitsOne) {
  const Outcome o = run({"certify", "--class", "subdiagonal", "--n", "3", "--checks",
                         "uniformity", "--reading", "maximal"});
  EXPECT_EQ(o.code, 1);
  EXPECT_EQ(nlohmann::json::parse(o.out)["checks"][0]["status"], "fail");
}

TEST(CliTest, BudgetFromEnvironment) {
  ::setenv("ACTIVESET_BUDGET", "10", 1);
  const Outcome o = run({"certify", "--class", "general", "--n", "3"});
  ::setenv("ACTIVESET_BUDGET", "ten", 1);
  const Outcome bad = run({"certify", "--class", "general", "--n", "2"});
  ::unsetenv("ACTIVESET_BUDGET");
  EXPECT_EQ(o.code, 2);
  EXPECT_NE(o.err.find("BudgetExceeded"), std::string::npos);
  EXPECT_EQ(bad.code, 2);
}

TEST(CliTest, Render) {
  const Outcome a = run({"render", "--path", "1,1 1,1", "--k", "1"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(std::ranges::count(a.out, 'o'), 3);
  const Outcome s = run({"render", "--path", "3,0 2,0 1,5 3,2 1,0 1,3 1,1 0,1", "--k", "6",
                         "--format", "svg", "--trace"});
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_NE(s.out.find("P=(6,5)"), std::string::npos);
  EXPECT_NE(s.out.find("Q=(11,10)"), std::string::npos);
  EXPECT_EQ(run({"render", "--path", "1,1 1,1", "--k", "5"}).code, 2);
  EXPECT_EQ(run({"render", "--path", "1,1", "--format", "png"}).code, 2);
}

TEST(CliTest, UsageErrors) {
  const Outcome none = run({});
  EXPECT_EQ(none.code, 2);
  const Outcome unknown = run({"frobnicate"});
  EXPECT_EQ(unknown.code, 2);
  EXPECT_NE(unknown.err.find("frobnicate"), std::string::npos);
  const Outcome missing = run({"count", "--class", "general"});
  EXPECT_EQ(missing.code, 2);
  EXPECT_NE(missing.err.find("--n"), std::string::npos);
  const Outcome extra = run({"count", "--class", "general", "--n", "2", "--bogus"});
  EXPECT_EQ(extra.code, 2);
  EXPECT_NE(extra.err.find("--bogus"), std::string::npos);
  EXPECT_EQ(run({"count", "--class", "catalan", "--n", "2"}).code, 2);
  EXPECT_EQ(run({"active", "--path", "1,0 0,0 0,1"}).code, 2);
  EXPECT_EQ(run({"certify", "--class", "general", "--n", "2", "--checks", "speed"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

}  // namespace
}  // namespace activeset
