// Copyright 2026 The tqftkit Authors
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
#include <nlohmann/json.hpp>
#include <sstream>

#include "generators.hpp"
#include "tqft/cli.hpp"
#include "tqft/cob_term.hpp"

namespace tqft {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempFile {
 public:
  TempFile(const std::string& name, const std::string& content)
      : path_(std::filesystem::temp_directory_path() / ("tqft_cli_test_" + std::to_string(::getpid()) + "_" + name)) {
    std::ofstream(path_) << content;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

class ScopedEnv {
 public:
  ScopedEnv(const char* name, const char* value) : name_(name) { ::setenv(name, value, 1); }
  ~ScopedEnv() { ::unsetenv(name_); }

 private:
  const char* name_;
};

TEST(Cli, EvalIdentity) {
  const Result r = run({"eval", "--expr", "id", "--group", "S3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1\t0\t0\n0\t1\t0\n0\t0\t1\n");
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, GenusTwoAllBackends) {
  const Result r = run({"invariant", "--genus", "2", "--group", "S3", "--backend", "all"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "manifold\tgroup\tcount\tfrobenius\tspan\nsurface(2)\tS3\t81\t81\t81\n");
}

TEST(Cli, MalformedExpressionExitsOne) {
  const Result r = run({"normalize", "--expr", "mult ;"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("offset 6"), std::string::npos) << r.err;
}

TEST(Cli, ArityErrorExitsOne) {
  EXPECT_EQ(run({"parse", "--expr", "mult ; mult"}).code, 1);
}

TEST(Cli, UsageErrorsExitOne) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"eval", "--expr", "id"}).code, 1);
  EXPECT_EQ(run({"eval", "--expr", "id", "--group", "S3", "--bogus"}).code, 1);
  EXPECT_EQ(run({"invariant", "--group", "S3"}).code, 1);
  EXPECT_EQ(run({"invariant", "--genus", "1", "--torus3", "--group", "S3"}).code, 1);
  EXPECT_EQ(run({"invariant", "--genus", "1", "--group", "S3", "--backend", "magic"}).code, 1);
  EXPECT_EQ(run({"invariant", "--lens", "3", "--group", "S3"}).code, 1);
  EXPECT_EQ(run({"invariant", "--torus3", "--group", "S3", "--backend", "span"}).code, 1);
  EXPECT_EQ(run({"quantize", "--expr", "id", "--group", "X9"}).code, 1);
  EXPECT_EQ(run({"eval", "--expr", "id", "--group", "S3", "--format", "xml"}).code, 1);
  EXPECT_EQ(run({"validate", "--algebra", "/nonexistent/algebra.json"}).code, 1);
}

TEST(Cli, HelpExitsZero) {
  const Result r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("invariant"), std::string::npos);
}

TEST(Cli, ResourceCapExitsTwo) {
  ScopedEnv cap("TQFT_ENUM_CAP", "1000");
  EXPECT_EQ(run({"invariant", "--genus", "2", "--group", "S3"}).code, 2);
  EXPECT_EQ(run({"quantize", "--expr", "unit ; comult ; mult ; comult ; mult ; counit", "--group", "S3"}).code, 2);
  EXPECT_EQ(run({"invariant", "--genus", "1", "--group", "S3"}).code, 0);
}

TEST(Cli, MalformedCapIsUserError) {
  ScopedEnv cap("TQFT_ENUM_CAP", "lots");
  EXPECT_EQ(run({"invariant", "--genus", "1", "--group", "S3"}).code, 1);
}

TEST(Cli, DefaultCapRejectsHugeEnumeration) {
  EXPECT_EQ(run({"invariant", "--genus", "3", "--group", "S4"}).code, 2);
}

TEST(Cli, ParseEchoesTree) {
  const Result r = run({"parse", "--expr", "unit*id;mult"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "expr\t((unit * id) ; mult)\narity\t1\t1\n");
  const Result j = run({"parse", "--expr", "unit*id;mult", "--format", "json"});
  const auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc["expr"], "((unit * id) ; mult)");
  EXPECT_EQ(doc["tree"]["op"], "compose");
  EXPECT_EQ(doc["tree"]["args"][1]["generator"], "mult");
}

TEST(Cli, NormalizeTorus) {
  const Result r = run({"normalize", "--expr", "unit;comult;mult;counit"});
  EXPECT_EQ(r.out, "arity\t0\t0\nclosed\t1\n");
  const auto doc = nlohmann::json::parse(run({"normalize", "--expr", "comult", "--format", "json"}).out);
  EXPECT_EQ(doc["components"][0]["outputs"], nlohmann::json::array({0, 1}));
}

TEST(Cli, ValidateReportsAndSetsExitCode) {
  TempFile good("good.json", R"({"dim":1,"mult":[[0,0,0,"1"]],"unit":["1"],"counit":["1"],"name":"Q"})");
  const Result ok = run({"validate", "--algebra", good.path()});
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out,
            "associativity\tpass\t-\t-\ncommutativity\tpass\t-\t-\nunit\tpass\t-\t-\n"
            "nondegeneracy\tpass\t-\t-\ncoassociativity\tpass\t-\t-\nfrobenius\tpass\t-\t-\n");
  TempFile bad("bad.json", R"({"dim":1,"mult":[[0,0,0,"1"]],"unit":["1"],"counit":["0"]})");
  const Result fail = run({"validate", "--algebra", bad.path(), "--format", "json"});
  EXPECT_EQ(fail.code, 1);
  const auto doc = nlohmann::json::parse(fail.out);
  EXPECT_EQ(doc[3]["axiom"], "nondegeneracy");
  EXPECT_EQ(doc[3]["passed"], false);
  TempFile junk("junk.json", "{");
  EXPECT_EQ(run({"validate", "--algebra", junk.path()}).code, 1);
}

TEST(Cli, EvalWithAlgebraFile) {
  TempFile dual("dual.json", R"({"dim":2,"mult":[[0,0,0,1],[0,1,1,1],[1,0,1,1]],"unit":[1,0],"counit":[0,1]})");
  const Result r = run({"eval", "--expr", "comult;mult", "--algebra", dual.path()});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "0\t0\n2\t0\n");
  EXPECT_EQ(run({"eval", "--expr", "id", "--algebra", dual.path(), "--group", "S3"}).code, 1);
}

TEST(Cli, QuantizeMatchesEval) {
  for (const char* expr : {"mult", "comult ; mult", "twist ; mult", "unit ; comult", "comult * id ; id * mult"}) {
    const Result q = run({"quantize", "--expr", expr, "--group", "S3"});
    const Result e = run({"eval", "--expr", expr, "--group", "S3"});
    EXPECT_EQ(q.code, 0);
    EXPECT_EQ(q.out, e.out) << expr;
  }
  const auto doc = nlohmann::json::parse(run({"quantize", "--expr", "mult", "--group", "Z2", "--format", "json"}).out);
  EXPECT_EQ(doc["rows"], 2);
  EXPECT_EQ(doc["cols"], 4);
}

TEST(Cli, InvariantKinds) {
  EXPECT_EQ(run({"invariant", "--lens", "3,1", "--group", "S3"}).out, "manifold\tgroup\tcount\nlens(3,1)\tS3\t1/2\n");
  EXPECT_EQ(run({"invariant", "--torus3", "--group", "S3", "--backend", "all"}).out,
            "manifold\tgroup\tcount\ntorus3\tS3\t8\n");
  TempFile pres("torus.txt", "2\na b a^-1 b^-1\n");
  const Result r = run({"invariant", "--presentation", pres.path(), "--group", "Q8"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\tQ8\t5\n"), std::string::npos) << r.out;
  TempFile broken("broken.txt", "2\na q\n");
  EXPECT_EQ(run({"invariant", "--presentation", broken.path(), "--group", "Q8"}).code, 1);
  const auto doc = nlohmann::json::parse(
      run({"invariant", "--genus", "0", "--group", "S4", "--backend", "all", "--format", "json"}).out);
  EXPECT_EQ(doc["count"], "1/24");
  EXPECT_EQ(doc["span"], "1/24");
}

TEST(Cli, OracleTable) {
  const Result r = run({"oracle", "--group", "Z2", "--max-genus", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "genus\tcount\tfrobenius\tspan\tall_equal\n"
            "0\t1/2\t1/2\t1/2\ttrue\n1\t2\t2\t2\ttrue\n2\t8\t8\t8\ttrue\n");
  const auto doc = nlohmann::json::parse(run({"oracle", "--group", "S3", "--max-genus", "1", "--format", "json"}).out);
  EXPECT_EQ(doc[1]["count"], "3");
  EXPECT_EQ(doc[1]["all_equal"], true);
}

TEST(Cli, BackendAllRowsAgree) {
  for (const auto& name : builtin_group_names()) {
    for (int genus = 0; genus <= 2; ++genus) {
      const Result r = run({"invariant", "--genus", std::to_string(genus), "--group", name, "--backend", "all"});
      ASSERT_EQ(r.code, 0) << r.err;
      const std::string row = r.out.substr(r.out.find('\n') + 1);
      std::vector<std::string> fields;
      std::stringstream ss(row.substr(0, row.size() - 1));
      for (std::string f; std::getline(ss, f, '\t');) fields.push_back(f);
      ASSERT_EQ(fields.size(), 5u);
      EXPECT_EQ(fields[2], fields[3]) << name;
      EXPECT_EQ(fields[3], fields[4]) << name;
    }
  }
}

TEST(Cli, RoundTripThroughParse) {
  testing::TermGenerator gen(41);
  for (int i = 0; i < 100; ++i) {
    const CobTerm t = gen.any(5);
    const Result r = run({"parse", "--expr", to_string(t)});
    ASSERT_EQ(r.code, 0);
    const std::string echoed = r.out.substr(5, r.out.find('\n') - 5);
    EXPECT_EQ(parse_cob(echoed), t);
  }
}

TEST(Cli, OutputIsByteIdenticalAcrossRuns) {
  const std::vector<std::vector<std::string>> commands{
      {"oracle", "--group", "Q8", "--max-genus", "2"},
      {"quantize", "--expr", "comult ; twist ; mult", "--group", "D4", "--format", "json"},
      {"invariant", "--genus", "2", "--group", "A4", "--backend", "all"},
      {"normalize", "--expr", "(id * comult) ; (twist * id) ; (id * mult)"},
  };
  for (const auto& c : commands) {
    const Result a = run(c);
    const Result b = run(c);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
  }
}

}  // namespace
}  // namespace tqft
