// Copyright 2026 The q2graph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "q2g/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "doc_support.hpp"
#include "q2g/persistence/dot.hpp"
#include "q2g/persistence/json_codec.hpp"

namespace q2g::cli {
namespace {

namespace fs = std::filesystem;

const std::string kGolden = Q2G_GOLDEN_DIR;
const std::string kFixtures = Q2G_FIXTURE_DIR;

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "q2g");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("q2g_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = dir_ / name;
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
  }

  std::string doc_file(const std::string& name, const Graph& g) const {
    GraphDocument doc = GraphDocument::from_graph(g);
    return write(name, serialize(doc) + "\n");
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

bool single_error_line(const std::string& err, const std::string& rule) {
  return err.rfind("error[" + rule + "]: ", 0) == 0 && err.find('\n') == err.size() - 1;
}

TEST_F(CliTest, ApplyZOnPath) {
  const std::string in = doc_file("path.json", path_graph(3));
  const CliRun r = run({"apply", "--in", in, "--script", write("s.q2gs", "Z 2\n"), "--out", path("out.json")});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out, "vertices: 3 -> 2\nedges: 2 -> 0\nsteps: 1\n");
  EXPECT_TRUE(r.err.empty());
  const GraphDocument out = load_document(testing::slurp(path("out.json")));
  EXPECT_EQ(out.graph, Graph(2));
  EXPECT_EQ(out.journal.size(), 1u);
}

TEST_F(CliTest, ApplyReportsStepLine) {
  const std::string in = doc_file("path.json", path_graph(3));
  const CliRun r = run({"apply", "--in", in, "--script", write("s.q2gs", "X 9\n"), "--out", path("out.json")});
  EXPECT_EQ(r.code, kDomainError);
  EXPECT_TRUE(single_error_line(r.err, "not-found")) << r.err;
  EXPECT_NE(r.err.find("vertex 9 not found at line 1"), std::string::npos) << r.err;
  EXPECT_FALSE(fs::exists(path("out.json")));
}

TEST_F(CliTest, ApplyReportsLaterStep) {
  const std::string in = doc_file("path.json", path_graph(3));
  const CliRun r = run({"apply", "--in", in, "--script", write("s.q2gs", "# two steps\nZ 1\n\nE 1 1\n"), "--out",
                     path("out.json")});
  EXPECT_EQ(r.code, kDomainError);
  EXPECT_EQ(r.err, "error[loop]: loop edge 1-1 is prohibited at line 4 (step 2)\n");
}

TEST_F(CliTest, ApplyEmptyScriptKeepsDocument) {
  const std::string in = doc_file("path.json", path_graph(3));
  const CliRun r = run({"apply", "--in", in, "--script", write("s.q2gs", ""), "--out", path("out.json")});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(testing::slurp(path("out.json")), testing::slurp(in));
}

TEST_F(CliTest, ApplyScriptParseError) {
  const std::string in = doc_file("path.json", path_graph(3));
  const CliRun r = run({"apply", "--in", in, "--script", write("s.q2gs", "Q 1\n"), "--out", path("out.json")});
  EXPECT_EQ(r.code, kDomainError);
  EXPECT_EQ(r.err, "error[parse]: unknown command 'Q' at line 1\n");
}

TEST_F(CliTest, ApplyLiteralXRule) {
  const std::string in = doc_file("path.json", path_graph(3));
  const std::string script = write("s.q2gs", "X 1 2\n");
  EXPECT_EQ(run({"apply", "--in", in, "--script", script, "--out", path("bab.json")}).code, kOk);
  EXPECT_EQ(run({"apply", "--in", in, "--script", script, "--out", path("ab.json"), "--x-rule", "ab"}).code, kOk);
  EXPECT_EQ(load_document(testing::slurp(path("bab.json"))).graph, Graph(2));
  EXPECT_EQ(load_document(testing::slurp(path("ab.json"))).graph, graph_from_edges(2, {{1, 2}}));
  EXPECT_EQ(run({"apply", "--in", in, "--script", script, "--out", path("x.json"), "--x-rule", "abc"}).code,
            kUsageError);
}

TEST_F(CliTest, ApplyIsDeterministic) {
  const std::string in = write("five.json", testing::slurp(kGolden + "/five.q2g.json"));
  const std::string script = write("s.q2gs", "V\nE 6 1\nLC 2\nX 1\nY 3\nZ 1\n");
  const CliRun a = run({"apply", "--in", in, "--script", script, "--out", path("a.json")});
  const CliRun b = run({"apply", "--in", in, "--script", script, "--out", path("b.json")});
  EXPECT_EQ(a.code, kOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(testing::slurp(path("a.json")), testing::slurp(path("b.json")));
}

TEST_F(CliTest, GoldenRuns) {
  for (const std::string name : {"z1", "y1", "x1"}) {
    const CliRun r = run({"apply", "--in", kGolden + "/five.q2g.json", "--script", kGolden + "/" + name + ".q2gs",
                       "--out", path(name + ".json")});
    EXPECT_EQ(r.code, kOk) << r.err;
    EXPECT_EQ(testing::slurp(path(name + ".json")), testing::slurp(kGolden + "/" + name + ".q2g.json")) << name;
  }
}

TEST_F(CliTest, VerifyAllChecksPass) {
  const std::string in = write("five.json", testing::slurp(kGolden + "/five.q2g.json"));
  const CliRun r = run({"verify", "--in", in});
  EXPECT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out,
            "check        result  detail\n"
            "stabilizers  pass    5 generators\n"
            "lc           pass    5 vertices\n"
            "rules        pass    20 cases\n");
}

TEST_F(CliTest, VerifySelectedCheck) {
  const std::string in = doc_file("path.json", path_graph(3));
  const CliRun r = run({"verify", "--in", in, "--check-lc"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "check        result  detail\nlc           pass    3 vertices\n");
}

TEST_F(CliTest, VerifyLiteralXRuleFails) {
  const std::string in = doc_file("path.json", path_graph(3));
  const CliRun r = run({"verify", "--in", in, "--check-rules", "--x-rule", "ab"});
  EXPECT_EQ(r.code, kVerificationFailure);
  EXPECT_NE(r.out.find("rules        FAIL    10 cases, 2 failing"), std::string::npos) << r.out;
}

TEST_F(CliTest, VerifyLoopFixtureFailsAtLoad) {
  const CliRun r = run({"verify", "--in", kFixtures + "/loop.q2g.json"});
  EXPECT_EQ(r.code, kDomainError);
  EXPECT_TRUE(single_error_line(r.err, "loop")) << r.err;
}

TEST_F(CliTest, VerifyCapExceeded) {
  const std::string in = doc_file("big.json", path_graph(13));
  const CliRun r = run({"verify", "--in", in});
  EXPECT_EQ(r.code, kUsageError);
  EXPECT_TRUE(single_error_line(r.err, "resource-limit")) << r.err;
  EXPECT_EQ(run({"verify", "--in", in, "--check-stabilizers", "--max-qubits", "13"}).code, kOk);
}

TEST_F(CliTest, VerifyCapFromEnvironment) {
  const std::string in = doc_file("six.json", path_graph(6));
  ::setenv("Q2G_MAX_QUBITS", "5", 1);
  const CliRun r = run({"verify", "--in", in, "--check-stabilizers"});
  ::unsetenv("Q2G_MAX_QUBITS");
  EXPECT_EQ(r.code, kUsageError);
}

TEST_F(CliTest, VerifyRulesNeedSmallGraphs) {
  const std::string in = doc_file("six.json", path_graph(6));
  EXPECT_EQ(run({"verify", "--in", in, "--check-rules"}).code, kUsageError);
  const CliRun all = run({"verify", "--in", in});
  EXPECT_EQ(all.code, kOk);
  EXPECT_NE(all.out.find("rules        skip    needs at most 5 vertices"), std::string::npos) << all.out;
}

TEST_F(CliTest, LceqPathTriangle) {
  const CliRun r = run({"lceq", doc_file("p.json", path_graph(3)), doc_file("t.json", complete_graph(3))});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "equivalent\nLC 2\n");
}

TEST_F(CliTest, LceqPathEdgeless) {
  const CliRun r = run({"lceq", doc_file("p.json", path_graph(3)), doc_file("e.json", Graph(3))});
  EXPECT_EQ(r.code, kVerificationFailure);
  EXPECT_EQ(r.out, "not equivalent\n");
}

TEST_F(CliTest, LceqMissingFile) {
  const CliRun r = run({"lceq", path("missing.json"), doc_file("e.json", Graph(3))});
  EXPECT_EQ(r.code, kDomainError);
  EXPECT_TRUE(single_error_line(r.err, "io")) << r.err;
}

TEST_F(CliTest, ExportDot) {
  const CliRun r = run({"export", "--in", doc_file("t.json", complete_graph(3)), "--format", "dot"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, export_dot(complete_graph(3)));
  std::size_t edges = 0;
  for (std::size_t at = r.out.find("--"); at != std::string::npos; at = r.out.find("--", at + 2)) ++edges;
  EXPECT_EQ(edges, 3u);
}

TEST_F(CliTest, ExportEmptyAndJson) {
  const std::string in = doc_file("e.json", Graph{});
  EXPECT_EQ(run({"export", "--in", in, "--format", "dot"}).out, "graph G {}\n");
  EXPECT_EQ(run({"export", "--in", in, "--format", "json"}).out, testing::slurp(in));
}

TEST_F(CliTest, ExportBadFormat) {
  const CliRun r = run({"export", "--in", doc_file("e.json", Graph{}), "--format", "svg"});
  EXPECT_EQ(r.code, kUsageError);
  EXPECT_TRUE(single_error_line(r.err, "usage")) << r.err;
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, kUsageError);
  EXPECT_EQ(run({"frobnicate"}).code, kUsageError);
  EXPECT_EQ(run({"apply", "--in", "x"}).code, kUsageError);
  EXPECT_EQ(run({"serve", "--port", "70000"}).code, kUsageError);
  const CliRun help = run({"--help"});
  EXPECT_EQ(help.code, kOk);
  EXPECT_NE(help.out.find("apply"), std::string::npos);
}

}  // namespace
}  // namespace q2g::cli
