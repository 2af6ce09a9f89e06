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

#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "q2g/error.hpp"
#include "q2g/oracle.hpp"
#include "q2g/oracle/sweep.hpp"
#include "q2g/persistence/dot.hpp"
#include "q2g/persistence/json_codec.hpp"
#include "q2g/persistence/script.hpp"
#include "q2g/service/server.hpp"

namespace q2g::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(rule::kIo, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << text) || !out.flush()) throw Error(rule::kIo, "cannot write '" + path + "'");
}

GraphDocument read_document(const std::string& path) { return load_document(read_file(path)); }

int report(std::ostream& err, std::string_view rule, const std::string& message, int code) {
  err << "error[" << rule << "]: " << message << '\n';
  return code;
}

XRule parse_x_rule(const std::string& name) { return name == "ab" ? XRule::kLcAB : XRule::kLcBAB; }

struct ApplyOptions {
  std::string in;
  std::string script;
  std::string out;
  std::string x_rule = "bab";
};

int cmd_apply(const ApplyOptions& o, std::ostream& out, std::ostream& err) {
  GraphDocument doc;
  Script script;
  try {
    doc = read_document(o.in);
    script = parse_script(read_file(o.script));
  } catch (const Error& e) {
    return report(err, e.rule(), e.what(), kDomainError);
  }
  const XRule rule = parse_x_rule(o.x_rule);
  const std::size_t before = doc.graph.vertex_count();
  const std::size_t edges_before = doc.graph.edge_count();
  for (std::size_t k = 0; k < script.steps.size(); ++k) {
    const ScriptStep& step = script.steps[k];
    Operation op = step.op;
    if (op.kind == OpKind::kMeasureX) op.x_rule = rule;
    try {
      apply_operation(doc, op);
    } catch (const Error& e) {
      return report(err, e.rule(),
                    std::string(e.what()) + " at line " + std::to_string(step.line) + " (step " +
                        std::to_string(k + 1) + ")",
                    kDomainError);
    }
  }
  try {
    write_file(o.out, serialize(doc) + "\n");
  } catch (const Error& e) {
    return report(err, e.rule(), e.what(), kDomainError);
  }
  out << "vertices: " << before << " -> " << doc.graph.vertex_count() << '\n'
      << "edges: " << edges_before << " -> " << doc.graph.edge_count() << '\n'
      << "steps: " << script.steps.size() << '\n';
  return kOk;
}

struct VerifyOptions {
  std::string in;
  bool stabilizers = false;
  bool lc = false;
  bool rules = false;
  std::size_t max_qubits = 0;
  std::string x_rule = "bab";
};

struct CheckRow {
  std::string name;
  std::string result;
  std::string detail;
};

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  GraphDocument doc;
  try {
    doc = read_document(o.in);
  } catch (const Error& e) {
    return report(err, e.rule(), e.what(), kDomainError);
  }
  const Graph& g = doc.graph;
  const std::size_t n = g.vertex_count();
  const bool all = !o.stabilizers && !o.lc && !o.rules;
  const std::size_t cap = o.max_qubits ? o.max_qubits : oracle::default_qubit_cap();
  if (n > cap) {
    return report(err, rule::kResourceLimit,
                  "graph has " + std::to_string(n) + " vertices but the qubit cap is " + std::to_string(cap) +
                      "; raise it with --max-qubits or " + oracle::kQubitCapEnv,
                  kUsageError);
  }
  if (o.rules && n > oracle::kRuleCheckVertexCap) {
    return report(err, rule::kResourceLimit,
                  "rule check needs at most " + std::to_string(oracle::kRuleCheckVertexCap) +
                      " vertices, graph has " + std::to_string(n),
                  kUsageError);
  }

  std::vector<CheckRow> rows;
  bool failed = false;
  auto add = [&](std::string name, bool pass, std::string detail) {
    failed = failed || !pass;
    rows.push_back({std::move(name), pass ? "pass" : "FAIL", std::move(detail)});
  };
  try {
    if (all || o.stabilizers) {
      const oracle::StateVector sv = oracle::build_graph_state(g, cap);
      const bool normalized = oracle::is_normalized(sv);
      const bool stabilized = oracle::stabilized_by(sv, g);
      add("stabilizers", normalized && stabilized,
          std::to_string(n) + " generators" + (normalized ? "" : ", state not normalized"));
    }
    if (all || o.lc) {
      std::vector<std::uint32_t> bad;
      for (VertexId v : g.vertices()) {
        if (!oracle::lc_unitary_check(g, v, cap)) bad.push_back(v.value);
      }
      std::string detail = std::to_string(n) + " vertices";
      for (std::size_t i = 0; i < bad.size(); ++i) detail += (i ? "," : "; failing at ") + std::to_string(bad[i]);
      add("lc", bad.empty(), detail);
    }
    if (all || o.rules) {
      if (n > oracle::kRuleCheckVertexCap) {
        rows.push_back({"rules", "skip",
                        "needs at most " + std::to_string(oracle::kRuleCheckVertexCap) + " vertices"});
      } else {
        const auto cases = oracle::enumerate_rule_cases(g);
        const oracle::SweepReport r = oracle::parallel::verify_rules(cases, parse_x_rule(o.x_rule));
        std::string detail = std::to_string(r.cases) + " cases";
        if (!r.passed()) detail += ", " + std::to_string(r.failures.size()) + " failing";
        add("rules", r.passed(), detail);
      }
    }
  } catch (const Error& e) {
    const int code = e.rule() == rule::kResourceLimit ? kUsageError : kDomainError;
    return report(err, e.rule(), e.what(), code);
  }

  out << std::left << std::setw(13) << "check" << std::setw(8) << "result" << "detail\n";
  for (const CheckRow& r : rows) out << std::setw(13) << r.name << std::setw(8) << r.result << r.detail << '\n';
  return failed ? kVerificationFailure : kOk;
}

int cmd_lceq(const std::string& a, const std::string& b, std::ostream& out, std::ostream& err) {
  GraphDocument da;
  GraphDocument db;
  try {
    da = read_document(a);
    db = read_document(b);
  } catch (const Error& e) {
    return report(err, e.rule(), e.what(), kDomainError);
  }
  LcEquivalence eq;
  try {
    eq = graphs_lc_equivalent(da.graph, db.graph);
  } catch (const Error& e) {
    return report(err, e.rule(), e.what(), e.rule() == rule::kResourceLimit ? kUsageError : kDomainError);
  }
  if (!eq.equivalent) {
    out << "not equivalent\n";
    return kVerificationFailure;
  }
  out << "equivalent\n";
  for (VertexId v : eq.witness) out << "LC " << v.value << '\n';
  return kOk;
}

int cmd_export(const std::string& in, const std::string& format, std::ostream& out, std::ostream& err) {
  GraphDocument doc;
  try {
    doc = read_document(in);
  } catch (const Error& e) {
    return report(err, e.rule(), e.what(), kDomainError);
  }
  if (format == "dot") {
    out << export_dot(doc.graph);
  } else {
    out << serialize(doc) << '\n';
  }
  return kOk;
}

int cmd_serve(const std::string& address, int port, std::ostream& out, std::ostream& err) {
  service::SessionStore store;
  service::Server server(store);
  const int bound = server.bind(address, port);
  if (bound < 0) {
    return report(err, rule::kIo, "cannot bind " + address + ":" + std::to_string(port), kDomainError);
  }
  out << "listening on http://" << address << ':' << bound << std::endl;
  return server.listen() ? kOk : report(err, rule::kIo, "server stopped unexpectedly", kDomainError);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"q2graph: graph-state rewrite workbench", "q2g"};
  app.require_subcommand(1);
  const std::vector<std::string> x_rules{"bab", "ab"};

  ApplyOptions apply;
  auto* apply_cmd = app.add_subcommand("apply", "Apply an operation script to a document");
  apply_cmd->add_option("--in", apply.in, "Input document")->required();
  apply_cmd->add_option("--script", apply.script, "Operation script")->required();
  apply_cmd->add_option("--out", apply.out, "Output document")->required();
  apply_cmd->add_option("--x-rule", apply.x_rule, "X-measurement rewrite: bab (default) or ab")
      ->check(CLI::IsMember(x_rules));

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a document against the statevector oracle");
  verify_cmd->add_option("--in", verify.in, "Input document")->required();
  verify_cmd->add_flag("--check-stabilizers", verify.stabilizers, "Stabilizer fixed point");
  verify_cmd->add_flag("--check-lc", verify.lc, "Local complementation against its unitary");
  verify_cmd->add_flag("--check-rules", verify.rules, "Measurement rules against projection");
  verify_cmd->add_option("--max-qubits", verify.max_qubits, "Qubit cap")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--x-rule", verify.x_rule, "X-measurement rewrite: bab (default) or ab")
      ->check(CLI::IsMember(x_rules));

  std::string lceq_a;
  std::string lceq_b;
  auto* lceq_cmd = app.add_subcommand("lceq", "Decide local-complementation equivalence");
  lceq_cmd->add_option("a", lceq_a, "First document")->required();
  lceq_cmd->add_option("b", lceq_b, "Second document")->required();

  std::string export_in;
  std::string export_format;
  auto* export_cmd = app.add_subcommand("export", "Write a document as DOT or JSON");
  export_cmd->add_option("--in", export_in, "Input document")->required();
  export_cmd->add_option("--format", export_format, "dot or json")
      ->required()
      ->check(CLI::IsMember({"dot", "json"}));

  int port = 8080;
  std::string address = "127.0.0.1";
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP session service");
  serve_cmd->add_option("--port", port, "TCP port, 0 for any")->check(CLI::Range(0, 65535));
  serve_cmd->add_option("--bind", address, "Listen address");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    return report(err, "usage", e.what(), kUsageError);
  }

  if (*apply_cmd) return cmd_apply(apply, out, err);
  if (*verify_cmd) return cmd_verify(verify, out, err);
  if (*lceq_cmd) return cmd_lceq(lceq_a, lceq_b, out, err);
  if (*export_cmd) return cmd_export(export_in, export_format, out, err);
  return cmd_serve(address, port, out, err);
}

}  // namespace q2g::cli
