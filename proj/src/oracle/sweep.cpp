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

#include "q2g/oracle/sweep.hpp"

#include <cstdint>

#include "q2g/error.hpp"
#include "q2g/oracle.hpp"

namespace q2g::oracle {

std::vector<Graph> all_labelled_graphs(std::size_t n) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> slots;
  for (std::uint32_t a = 1; a <= n; ++a) {
    for (std::uint32_t b = a + 1; b <= n; ++b) slots.emplace_back(a, b);
  }
  if (slots.size() > 30) throw Error(rule::kResourceLimit, "too many graphs to enumerate");
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  std::vector<Graph> out;
  out.reserve(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Graph g(n);
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (mask >> s & 1u) g.insert_edge(VertexId{slots[s].first}, VertexId{slots[s].second});
    }
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<RuleCase> enumerate_rule_cases(const Graph& g) {
  std::vector<RuleCase> out;
  for (VertexId a : g.vertices()) {
    out.push_back({g, {PauliOp::Z, a, std::nullopt}});
    out.push_back({g, {PauliOp::Y, a, std::nullopt}});
    if (g.degree(a) == 0) {
      out.push_back({g, {PauliOp::X, a, std::nullopt}});
    } else {
      for (VertexId b : g.neighbours(a)) out.push_back({g, {PauliOp::X, a, b}});
    }
  }
  return out;
}

namespace {

bool rule_case_holds(const RuleCase& c, XRule rule) {
  try {
    return verify_measurement_rule(c.graph, c.step, rule);
  } catch (const Error&) {
    return false;
  }
}

bool stabilizer_case_holds(const Graph& g) {
  try {
    const StateVector sv = build_graph_state(g);
    if (!is_normalized(sv) || !stabilized_by(sv, g)) return false;
    for (VertexId a : g.vertices()) {
      if (!lc_unitary_check(g, a)) return false;
    }
    return true;
  } catch (const Error&) {
    return false;
  }
}

template <typename Item, typename Check>
SweepReport sweep_serial(std::span<const Item> items, Check check) {
  SweepReport report;
  report.cases = items.size();
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (!check(items[i])) report.failures.push_back(i);
  }
  return report;
}

template <typename Item, typename Check>
SweepReport sweep_parallel(std::span<const Item> items, Check check) {
  std::vector<std::uint8_t> ok(items.size(), 1);
  const std::int64_t count = static_cast<std::int64_t>(items.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < count; ++i) {
    ok[static_cast<std::size_t>(i)] = check(items[static_cast<std::size_t>(i)]) ? 1 : 0;
  }
  SweepReport report;
  report.cases = items.size();
  for (std::size_t i = 0; i < ok.size(); ++i) {
    if (!ok[i]) report.failures.push_back(i);
  }
  return report;
}

}  // namespace

namespace serial {
SweepReport verify_rules(std::span<const RuleCase> cases, XRule rule) {
  return sweep_serial(cases, [rule](const RuleCase& c) { return rule_case_holds(c, rule); });
}
SweepReport verify_stabilizer_suite(std::span<const Graph> graphs) {
  return sweep_serial(graphs, stabilizer_case_holds);
}
}  // namespace serial

namespace parallel {
SweepReport verify_rules(std::span<const RuleCase> cases, XRule rule) {
  return sweep_parallel(cases, [rule](const RuleCase& c) { return rule_case_holds(c, rule); });
}
SweepReport verify_stabilizer_suite(std::span<const Graph> graphs) {
  return sweep_parallel(graphs, stabilizer_case_holds);
}
}  // namespace parallel

}  // namespace q2g::oracle
