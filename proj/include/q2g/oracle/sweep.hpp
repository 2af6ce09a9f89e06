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

#ifndef Q2G_ORACLE_SWEEP_HPP
#define Q2G_ORACLE_SWEEP_HPP

// Batch verification. Each case is independent, so the parallel variants
// fan out over cases with OpenMP and collect failures in case order; the
// serial variants are the reference they are tested against.

#include <cstddef>
#include <span>
#include <vector>

#include "q2g/graph.hpp"
#include "q2g/transforms.hpp"

namespace q2g::oracle {

struct RuleCase {
  Graph graph;
  MeasurementStep step;
};

/// Every labelled simple graph on n vertices (2^(n(n-1)/2) of them), in
/// order of their edge bitmask.
std::vector<Graph> all_labelled_graphs(std::size_t n);

/// Z and Y at every vertex, and X at every vertex with every admissible
/// special neighbour (or none, for isolated vertices).
std::vector<RuleCase> enumerate_rule_cases(const Graph& g);

struct SweepReport {
  std::size_t cases = 0;
  /// Indices of failing cases, ascending.
  std::vector<std::size_t> failures;

  bool passed() const { return failures.empty(); }
  bool operator==(const SweepReport&) const = default;
};

namespace serial {
SweepReport verify_rules(std::span<const RuleCase> cases, XRule rule = XRule::kLcBAB);
/// Per graph: stabilizers fix |G>, |G> is normalized, and the LC unitary
/// check holds at every vertex.
SweepReport verify_stabilizer_suite(std::span<const Graph> graphs);
}  // namespace serial

namespace parallel {
SweepReport verify_rules(std::span<const RuleCase> cases, XRule rule = XRule::kLcBAB);
SweepReport verify_stabilizer_suite(std::span<const Graph> graphs);
}  // namespace parallel

}  // namespace q2g::oracle

#endif  // Q2G_ORACLE_SWEEP_HPP
