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

#ifndef Q2G_TRANSFORMS_HPP
#define Q2G_TRANSFORMS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "q2g/graph.hpp"

namespace q2g {

enum class PauliOp { I, X, Y, Z };

char pauli_letter(PauliOp op);
std::optional<PauliOp> pauli_from_letter(char c);

/// How an X measurement rewrites the graph once the special neighbour b of
/// the measured vertex a is fixed.
enum class XRule {
  /// LC at b, LC at a, LC at b, then delete a. Agrees with the projected
  /// statevector up to local Cliffords; this is the engine default.
  kLcBAB,
  /// LC at a, LC at b, then delete a: the two-click editor sequence taken
  /// literally. Kept for comparison. The oracle rejects it (it is
  /// LC-equivalent to a Y measurement, not an X measurement).
  kLcAB,
};

struct MeasurementStep {
  PauliOp op = PauliOp::I;
  VertexId target;
  std::optional<VertexId> special_neighbour;
};

struct StepResult {
  Graph graph;
  /// Pre-step labels of survivors to post-step labels.
  LabelMap label_map;
  /// Pre-step label of the measured qubit; empty for I.
  std::optional<VertexId> consumed;
  /// Special neighbour actually used (after defaulting), X only.
  std::optional<VertexId> special_neighbour;
};

StepResult measure_z(const Graph& g, VertexId a);
StepResult measure_y(const Graph& g, VertexId a);
/// Without `b`, the lowest-labelled neighbour of `a` is used. An isolated `a`
/// is simply deleted and must not be given a `b`.
StepResult measure_x(const Graph& g, VertexId a, std::optional<VertexId> b = std::nullopt,
                     XRule rule = XRule::kLcBAB);
StepResult apply_step(const Graph& g, const MeasurementStep& step, XRule rule = XRule::kLcBAB);

/// One successful step of a reduction.
struct ReductionEntry {
  std::size_t index = 0;
  /// The step as applied, with the special neighbour resolved.
  MeasurementStep step;
  StepResult result;
  /// Label the consumed qubit had in the graph the reduction started from.
  std::optional<VertexId> consumed_original;
};

struct StepFailure {
  std::size_t index = 0;
  std::string rule;
  std::string message;
};

struct ReductionResult {
  /// Remainder graph; on failure, the graph after the last successful step.
  Graph graph;
  std::vector<ReductionEntry> journal;
  /// Labels of the starting graph to labels of `graph`, for every survivor.
  LabelMap cumulative;
  std::optional<StepFailure> failure;

  bool ok() const { return !failure.has_value(); }
};

/// Applies the steps in order. Each step's labels refer to the graph as left
/// by the previous step. Stops at the first failing step.
ReductionResult asg_reduce(const Graph& g, const std::vector<MeasurementStep>& steps,
                           XRule rule = XRule::kLcBAB);

struct LcEquivalence {
  bool equivalent = false;
  /// Vertices to locally complement, in order, to turn the first graph into
  /// the second.
  std::vector<VertexId> witness;
};

inline constexpr std::size_t kDefaultLcSearchCap = 10;

/// Breadth-first search over the local-complementation orbit of `g1`.
/// Throws resource-limit if either graph exceeds `max_vertices`.
LcEquivalence graphs_lc_equivalent(const Graph& g1, const Graph& g2,
                                   std::size_t max_vertices = kDefaultLcSearchCap);

Graph replay_local_complements(const Graph& g, const std::vector<VertexId>& sequence);

}  // namespace q2g

#endif  // Q2G_TRANSFORMS_HPP
