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

#include "q2g/transforms.hpp"

#include <gtest/gtest.h>

#include <random>

#include "q2g/error.hpp"
#include "test_support.hpp"

namespace q2g {
namespace {

using testing::Adj;
using testing::ref_delete;
using testing::ref_local_complement;
using testing::thrown_rule;
using testing::to_adj;

VertexId V(std::uint32_t v) { return VertexId{v}; }

MeasurementStep step(PauliOp op, std::uint32_t target, std::optional<std::uint32_t> b = std::nullopt) {
  MeasurementStep s{op, V(target), std::nullopt};
  if (b) s.special_neighbour = V(*b);
  return s;
}

Adj ref_x(const Adj& m, std::size_t a, std::size_t b) {
  return ref_delete(ref_local_complement(ref_local_complement(ref_local_complement(m, b), a), b), a);
}

TEST(Pauli, Letters) {
  for (PauliOp op : {PauliOp::I, PauliOp::X, PauliOp::Y, PauliOp::Z}) {
    EXPECT_EQ(pauli_from_letter(pauli_letter(op)), op);
  }
  EXPECT_FALSE(pauli_from_letter('Q').has_value());
}

TEST(MeasureZ, PathCentre) {
  const StepResult r = measure_z(path_graph(3), V(2));
  EXPECT_EQ(r.graph, Graph(2));
  EXPECT_EQ(r.label_map, LabelMap({{V(1), V(1)}, {V(3), V(2)}}));
  EXPECT_EQ(r.consumed, V(2));
}

TEST(MeasureZ, PathEnd) { EXPECT_EQ(measure_z(path_graph(3), V(3)).graph, graph_from_edges(2, {{1, 2}})); }

TEST(MeasureZ, IsolatedVertexLeavesRestAlone) {
  const Graph g = graph_from_edges(4, {{2, 3}, {3, 4}});
  EXPECT_EQ(measure_z(g, V(1)).graph, path_graph(3));
}

TEST(MeasureZ, UnknownVertex) { EXPECT_EQ(thrown_rule([] { measure_z(Graph(2), V(3)); }), rule::kNotFound); }

TEST(MeasureY, PathCentre) { EXPECT_EQ(measure_y(path_graph(3), V(2)).graph, graph_from_edges(2, {{1, 2}})); }

TEST(MeasureY, PathLeaf) { EXPECT_EQ(measure_y(path_graph(3), V(1)).graph, graph_from_edges(2, {{1, 2}})); }

TEST(MeasureY, StarCentreGivesTriangle) { EXPECT_EQ(measure_y(star_graph(3), V(1)).graph, complete_graph(3)); }

TEST(MeasureY, TriangleVertexLeavesTwoIsolatedVertices) {
  // tau_1 removes {2,3}; deleting 1 then leaves no edges.
  EXPECT_EQ(measure_y(complete_graph(3), V(1)).graph, Graph(2));
}

TEST(MeasureX, PathLeafDefaultRule) {
  const StepResult r = measure_x(path_graph(3), V(1), V(2));
  EXPECT_EQ(r.graph, Graph(2));
  EXPECT_EQ(r.special_neighbour, V(2));
}

TEST(MeasureX, PathLeafLiteralRule) {
  EXPECT_EQ(measure_x(path_graph(3), V(1), V(2), XRule::kLcAB).graph, graph_from_edges(2, {{1, 2}}));
}

TEST(MeasureX, PathCentreBothRules) {
  EXPECT_EQ(measure_x(path_graph(3), V(2), V(1)).graph, graph_from_edges(2, {{1, 2}}));
  EXPECT_EQ(measure_x(path_graph(3), V(2), V(1), XRule::kLcAB).graph, graph_from_edges(2, {{1, 2}}));
}

TEST(MeasureX, IsolatedVertexIsDeleted) {
  const Graph g = graph_from_edges(3, {{2, 3}});
  const StepResult r = measure_x(g, V(1));
  EXPECT_EQ(r.graph, graph_from_edges(2, {{1, 2}}));
  EXPECT_FALSE(r.special_neighbour.has_value());
}

TEST(MeasureX, DefaultSpecialNeighbourIsLowest) {
  const Graph g = star_graph(3);
  EXPECT_EQ(measure_x(g, V(1)).special_neighbour, V(2));
  EXPECT_EQ(measure_x(g, V(1)).graph, measure_x(g, V(1), V(2)).graph);
}

TEST(MeasureX, SpecialNeighbourErrors) {
  EXPECT_EQ(thrown_rule([] { measure_x(path_graph(3), V(1), V(3)); }), rule::kInvalidSpecialNeighbour);
  EXPECT_EQ(thrown_rule([] { measure_x(path_graph(3), V(1), V(1)); }), rule::kInvalidSpecialNeighbour);
  EXPECT_EQ(thrown_rule([] { measure_x(Graph(2), V(1), V(2)); }), rule::kInvalidSpecialNeighbour);
  EXPECT_EQ(thrown_rule([] { measure_x(Graph(2), V(5)); }), rule::kNotFound);
}

TEST(ApplyStep, Dispatch) {
  const Graph p = path_graph(3);
  const StepResult id = apply_step(p, step(PauliOp::I, 1));
  EXPECT_EQ(id.graph, p);
  EXPECT_EQ(id.label_map, LabelMap::identity(3));
  EXPECT_FALSE(id.consumed.has_value());
  EXPECT_EQ(apply_step(p, step(PauliOp::Z, 2)).graph, Graph(2));
  EXPECT_EQ(apply_step(p, step(PauliOp::X, 1, 2)).graph, Graph(2));
  EXPECT_EQ(apply_step(p, step(PauliOp::X, 1, 2), XRule::kLcAB).graph, graph_from_edges(2, {{1, 2}}));
}

TEST(ApplyStep, SpecialNeighbourOnlyForX) {
  EXPECT_EQ(thrown_rule([] { apply_step(path_graph(3), step(PauliOp::Z, 1, 2)); }),
            rule::kInvalidSpecialNeighbour);
  EXPECT_EQ(thrown_rule([] { apply_step(path_graph(3), step(PauliOp::I, 4)); }), rule::kNotFound);
}

TEST(Measurements, MatchReferenceOnRandomGraphs) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = testing::random_graph(rng, 1 + trial % 8);
    const Adj m = to_adj(g);
    for (VertexId a : g.vertices()) {
      EXPECT_EQ(to_adj(measure_z(g, a).graph), ref_delete(m, a.index()));
      EXPECT_EQ(to_adj(measure_y(g, a).graph), ref_delete(ref_local_complement(m, a.index()), a.index()));
      EXPECT_EQ(measure_y(g, a).graph, measure_z(local_complement(g, a), a).graph);
      for (VertexId b : g.neighbours(a)) {
        EXPECT_EQ(to_adj(measure_x(g, a, b).graph), ref_x(m, a.index(), b.index()));
        EXPECT_EQ(to_adj(measure_x(g, a, b, XRule::kLcAB).graph),
                  ref_delete(ref_local_complement(ref_local_complement(m, a.index()), b.index()), a.index()));
      }
    }
  }
}

TEST(Measurements, DifferentSpecialNeighboursAreLcEquivalent) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = testing::random_graph(rng, 2 + trial % 5);
    for (VertexId a : g.vertices()) {
      const auto& nbrs = g.neighbours(a);
      if (nbrs.size() < 2) continue;
      const Graph first = measure_x(g, a, *nbrs.begin()).graph;
      for (VertexId b : nbrs) {
        const Graph other = measure_x(g, a, b).graph;
        const LcEquivalence eq = graphs_lc_equivalent(first, other);
        ASSERT_TRUE(eq.equivalent) << to_string(g) << " a=" << a.value << " b=" << b.value;
        EXPECT_EQ(replay_local_complements(first, eq.witness), other);
      }
    }
  }
}

TEST(AsgReduce, TwoZSteps) {
  const ReductionResult r = asg_reduce(path_graph(3), {step(PauliOp::Z, 2), step(PauliOp::Z, 1)});
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.graph, Graph(1));
  ASSERT_EQ(r.journal.size(), 2u);
  EXPECT_EQ(r.journal[0].consumed_original, V(2));
  EXPECT_EQ(r.journal[1].consumed_original, V(1));
  EXPECT_EQ(r.cumulative, LabelMap({{V(3), V(1)}}));
}

TEST(AsgReduce, EmptyStepList) {
  const ReductionResult r = asg_reduce(complete_graph(4), {});
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.graph, complete_graph(4));
  EXPECT_TRUE(r.journal.empty());
  EXPECT_EQ(r.cumulative, LabelMap::identity(4));
}

TEST(AsgReduce, TriangleY) {
  const ReductionResult r = asg_reduce(complete_graph(3), {step(PauliOp::Y, 1)});
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.graph, Graph(2));
}

TEST(AsgReduce, StopsAtFirstFailure) {
  const ReductionResult r =
      asg_reduce(path_graph(3), {step(PauliOp::Z, 1), step(PauliOp::Z, 3), step(PauliOp::Z, 1)});
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.failure->index, 1u);
  EXPECT_EQ(r.failure->rule, rule::kNotFound);
  EXPECT_EQ(r.graph, graph_from_edges(2, {{1, 2}}));
  EXPECT_EQ(r.journal.size(), 1u);
}

TEST(AsgReduce, VertexCountDropsByNonIdentitySteps) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + trial % 7;
    const Graph g = testing::random_graph(rng, n);
    std::vector<MeasurementStep> steps;
    std::size_t removing = 0;
    std::size_t remaining = n;
    for (int k = 0; k < 4 && remaining > 0; ++k) {
      const auto op = static_cast<PauliOp>(std::uniform_int_distribution<int>(0, 3)(rng));
      const auto t = std::uniform_int_distribution<std::uint32_t>(1, static_cast<std::uint32_t>(remaining))(rng);
      steps.push_back(step(op, t));
      if (op != PauliOp::I) {
        ++removing;
        --remaining;
      }
    }
    const ReductionResult r = asg_reduce(g, steps);
    ASSERT_TRUE(r.ok());
    EXPECT_EQ(r.graph.vertex_count(), n - removing);
    EXPECT_TRUE(r.cumulative.is_order_preserving());
    EXPECT_TRUE(r.cumulative.has_contiguous_image());
    EXPECT_EQ(r.cumulative.size(), n - removing);
  }
}

TEST(LcEquivalence, PathAndTriangle) {
  const LcEquivalence eq = graphs_lc_equivalent(path_graph(3), complete_graph(3));
  ASSERT_TRUE(eq.equivalent);
  EXPECT_EQ(eq.witness, std::vector<VertexId>{V(2)});
}

TEST(LcEquivalence, ComponentsDiffer) { EXPECT_FALSE(graphs_lc_equivalent(path_graph(3), Graph(3)).equivalent); }

TEST(LcEquivalence, Reflexive) {
  const LcEquivalence eq = graphs_lc_equivalent(star_graph(4), star_graph(4));
  EXPECT_TRUE(eq.equivalent);
  EXPECT_TRUE(eq.witness.empty());
}

TEST(LcEquivalence, VertexCountMismatchIsFalse) {
  EXPECT_FALSE(graphs_lc_equivalent(path_graph(3), path_graph(4)).equivalent);
}

TEST(LcEquivalence, CapExceeded) {
  EXPECT_EQ(thrown_rule([] { graphs_lc_equivalent(path_graph(11), path_graph(11)); }), rule::kResourceLimit);
  EXPECT_EQ(thrown_rule([] { graphs_lc_equivalent(path_graph(4), path_graph(4), 3); }), rule::kResourceLimit);
}

TEST(LcEquivalence, SymmetricWithReplayableWitness) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const Graph g = testing::random_graph(rng, n);
    // Half the pairs are related by construction.
    Graph h = testing::random_graph(rng, n);
    if (trial % 2 == 0) {
      h = g;
      for (int k = 0; k < 3; ++k) {
        h = local_complement(h, V(std::uniform_int_distribution<std::uint32_t>(1, static_cast<std::uint32_t>(n))(rng)));
      }
    }
    const LcEquivalence forward = graphs_lc_equivalent(g, h);
    const LcEquivalence backward = graphs_lc_equivalent(h, g);
    EXPECT_EQ(forward.equivalent, backward.equivalent);
    if (trial % 2 == 0) {
      EXPECT_TRUE(forward.equivalent);
    }
    if (forward.equivalent) {
      EXPECT_EQ(replay_local_complements(g, forward.witness), h);
      EXPECT_EQ(replay_local_complements(h, backward.witness), g);
    }
  }
}

}  // namespace
}  // namespace q2g
