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

#include "q2g/graph.hpp"

#include <gtest/gtest.h>

#include <limits>
#include <random>

#include "q2g/error.hpp"
#include "test_support.hpp"

namespace q2g {
namespace {

using testing::thrown_message;
using testing::thrown_rule;
using testing::to_adj;

VertexId V(std::uint32_t v) { return VertexId{v}; }

Graph triangle() { return complete_graph(3); }

void expect_simple(const Graph& g) {
  for (const Edge& e : g.edges()) {
    EXPECT_NE(e.lo, e.hi);
    EXPECT_TRUE(g.has_vertex(e.lo));
    EXPECT_TRUE(g.has_vertex(e.hi));
  }
  std::size_t degree_sum = 0;
  for (VertexId v : g.vertices()) degree_sum += g.degree(v);
  EXPECT_EQ(degree_sum, 2 * g.edge_count());
  const auto vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) EXPECT_EQ(vs[i].value, i + 1);
}

TEST(AddVertex, EmptyGraphGetsVertexOne) {
  auto [g, v] = add_vertex(Graph{});
  EXPECT_EQ(v, V(1));
  EXPECT_EQ(g.vertex_count(), 1u);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(AddVertex, NewLabelIsCountPlusOne) {
  const Graph two = graph_from_edges(2, {{1, 2}});
  auto [g, v] = add_vertex(two);
  EXPECT_EQ(v, V(3));
  EXPECT_EQ(g.edges(), two.edges());
}

TEST(AddVertex, FiveVertexGraphGainsIsolatedSix) {
  const Graph five = path_graph(5);
  auto [g, v] = add_vertex(five);
  EXPECT_EQ(v, V(6));
  EXPECT_EQ(g.degree(V(6)), 0u);
}

TEST(AddVertex, RejectsNonFinitePosition) {
  VertexAttrs bad;
  bad.position.x = std::numeric_limits<double>::infinity();
  EXPECT_EQ(thrown_rule([&] { add_vertex(Graph{}, bad); }), rule::kNonFinitePosition);
  bad.position.x = 0.0;
  bad.position.y = std::numeric_limits<double>::quiet_NaN();
  EXPECT_EQ(thrown_rule([&] { add_vertex(Graph{}, bad); }), rule::kNonFinitePosition);
}

TEST(AddVertex, KeepsAttributes) {
  VertexAttrs a;
  a.is_input = true;
  a.position = {3.5, -2.0};
  auto [g, v] = add_vertex(Graph{}, a);
  EXPECT_EQ(g.attrs(v), a);
}

TEST(RemoveVertex, MiddleOfPath) {
  auto [g, map] = remove_vertex(path_graph(3), V(2));
  EXPECT_EQ(g.vertex_count(), 2u);
  EXPECT_EQ(g.edge_count(), 0u);
  EXPECT_EQ(map, LabelMap({{V(1), V(1)}, {V(3), V(2)}}));
}

TEST(RemoveVertex, EndOfPath) {
  auto [g, map] = remove_vertex(path_graph(3), V(1));
  EXPECT_EQ(g, graph_from_edges(2, {{1, 2}}));
  EXPECT_EQ(map, LabelMap({{V(2), V(1)}, {V(3), V(2)}}));
}

TEST(RemoveVertex, LastVertexLeavesEmptyGraph) {
  auto [g, map] = remove_vertex(Graph(1), V(1));
  EXPECT_TRUE(g.empty());
  EXPECT_TRUE(map.empty());
}

TEST(RemoveVertex, UnknownVertex) {
  EXPECT_EQ(thrown_rule([] { remove_vertex(path_graph(3), V(4)); }), rule::kNotFound);
  EXPECT_EQ(thrown_rule([] { remove_vertex(Graph{}, V(1)); }), rule::kNotFound);
  EXPECT_EQ(thrown_message([] { remove_vertex(path_graph(3), V(7)); }), "vertex 7 not found");
}

TEST(RemoveVertex, AttributesFollowTheVertex) {
  Graph g(3);
  for (std::uint32_t i = 1; i <= 3; ++i) g.set_attrs(V(i), {i == 3, {double(i), 0.0}});
  auto [out, map] = remove_vertex(g, V(1));
  EXPECT_EQ(out.attrs(V(1)).position.x, 2.0);
  EXPECT_EQ(out.attrs(V(2)).position.x, 3.0);
  EXPECT_TRUE(out.attrs(V(2)).is_input);
}

TEST(RemoveVertex, MatchesReferenceOnRandomGraphs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 7;
    const Graph g = testing::random_graph(rng, n);
    for (std::uint32_t a = 1; a <= n; ++a) {
      auto [out, map] = remove_vertex(g, V(a));
      EXPECT_EQ(to_adj(out), testing::ref_delete(to_adj(g), a - 1));
      EXPECT_TRUE(map.is_order_preserving());
      EXPECT_TRUE(map.has_contiguous_image());
      EXPECT_EQ(map.size(), n - 1);
      EXPECT_FALSE(map.apply(V(a)).has_value());
      expect_simple(out);
    }
  }
}

TEST(AddEdge, Basic) {
  EXPECT_EQ(add_edge(Graph(2), V(1), V(2)).edges(), (std::set<Edge>{Edge(V(1), V(2))}));
}

TEST(AddEdge, LoopProhibited) {
  EXPECT_EQ(thrown_rule([] { add_edge(Graph(2), V(1), V(1)); }), rule::kLoop);
}

TEST(AddEdge, DuplicateProhibited) {
  const Graph once = add_edge(Graph(2), V(1), V(2));
  EXPECT_EQ(thrown_rule([&] { add_edge(once, V(1), V(2)); }), rule::kDuplicateEdge);
  EXPECT_EQ(thrown_rule([&] { add_edge(once, V(2), V(1)); }), rule::kDuplicateEdge);
}

TEST(AddEdge, UnknownEndpoint) {
  EXPECT_EQ(thrown_rule([] { add_edge(Graph(2), V(1), V(3)); }), rule::kNotFound);
}

TEST(RemoveEdge, TriangleToPath) {
  const Graph g = remove_edge(triangle(), V(1), V(3));
  EXPECT_EQ(g, path_graph(3));
}

TEST(RemoveEdge, LabelsRetained) {
  const Graph g = remove_edge(graph_from_edges(2, {{1, 2}}), V(1), V(2));
  EXPECT_EQ(g.vertex_count(), 2u);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(RemoveEdge, MissingEdge) {
  EXPECT_EQ(thrown_rule([] { remove_edge(path_graph(3), V(1), V(3)); }), rule::kNotFound);
  EXPECT_EQ(thrown_message([] { remove_edge(path_graph(3), V(1), V(3)); }), "edge 1-3 not found");
}

TEST(Neighbourhood, Examples) {
  EXPECT_EQ(neighbourhood(path_graph(3), V(2)), (std::set<VertexId>{V(1), V(3)}));
  EXPECT_EQ(neighbourhood(path_graph(3), V(1)), (std::set<VertexId>{V(2)}));
  EXPECT_TRUE(neighbourhood(Graph(1), V(1)).empty());
  EXPECT_EQ(thrown_rule([] { neighbourhood(Graph(1), V(2)); }), rule::kNotFound);
}

TEST(Neighbourhood, MatchesAdjacencyRecomputedFromEdges) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = testing::random_graph(rng, 1 + trial % 8);
    const auto m = to_adj(g);
    for (VertexId a : g.vertices()) {
      std::set<VertexId> expected;
      for (std::size_t j = 0; j < m.size(); ++j) {
        if (m[a.index()][j]) expected.insert(V(static_cast<std::uint32_t>(j + 1)));
      }
      EXPECT_EQ(neighbourhood(g, a), expected);
      EXPECT_FALSE(expected.count(a));
    }
  }
}

TEST(Complement, Examples) {
  EXPECT_EQ(complement(triangle()).edge_count(), 0u);
  EXPECT_EQ(complement(path_graph(3)), graph_from_edges(3, {{1, 3}}));
}

TEST(Complement, InvolutionAndReference) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = testing::random_graph(rng, trial % 9);
    EXPECT_EQ(to_adj(complement(g)), testing::ref_complement(to_adj(g)));
    EXPECT_EQ(complement(complement(g)), g);
  }
}

TEST(LocalComplement, PathCentreGivesTriangle) {
  EXPECT_EQ(local_complement(path_graph(3), V(2)), triangle());
}

TEST(LocalComplement, TriangleAtOneGivesPathThroughOne) {
  EXPECT_EQ(local_complement(triangle(), V(1)), graph_from_edges(3, {{1, 2}, {1, 3}}));
}

TEST(LocalComplement, StarCentreGivesCompleteGraph) {
  EXPECT_EQ(local_complement(star_graph(3), V(1)), complete_graph(4));
}

TEST(LocalComplement, LeafIsIdentity) {
  EXPECT_EQ(local_complement(path_graph(3), V(1)), path_graph(3));
  EXPECT_EQ(local_complement(star_graph(4), V(5)), star_graph(4));
}

TEST(LocalComplement, UnknownVertex) {
  EXPECT_EQ(thrown_rule([] { local_complement(Graph{}, V(1)); }), rule::kNotFound);
}

TEST(LocalComplement, MatchesReferenceAndPreservesInvariants) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = testing::random_graph(rng, 1 + trial % 9);
    for (VertexId a : g.vertices()) {
      const Graph out = local_complement(g, a);
      EXPECT_EQ(to_adj(out), testing::ref_local_complement(to_adj(g), a.index()));
      EXPECT_EQ(local_complement(out, a), g);
      EXPECT_EQ(out.vertex_count(), g.vertex_count());
      EXPECT_EQ(out.degree(a), g.degree(a));
      EXPECT_EQ(testing::ref_components(to_adj(out)), testing::ref_components(to_adj(g)));
      expect_simple(out);
    }
  }
}

TEST(LabelMap, CompactionAndCompose) {
  const LabelMap first = LabelMap::compaction(4, V(2));
  EXPECT_EQ(first, LabelMap({{V(1), V(1)}, {V(3), V(2)}, {V(4), V(3)}}));
  const LabelMap second = LabelMap::compaction(3, V(1));
  const LabelMap both = LabelMap::compose(first, second);
  EXPECT_EQ(both, LabelMap({{V(3), V(1)}, {V(4), V(2)}}));
  EXPECT_EQ(both.preimage(V(2)), V(4));
  EXPECT_FALSE(both.apply(V(1)).has_value());
  EXPECT_EQ(LabelMap::compose(LabelMap::identity(3), second), second);
}

TEST(LabelMap, OrderAndContiguity) {
  EXPECT_TRUE(LabelMap::identity(4).is_order_preserving());
  EXPECT_FALSE(LabelMap({{V(1), V(2)}, {V(2), V(1)}}).is_order_preserving());
  EXPECT_FALSE(LabelMap({{V(1), V(1)}, {V(2), V(3)}}).has_contiguous_image());
}

TEST(Graph, RandomEditSequencesStaySimple) {
  std::mt19937_64 rng(42);
  Graph g;
  for (int step = 0; step < 3000; ++step) {
    const std::size_t n = g.vertex_count();
    std::uniform_int_distribution<std::uint32_t> pick(1, n ? static_cast<std::uint32_t>(n) : 1);
    const int action = std::uniform_int_distribution<int>(0, n < 2 ? 0 : 5)(rng);
    try {
      switch (action) {
        case 0: g = add_vertex(g).first; break;
        case 1: g = remove_vertex(g, V(pick(rng))).first; break;
        case 2: g = add_edge(g, V(pick(rng)), V(pick(rng))); break;
        case 3: g = remove_edge(g, V(pick(rng)), V(pick(rng))); break;
        case 4: g = local_complement(g, V(pick(rng))); break;
        default: g = complement(g); break;
      }
    } catch (const Error& e) {
      const std::string r = e.rule();
      EXPECT_TRUE(r == rule::kLoop || r == rule::kDuplicateEdge || r == rule::kNotFound) << r;
    }
    expect_simple(g);
  }
}

TEST(Graph, FailedMutationLeavesGraphUnchanged) {
  Graph g = path_graph(3);
  const Graph before = g;
  EXPECT_THROW(g.insert_edge(V(1), V(2)), Error);
  EXPECT_THROW(g.insert_edge(V(2), V(2)), Error);
  EXPECT_THROW(g.erase_edge(V(1), V(3)), Error);
  EXPECT_EQ(g, before);
}

TEST(Graph, ToString) { EXPECT_EQ(to_string(path_graph(3)), "Graph(n=3, edges={1-2, 2-3})"); }

}  // namespace
}  // namespace q2g
