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

#ifndef Q2G_GRAPH_HPP
#define Q2G_GRAPH_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace q2g {

/// 1-based vertex label. Labels of a graph are always exactly {1, ..., n}.
struct VertexId {
  std::uint32_t value = 0;

  constexpr VertexId() = default;
  constexpr explicit VertexId(std::uint32_t v) : value(v) {}

  constexpr auto operator<=>(const VertexId&) const = default;

  /// Zero-based index into per-vertex storage.
  constexpr std::size_t index() const { return value - 1; }
};

struct Position {
  double x = 0.0;
  double y = 0.0;
  bool operator==(const Position&) const = default;
};

/// Per-vertex attributes. They never influence a rewrite.
struct VertexAttrs {
  bool is_input = false;
  Position position{};
  bool operator==(const VertexAttrs&) const = default;
};

/// Unordered vertex pair, stored with lo < hi.
struct Edge {
  VertexId lo;
  VertexId hi;

  Edge() = default;
  Edge(VertexId a, VertexId b) : lo(std::min(a, b)), hi(std::max(a, b)) {}

  auto operator<=>(const Edge&) const = default;
};

/// Order-preserving relabelling produced when a vertex is deleted. Holds one
/// (old, new) pair per surviving vertex, sorted by old label.
class LabelMap {
 public:
  LabelMap() = default;
  explicit LabelMap(std::vector<std::pair<VertexId, VertexId>> pairs);

  static LabelMap identity(std::size_t n);
  /// The map left behind by deleting `removed` from an n-vertex graph.
  static LabelMap compaction(std::size_t n, VertexId removed);

  std::optional<VertexId> apply(VertexId old_label) const;
  /// Old label that maps to `new_label`, if any.
  std::optional<VertexId> preimage(VertexId new_label) const;

  /// `first` then `second`: old labels of `first` to new labels of `second`.
  static LabelMap compose(const LabelMap& first, const LabelMap& second);

  bool is_order_preserving() const;
  bool has_contiguous_image() const;

  const std::vector<std::pair<VertexId, VertexId>>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }

  bool operator==(const LabelMap&) const = default;

 private:
  std::vector<std::pair<VertexId, VertexId>> pairs_;
};

/// Simple undirected graph: no loops, no multi-edges, labels 1..n.
///
/// Adjacency is kept twice: a sorted neighbour set per vertex for
/// neighbourhood queries and local complementation, plus a global sorted
/// edge set for canonical iteration. The mutating members keep both in step
/// and enforce the simple-graph rules; the free functions below wrap them in
/// value semantics.
class Graph {
 public:
  Graph() = default;
  /// Graph with n default-attributed isolated vertices.
  explicit Graph(std::size_t n);

  std::size_t vertex_count() const { return attrs_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return attrs_.empty(); }

  bool has_vertex(VertexId v) const { return v.value >= 1 && v.value <= attrs_.size(); }
  bool has_edge(VertexId a, VertexId b) const;

  const VertexAttrs& attrs(VertexId v) const;
  const std::set<VertexId>& neighbours(VertexId v) const;
  std::size_t degree(VertexId v) const { return neighbours(v).size(); }
  const std::set<Edge>& edges() const { return edges_; }

  std::vector<VertexId> vertices() const;

  // In-place mutation. Each throws q2g::Error on a rule violation and leaves
  // the graph untouched in that case.
  VertexId insert_vertex(const VertexAttrs& attrs = {});
  LabelMap erase_vertex(VertexId v);
  void insert_edge(VertexId a, VertexId b);
  void erase_edge(VertexId a, VertexId b);
  void toggle_edge(VertexId a, VertexId b);
  void complement_neighbourhood(VertexId v);
  void set_attrs(VertexId v, const VertexAttrs& attrs);

  bool operator==(const Graph& other) const;

 private:
  void require_vertex(VertexId v) const;

  std::vector<VertexAttrs> attrs_;
  std::vector<std::set<VertexId>> adjacency_;
  std::set<Edge> edges_;
};

/// Throws q2g::Error unless both coordinates are finite.
void validate_attrs(const VertexAttrs& attrs);

std::pair<Graph, VertexId> add_vertex(const Graph& g, const VertexAttrs& attrs = {});
std::pair<Graph, LabelMap> remove_vertex(const Graph& g, VertexId v);
Graph add_edge(const Graph& g, VertexId a, VertexId b);
Graph remove_edge(const Graph& g, VertexId a, VertexId b);
std::set<VertexId> neighbourhood(const Graph& g, VertexId v);
Graph complement(const Graph& g);
/// Toggles every edge between two neighbours of `v`.
Graph local_complement(const Graph& g, VertexId v);

// Small named graphs used throughout the tests and examples.
Graph path_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph star_graph(std::size_t leaves);
Graph graph_from_edges(std::size_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges);

std::string to_string(const Graph& g);

}  // namespace q2g

#endif  // Q2G_GRAPH_HPP
