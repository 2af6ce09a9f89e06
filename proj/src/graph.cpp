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

#include <algorithm>
#include <cmath>
#include <sstream>

#include "q2g/error.hpp"

namespace q2g {

namespace {

std::string edge_text(VertexId a, VertexId b) {
  return std::to_string(a.value) + "-" + std::to_string(b.value);
}

}  // namespace

// ---------------------------------------------------------------- LabelMap

LabelMap::LabelMap(std::vector<std::pair<VertexId, VertexId>> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
}

LabelMap LabelMap::identity(std::size_t n) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(n);
  for (std::uint32_t i = 1; i <= n; ++i) pairs.emplace_back(VertexId{i}, VertexId{i});
  return LabelMap(std::move(pairs));
}

LabelMap LabelMap::compaction(std::size_t n, VertexId removed) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(n == 0 ? 0 : n - 1);
  for (std::uint32_t i = 1; i <= n; ++i) {
    if (i == removed.value) continue;
    pairs.emplace_back(VertexId{i}, VertexId{i < removed.value ? i : i - 1});
  }
  return LabelMap(std::move(pairs));
}

std::optional<VertexId> LabelMap::apply(VertexId old_label) const {
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), old_label,
                             [](const auto& p, VertexId v) { return p.first < v; });
  if (it == pairs_.end() || it->first != old_label) return std::nullopt;
  return it->second;
}

std::optional<VertexId> LabelMap::preimage(VertexId new_label) const {
  for (const auto& [from, to] : pairs_) {
    if (to == new_label) return from;
  }
  return std::nullopt;
}

LabelMap LabelMap::compose(const LabelMap& first, const LabelMap& second) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (const auto& [from, mid] : first.pairs_) {
    if (auto to = second.apply(mid)) pairs.emplace_back(from, *to);
  }
  return LabelMap(std::move(pairs));
}

bool LabelMap::is_order_preserving() const {
  for (std::size_t i = 1; i < pairs_.size(); ++i) {
    if (!(pairs_[i - 1].first < pairs_[i].first) || !(pairs_[i - 1].second < pairs_[i].second)) {
      return false;
    }
  }
  return true;
}

bool LabelMap::has_contiguous_image() const {
  std::vector<VertexId> image;
  image.reserve(pairs_.size());
  for (const auto& p : pairs_) image.push_back(p.second);
  std::sort(image.begin(), image.end());
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (image[i].value != i + 1) return false;
  }
  return true;
}

// ------------------------------------------------------------------- Graph

Graph::Graph(std::size_t n) : attrs_(n), adjacency_(n) {}

bool Graph::has_edge(VertexId a, VertexId b) const {
  if (!has_vertex(a) || !has_vertex(b)) return false;
  return adjacency_[a.index()].contains(b);
}

const VertexAttrs& Graph::attrs(VertexId v) const {
  require_vertex(v);
  return attrs_[v.index()];
}

const std::set<VertexId>& Graph::neighbours(VertexId v) const {
  require_vertex(v);
  return adjacency_[v.index()];
}

std::vector<VertexId> Graph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(attrs_.size());
  for (std::uint32_t i = 1; i <= attrs_.size(); ++i) out.emplace_back(i);
  return out;
}

void Graph::require_vertex(VertexId v) const {
  if (!has_vertex(v)) {
    throw Error(rule::kNotFound, "vertex " + std::to_string(v.value) + " not found");
  }
}

VertexId Graph::insert_vertex(const VertexAttrs& attrs) {
  validate_attrs(attrs);
  attrs_.push_back(attrs);
  adjacency_.emplace_back();
  return VertexId{static_cast<std::uint32_t>(attrs_.size())};
}

LabelMap Graph::erase_vertex(VertexId v) {
  require_vertex(v);
  const std::size_t n = attrs_.size();
  LabelMap map = LabelMap::compaction(n, v);
  auto shift = [v](VertexId u) { return u < v ? u : VertexId{u.value - 1}; };

  std::vector<std::set<VertexId>> adjacency;
  adjacency.reserve(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == v.index()) continue;
    std::set<VertexId> row;
    for (VertexId u : adjacency_[i]) {
      if (u != v) row.insert(row.end(), shift(u));
    }
    adjacency.push_back(std::move(row));
  }
  std::set<Edge> edges;
  for (const Edge& e : edges_) {
    if (e.lo != v && e.hi != v) edges.insert(edges.end(), Edge(shift(e.lo), shift(e.hi)));
  }
  attrs_.erase(attrs_.begin() + static_cast<std::ptrdiff_t>(v.index()));
  adjacency_ = std::move(adjacency);
  edges_ = std::move(edges);
  return map;
}

void Graph::insert_edge(VertexId a, VertexId b) {
  require_vertex(a);
  require_vertex(b);
  if (a == b) throw Error(rule::kLoop, "loop edge " + edge_text(a, b) + " is prohibited");
  if (has_edge(a, b)) {
    throw Error(rule::kDuplicateEdge, "edge " + edge_text(Edge(a, b).lo, Edge(a, b).hi) + " already exists");
  }
  adjacency_[a.index()].insert(b);
  adjacency_[b.index()].insert(a);
  edges_.insert(Edge(a, b));
}

void Graph::erase_edge(VertexId a, VertexId b) {
  if (!has_edge(a, b)) {
    require_vertex(a);
    require_vertex(b);
    throw Error(rule::kNotFound, "edge " + edge_text(a, b) + " not found");
  }
  adjacency_[a.index()].erase(b);
  adjacency_[b.index()].erase(a);
  edges_.erase(Edge(a, b));
}

void Graph::toggle_edge(VertexId a, VertexId b) {
  if (has_edge(a, b)) {
    erase_edge(a, b);
  } else {
    insert_edge(a, b);
  }
}

void Graph::complement_neighbourhood(VertexId v) {
  const std::vector<VertexId> nbrs(neighbours(v).begin(), neighbours(v).end());
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) toggle_edge(nbrs[i], nbrs[j]);
  }
}

void Graph::set_attrs(VertexId v, const VertexAttrs& attrs) {
  require_vertex(v);
  validate_attrs(attrs);
  attrs_[v.index()] = attrs;
}

bool Graph::operator==(const Graph& other) const {
  return attrs_ == other.attrs_ && edges_ == other.edges_;
}

// ---------------------------------------------------------- free functions

void validate_attrs(const VertexAttrs& attrs) {
  if (!std::isfinite(attrs.position.x) || !std::isfinite(attrs.position.y)) {
    throw Error(rule::kNonFinitePosition, "vertex position must be finite");
  }
}

std::pair<Graph, VertexId> add_vertex(const Graph& g, const VertexAttrs& attrs) {
  Graph out = g;
  VertexId v = out.insert_vertex(attrs);
  return {std::move(out), v};
}

std::pair<Graph, LabelMap> remove_vertex(const Graph& g, VertexId v) {
  Graph out = g;
  LabelMap map = out.erase_vertex(v);
  return {std::move(out), std::move(map)};
}

Graph add_edge(const Graph& g, VertexId a, VertexId b) {
  Graph out = g;
  out.insert_edge(a, b);
  return out;
}

Graph remove_edge(const Graph& g, VertexId a, VertexId b) {
  Graph out = g;
  out.erase_edge(a, b);
  return out;
}

std::set<VertexId> neighbourhood(const Graph& g, VertexId v) { return g.neighbours(v); }

Graph complement(const Graph& g) {
  Graph out = g;
  const std::size_t n = g.vertex_count();
  for (std::uint32_t a = 1; a <= n; ++a) {
    for (std::uint32_t b = a + 1; b <= n; ++b) out.toggle_edge(VertexId{a}, VertexId{b});
  }
  return out;
}

Graph local_complement(const Graph& g, VertexId v) {
  Graph out = g;
  out.complement_neighbourhood(v);
  return out;
}

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (std::uint32_t i = 1; i < n; ++i) g.insert_edge(VertexId{i}, VertexId{i + 1});
  return g;
}

Graph complete_graph(std::size_t n) { return complement(Graph(n)); }

Graph star_graph(std::size_t leaves) {
  Graph g(leaves + 1);
  for (std::uint32_t i = 2; i <= leaves + 1; ++i) g.insert_edge(VertexId{1}, VertexId{i});
  return g;
}

Graph graph_from_edges(std::size_t n,
                       const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
  Graph g(n);
  for (auto [a, b] : edges) g.insert_edge(VertexId{a}, VertexId{b});
  return g;
}

std::string to_string(const Graph& g) {
  std::ostringstream os;
  os << "Graph(n=" << g.vertex_count() << ", edges={";
  bool first = true;
  for (const Edge& e : g.edges()) {
    os << (first ? "" : ", ") << e.lo.value << "-" << e.hi.value;
    first = false;
  }
  os << "})";
  return os.str();
}

}  // namespace q2g
