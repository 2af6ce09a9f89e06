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

#ifndef Q2G_PERSISTENCE_DOCUMENT_HPP
#define Q2G_PERSISTENCE_DOCUMENT_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "q2g/graph.hpp"
#include "q2g/transforms.hpp"

namespace q2g {

enum class OpKind {
  kAddVertex,
  kRemoveVertex,
  kAddEdge,
  kRemoveEdge,
  kLocalComplement,
  kMeasureZ,
  kMeasureY,
  kMeasureX,
  kSetAttrs,
};

/// Wire name: add_vertex, remove_vertex, add_edge, remove_edge, lc, z, y, x,
/// set_attrs.
std::string_view op_name(OpKind kind);
std::optional<OpKind> op_from_name(std::string_view name);

/// One user-level edit of a document.
struct Operation {
  OpKind kind = OpKind::kAddVertex;
  /// Vertex operated on; first endpoint for edge operations.
  VertexId target;
  /// Second endpoint for edge operations; special neighbour for X.
  std::optional<VertexId> other;
  /// add_vertex and set_attrs only.
  VertexAttrs attrs;
  /// X only.
  XRule x_rule = XRule::kLcBAB;

  static Operation add_vertex(const VertexAttrs& attrs = {});
  static Operation remove_vertex(VertexId v);
  static Operation add_edge(VertexId a, VertexId b);
  static Operation remove_edge(VertexId a, VertexId b);
  static Operation local_complement(VertexId v);
  static Operation measure(PauliOp op, VertexId v, std::optional<VertexId> special = std::nullopt,
                           XRule rule = XRule::kLcBAB);
  static Operation set_attrs(VertexId v, const VertexAttrs& attrs);

  bool is_measurement() const;
  bool removes_vertex() const;
  bool operator==(const Operation&) const = default;
};

struct OpRecord {
  std::uint64_t seq = 0;
  /// As applied: an X record always carries its resolved special neighbour.
  Operation op;
  /// Present for every operation that deletes a vertex.
  std::optional<LabelMap> label_map;
  /// Stable identity of the measured qubit (measurements only). Vertices of
  /// the initial graph keep their initial label as identity; the k-th vertex
  /// added afterwards is identity n_initial + k.
  std::optional<std::uint32_t> consumed;

  bool operator==(const OpRecord&) const = default;
};

using Journal = std::vector<OpRecord>;

inline constexpr int kFormatVersion = 1;

struct GraphDocument {
  int format_version = kFormatVersion;
  /// Anchor for journal replay. Equal to `graph` while the journal is empty.
  Graph initial;
  Graph graph;
  Journal journal;
  std::map<std::string, std::string> metadata;

  static GraphDocument from_graph(const Graph& g);
  bool operator==(const GraphDocument&) const = default;
};

/// Effect of one operation on a bare graph.
struct OpOutcome {
  Graph graph;
  std::optional<LabelMap> label_map;
  /// Pre-operation label of the measured qubit.
  std::optional<VertexId> consumed;
  /// The operation with defaults resolved.
  Operation resolved;
  /// Label of a newly added vertex.
  std::optional<VertexId> added;
};

/// Throws q2g::Error naming the violated rule.
OpOutcome apply_to_graph(const Graph& g, const Operation& op);

struct AppliedOperation {
  OpRecord record;
  std::optional<VertexId> added;
};

/// Applies `op` to the document and appends a journal record. The document
/// is unchanged if the operation throws.
AppliedOperation apply_operation(GraphDocument& doc, const Operation& op);

/// Stable identities of the current vertices, indexed by label - 1.
std::vector<std::uint32_t> vertex_identities(const GraphDocument& doc);

/// Re-applies the journal to the initial graph. Throws journal-integrity,
/// naming the first divergent seq, unless the result equals doc.graph.
Graph replay(const GraphDocument& doc);

}  // namespace q2g

#endif  // Q2G_PERSISTENCE_DOCUMENT_HPP
