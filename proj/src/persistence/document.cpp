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

#include "q2g/persistence/document.hpp"

#include <array>
#include <utility>

#include "q2g/error.hpp"

namespace q2g {

namespace {

constexpr std::array<std::pair<OpKind, std::string_view>, 9> kOpNames{{
    {OpKind::kAddVertex, "add_vertex"},
    {OpKind::kRemoveVertex, "remove_vertex"},
    {OpKind::kAddEdge, "add_edge"},
    {OpKind::kRemoveEdge, "remove_edge"},
    {OpKind::kLocalComplement, "lc"},
    {OpKind::kMeasureZ, "z"},
    {OpKind::kMeasureY, "y"},
    {OpKind::kMeasureX, "x"},
    {OpKind::kSetAttrs, "set_attrs"},
}};

PauliOp pauli_of(OpKind kind) {
  switch (kind) {
    case OpKind::kMeasureX: return PauliOp::X;
    case OpKind::kMeasureY: return PauliOp::Y;
    case OpKind::kMeasureZ: return PauliOp::Z;
    default: return PauliOp::I;
  }
}

}  // namespace

std::string_view op_name(OpKind kind) {
  for (const auto& [k, name] : kOpNames) {
    if (k == kind) return name;
  }
  return "?";
}

std::optional<OpKind> op_from_name(std::string_view name) {
  for (const auto& [k, n] : kOpNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

Operation Operation::add_vertex(const VertexAttrs& attrs) {
  Operation op;
  op.kind = OpKind::kAddVertex;
  op.attrs = attrs;
  return op;
}

Operation Operation::remove_vertex(VertexId v) {
  Operation op;
  op.kind = OpKind::kRemoveVertex;
  op.target = v;
  return op;
}

Operation Operation::add_edge(VertexId a, VertexId b) {
  Operation op;
  op.kind = OpKind::kAddEdge;
  op.target = a;
  op.other = b;
  return op;
}

Operation Operation::remove_edge(VertexId a, VertexId b) {
  Operation op = add_edge(a, b);
  op.kind = OpKind::kRemoveEdge;
  return op;
}

Operation Operation::local_complement(VertexId v) {
  Operation op;
  op.kind = OpKind::kLocalComplement;
  op.target = v;
  return op;
}

Operation Operation::measure(PauliOp pauli, VertexId v, std::optional<VertexId> special,
                             XRule rule) {
  Operation op;
  switch (pauli) {
    case PauliOp::X: op.kind = OpKind::kMeasureX; break;
    case PauliOp::Y: op.kind = OpKind::kMeasureY; break;
    case PauliOp::Z: op.kind = OpKind::kMeasureZ; break;
    case PauliOp::I: throw Error(rule::kValidation, "the identity is not a journalled operation");
  }
  op.target = v;
  op.other = special;
  op.x_rule = rule;
  return op;
}

Operation Operation::set_attrs(VertexId v, const VertexAttrs& attrs) {
  Operation op;
  op.kind = OpKind::kSetAttrs;
  op.target = v;
  op.attrs = attrs;
  return op;
}

bool Operation::is_measurement() const {
  return kind == OpKind::kMeasureX || kind == OpKind::kMeasureY || kind == OpKind::kMeasureZ;
}

bool Operation::removes_vertex() const {
  return is_measurement() || kind == OpKind::kRemoveVertex;
}

GraphDocument GraphDocument::from_graph(const Graph& g) {
  GraphDocument doc;
  doc.initial = g;
  doc.graph = g;
  return doc;
}

OpOutcome apply_to_graph(const Graph& g, const Operation& op) {
  OpOutcome out;
  out.resolved = op;
  switch (op.kind) {
    case OpKind::kAddVertex: {
      auto [graph, v] = add_vertex(g, op.attrs);
      out.graph = std::move(graph);
      out.added = v;
      break;
    }
    case OpKind::kRemoveVertex: {
      auto [graph, map] = remove_vertex(g, op.target);
      out.graph = std::move(graph);
      out.label_map = std::move(map);
      break;
    }
    case OpKind::kAddEdge:
    case OpKind::kRemoveEdge: {
      if (!op.other) throw Error(rule::kValidation, "edge operation needs two endpoints");
      out.graph = op.kind == OpKind::kAddEdge ? add_edge(g, op.target, *op.other)
                                              : remove_edge(g, op.target, *op.other);
      break;
    }
    case OpKind::kLocalComplement:
      out.graph = local_complement(g, op.target);
      break;
    case OpKind::kMeasureZ:
    case OpKind::kMeasureY:
    case OpKind::kMeasureX: {
      const MeasurementStep step{pauli_of(op.kind), op.target, op.other};
      StepResult result = apply_step(g, step, op.x_rule);
      out.graph = std::move(result.graph);
      out.label_map = std::move(result.label_map);
      out.consumed = result.consumed;
      out.resolved.other = result.special_neighbour;
      break;
    }
    case OpKind::kSetAttrs: {
      out.graph = g;
      out.graph.set_attrs(op.target, op.attrs);
      break;
    }
  }
  if (op.kind != OpKind::kMeasureX) out.resolved.x_rule = XRule::kLcBAB;
  return out;
}

namespace {

/// Advances the identity vector across one record.
void advance_identities(std::vector<std::uint32_t>& ids, std::uint32_t& next_id,
                        const OpRecord& record) {
  if (record.op.kind == OpKind::kAddVertex) {
    ids.push_back(next_id++);
    return;
  }
  if (!record.label_map) return;
  std::vector<std::uint32_t> moved(record.label_map->size());
  for (const auto& [from, to] : record.label_map->pairs()) moved.at(to.index()) = ids.at(from.index());
  ids = std::move(moved);
}

}  // namespace

std::vector<std::uint32_t> vertex_identities(const GraphDocument& doc) {
  std::vector<std::uint32_t> ids;
  const auto n = static_cast<std::uint32_t>(doc.initial.vertex_count());
  for (std::uint32_t i = 1; i <= n; ++i) ids.push_back(i);
  std::uint32_t next_id = n + 1;
  for (const OpRecord& record : doc.journal) advance_identities(ids, next_id, record);
  return ids;
}

AppliedOperation apply_operation(GraphDocument& doc, const Operation& op) {
  OpOutcome outcome = apply_to_graph(doc.graph, op);
  AppliedOperation applied;
  applied.record.seq = doc.journal.empty() ? 1 : doc.journal.back().seq + 1;
  applied.record.op = outcome.resolved;
  applied.record.label_map = outcome.label_map;
  if (outcome.consumed) {
    applied.record.consumed = vertex_identities(doc).at(outcome.consumed->index());
  }
  applied.added = outcome.added;
  if (doc.journal.empty()) doc.initial = doc.graph;
  doc.graph = std::move(outcome.graph);
  doc.journal.push_back(applied.record);
  return applied;
}

Graph replay(const GraphDocument& doc) {
  Graph g = doc.initial;
  std::vector<std::uint32_t> ids;
  for (std::uint32_t i = 1; i <= doc.initial.vertex_count(); ++i) ids.push_back(i);
  std::uint32_t next_id = static_cast<std::uint32_t>(ids.size()) + 1;

  auto diverge = [](std::uint64_t seq, const std::string& why) {
    return Error(rule::kJournalIntegrity,
                 "journal diverges at seq " + std::to_string(seq) + ": " + why);
  };

  for (std::size_t i = 0; i < doc.journal.size(); ++i) {
    const OpRecord& record = doc.journal[i];
    if (record.seq != i + 1) {
      throw diverge(record.seq, "expected seq " + std::to_string(i + 1));
    }
    OpOutcome outcome;
    try {
      outcome = apply_to_graph(g, record.op);
    } catch (const Error& e) {
      throw diverge(record.seq, e.what());
    }
    if (!(outcome.resolved == record.op)) throw diverge(record.seq, "recorded arguments differ");
    if (outcome.label_map != record.label_map) throw diverge(record.seq, "label map differs");
    std::optional<std::uint32_t> consumed;
    if (outcome.consumed) consumed = ids.at(outcome.consumed->index());
    if (consumed != record.consumed) throw diverge(record.seq, "consumed qubit differs");
    advance_identities(ids, next_id, record);
    g = std::move(outcome.graph);
  }
  if (!(g == doc.graph)) {
    const std::string where = doc.journal.empty()
                                  ? std::string("with an empty journal")
                                  : "after seq " + std::to_string(doc.journal.back().seq);
    throw Error(rule::kJournalIntegrity,
                "journal diverges " + where + ": replayed graph differs from the stored graph");
  }
  return g;
}

}  // namespace q2g
