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

#include "q2g/persistence/json_codec.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <set>

#include "q2g/error.hpp"

namespace q2g {

namespace {

[[noreturn]] void invalid(const std::string& message) { throw Error(rule::kValidation, message); }

void require_keys(const Json& obj, std::initializer_list<std::string_view> required,
                  std::initializer_list<std::string_view> optional, const std::string& where) {
  if (!obj.is_object()) invalid(where + " must be an object");
  for (auto key : required) {
    if (!obj.contains(std::string(key))) invalid(where + " is missing \"" + std::string(key) + "\"");
  }
  for (const auto& [key, value] : obj.items()) {
    const bool known = std::find(required.begin(), required.end(), key) != required.end() ||
                       std::find(optional.begin(), optional.end(), key) != optional.end();
    if (!known) invalid(where + " has unknown key \"" + key + "\"");
  }
}

std::uint32_t label_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 1 ||
      j.get<std::int64_t>() > std::numeric_limits<std::uint32_t>::max()) {
    invalid(where + " must be a positive integer vertex label");
  }
  return static_cast<std::uint32_t>(j.get<std::int64_t>());
}

VertexId vertex_from_json(const Json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) invalid(where + " is missing \"" + key + "\"");
  return VertexId{label_from_json(obj.at(key), where + "." + key)};
}

Position position_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    invalid(where + " must be a [x, y] pair of numbers");
  }
  Position p{j[0].get<double>(), j[1].get<double>()};
  if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
    throw Error(rule::kNonFinitePosition, where + " must be finite");
  }
  return p;
}

Json position_to_json(const Position& p) { return Json::array({p.x, p.y}); }

VertexAttrs attrs_from_json(const Json& obj, const std::string& where) {
  VertexAttrs attrs;
  if (obj.contains("input")) {
    if (!obj.at("input").is_boolean()) invalid(where + ".input must be a boolean");
    attrs.is_input = obj.at("input").get<bool>();
  }
  if (obj.contains("pos")) attrs.position = position_from_json(obj.at("pos"), where + ".pos");
  return attrs;
}

std::string_view x_rule_name(XRule rule) { return rule == XRule::kLcAB ? "ab" : "bab"; }

}  // namespace

// ------------------------------------------------------------------ graphs

Json graph_to_json(const Graph& g) {
  Json vertices = Json::array();
  for (VertexId v : g.vertices()) {
    const VertexAttrs& a = g.attrs(v);
    vertices.push_back({{"id", v.value}, {"input", a.is_input}, {"pos", position_to_json(a.position)}});
  }
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back(Json::array({e.lo.value, e.hi.value}));
  return {{"edges", std::move(edges)}, {"vertices", std::move(vertices)}};
}

Graph graph_from_json(const Json& j) {
  require_keys(j, {"edges", "vertices"}, {}, "graph");
  const Json& vertices = j.at("vertices");
  const Json& edges = j.at("edges");
  if (!vertices.is_array()) invalid("graph.vertices must be an array");
  if (!edges.is_array()) invalid("graph.edges must be an array");

  std::vector<std::pair<std::uint32_t, VertexAttrs>> entries;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string where = "graph.vertices[" + std::to_string(i) + "]";
    require_keys(vertices[i], {"id"}, {"input", "pos"}, where);
    entries.emplace_back(label_from_json(vertices[i].at("id"), where + ".id"),
                         attrs_from_json(vertices[i], where));
  }
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].first != i + 1) {
      std::string labels;
      for (const auto& e : entries) labels += (labels.empty() ? "" : ",") + std::to_string(e.first);
      throw Error(rule::kNonContiguousLabels,
                  "non-contiguous labels: vertices must be exactly 1.." +
                      std::to_string(entries.size()) + ", got [" + labels + "]");
    }
  }

  Graph g;
  for (const auto& [id, attrs] : entries) g.insert_vertex(attrs);
  std::set<Edge> seen;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "graph.edges[" + std::to_string(i) + "]";
    const Json& e = edges[i];
    if (!e.is_array() || e.size() != 2) invalid(where + " must be a pair of vertex labels");
    const VertexId a{label_from_json(e[0], where)};
    const VertexId b{label_from_json(e[1], where)};
    const std::string text = std::to_string(a.value) + "-" + std::to_string(b.value);
    if (a == b) throw Error(rule::kLoop, "loop edge " + text + " is prohibited");
    if (!g.has_vertex(a) || !g.has_vertex(b)) {
      throw Error(rule::kDanglingEdge, "edge " + text + " refers to a missing vertex");
    }
    if (!seen.insert(Edge(a, b)).second) {
      throw Error(rule::kDuplicateEdge, "multi-edge " + text + " is prohibited");
    }
    g.insert_edge(a, b);
  }
  return g;
}

// -------------------------------------------------------------- operations

Json label_map_to_json(const LabelMap& map) {
  Json out = Json::array();
  for (const auto& [from, to] : map.pairs()) out.push_back(Json::array({from.value, to.value}));
  return out;
}

namespace {

LabelMap label_map_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) invalid(where + " must be an array of [old, new] pairs");
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (const Json& p : j) {
    if (!p.is_array() || p.size() != 2) invalid(where + " must be an array of [old, new] pairs");
    pairs.emplace_back(VertexId{label_from_json(p[0], where)}, VertexId{label_from_json(p[1], where)});
  }
  return LabelMap(std::move(pairs));
}

}  // namespace

Json operation_args_to_json(const Operation& op) {
  switch (op.kind) {
    case OpKind::kAddVertex:
      return {{"input", op.attrs.is_input}, {"pos", position_to_json(op.attrs.position)}};
    case OpKind::kRemoveVertex:
    case OpKind::kLocalComplement:
    case OpKind::kMeasureZ:
    case OpKind::kMeasureY:
      return {{"target", op.target.value}};
    case OpKind::kAddEdge:
    case OpKind::kRemoveEdge:
      return {{"a", op.target.value}, {"b", op.other.value_or(VertexId{}).value}};
    case OpKind::kMeasureX: {
      Json args{{"target", op.target.value}};
      if (op.other) args["b"] = op.other->value;
      if (op.x_rule != XRule::kLcBAB) args["rule"] = x_rule_name(op.x_rule);
      return args;
    }
    case OpKind::kSetAttrs:
      return {{"input", op.attrs.is_input},
              {"pos", position_to_json(op.attrs.position)},
              {"target", op.target.value}};
  }
  return Json::object();
}

Operation operation_from_json(OpKind kind, const Json& args) {
  const std::string where = "args";
  switch (kind) {
    case OpKind::kAddVertex:
      require_keys(args, {}, {"input", "pos"}, where);
      return Operation::add_vertex(attrs_from_json(args, where));
    case OpKind::kRemoveVertex:
      require_keys(args, {"target"}, {}, where);
      return Operation::remove_vertex(vertex_from_json(args, "target", where));
    case OpKind::kLocalComplement:
      require_keys(args, {"target"}, {}, where);
      return Operation::local_complement(vertex_from_json(args, "target", where));
    case OpKind::kMeasureZ:
    case OpKind::kMeasureY:
      require_keys(args, {"target"}, {}, where);
      return Operation::measure(kind == OpKind::kMeasureZ ? PauliOp::Z : PauliOp::Y,
                                vertex_from_json(args, "target", where));
    case OpKind::kAddEdge:
    case OpKind::kRemoveEdge: {
      require_keys(args, {"a", "b"}, {}, where);
      const VertexId a = vertex_from_json(args, "a", where);
      const VertexId b = vertex_from_json(args, "b", where);
      return kind == OpKind::kAddEdge ? Operation::add_edge(a, b) : Operation::remove_edge(a, b);
    }
    case OpKind::kMeasureX: {
      require_keys(args, {"target"}, {"b", "rule"}, where);
      std::optional<VertexId> b;
      if (args.contains("b") && !args.at("b").is_null()) b = vertex_from_json(args, "b", where);
      XRule rule = XRule::kLcBAB;
      if (args.contains("rule")) {
        const Json& r = args.at("rule");
        if (r == "ab") {
          rule = XRule::kLcAB;
        } else if (r != "bab") {
          invalid("args.rule must be \"bab\" or \"ab\"");
        }
      }
      return Operation::measure(PauliOp::X, vertex_from_json(args, "target", where), b, rule);
    }
    case OpKind::kSetAttrs: {
      require_keys(args, {"target", "input", "pos"}, {}, where);
      return Operation::set_attrs(vertex_from_json(args, "target", where), attrs_from_json(args, where));
    }
  }
  invalid("unknown operation");
}

Json record_to_json(const OpRecord& record) {
  Json out{{"seq", record.seq},
           {"op", op_name(record.op.kind)},
           {"args", operation_args_to_json(record.op)}};
  if (record.label_map) out["label_map"] = label_map_to_json(*record.label_map);
  if (record.consumed) out["consumed"] = *record.consumed;
  return out;
}

Json journal_to_json(const Journal& journal) {
  Json out = Json::array();
  for (const OpRecord& r : journal) out.push_back(record_to_json(r));
  return out;
}

namespace {

Journal journal_from_json(const Json& j) {
  if (!j.is_array()) invalid("journal must be an array");
  Journal journal;
  std::uint64_t previous = 0;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string where = "journal[" + std::to_string(i) + "]";
    const Json& r = j[i];
    require_keys(r, {"seq", "op", "args"}, {"label_map", "consumed"}, where);
    if (!r.at("seq").is_number_unsigned()) invalid(where + ".seq must be a positive integer");
    OpRecord record;
    record.seq = r.at("seq").get<std::uint64_t>();
    if (record.seq <= previous) {
      throw Error(rule::kJournalIntegrity, where + ".seq must increase strictly from 1");
    }
    previous = record.seq;
    if (!r.at("op").is_string()) invalid(where + ".op must be a string");
    const auto kind = op_from_name(r.at("op").get<std::string>());
    if (!kind) invalid(where + ".op \"" + r.at("op").get<std::string>() + "\" is unknown");
    record.op = operation_from_json(*kind, r.at("args"));
    if (r.contains("label_map")) record.label_map = label_map_from_json(r.at("label_map"), where + ".label_map");
    if (r.contains("consumed")) record.consumed = label_from_json(r.at("consumed"), where + ".consumed");
    journal.push_back(std::move(record));
  }
  return journal;
}

}  // namespace

// --------------------------------------------------------------- documents

Json document_to_json(const GraphDocument& doc) {
  Json metadata = Json::object();
  for (const auto& [key, value] : doc.metadata) metadata[key] = value;
  Json out{{"format_version", doc.format_version},
           {"graph", graph_to_json(doc.graph)},
           {"journal", journal_to_json(doc.journal)},
           {"metadata", std::move(metadata)}};
  if (!doc.journal.empty()) out["initial"] = graph_to_json(doc.initial);
  return out;
}

GraphDocument document_from_json(const Json& j) {
  require_keys(j, {"format_version", "graph", "journal", "metadata"}, {"initial"}, "document");
  if (!j.at("format_version").is_number_integer() || j.at("format_version").get<int>() != kFormatVersion) {
    invalid("unsupported format_version (expected " + std::to_string(kFormatVersion) + ")");
  }
  GraphDocument doc;
  doc.graph = graph_from_json(j.at("graph"));
  doc.journal = journal_from_json(j.at("journal"));
  if (j.contains("initial")) {
    doc.initial = graph_from_json(j.at("initial"));
    if (doc.journal.empty() && !(doc.initial == doc.graph)) {
      invalid("initial must equal graph when the journal is empty");
    }
  } else {
    if (!doc.journal.empty()) invalid("a document with a journal needs an initial graph");
    doc.initial = doc.graph;
  }
  const Json& metadata = j.at("metadata");
  if (!metadata.is_object()) invalid("metadata must be an object");
  for (const auto& [key, value] : metadata.items()) {
    if (!value.is_string()) invalid("metadata values must be strings");
    doc.metadata.emplace(key, value.get<std::string>());
  }
  return doc;
}

std::string serialize(const GraphDocument& doc) { return document_to_json(doc).dump(); }

GraphDocument deserialize(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw Error(rule::kParse, "malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  } catch (const Json::exception& e) {
    // Numbers outside the double range.
    throw Error(rule::kParse, std::string("malformed JSON: ") + e.what());
  }
  return document_from_json(j);
}

GraphDocument load_document(std::string_view text) {
  GraphDocument doc = deserialize(text);
  replay(doc);
  return doc;
}

}  // namespace q2g
