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

#ifndef Q2G_PERSISTENCE_JSON_CODEC_HPP
#define Q2G_PERSISTENCE_JSON_CODEC_HPP

// Canonical JSON form of documents (.q2g.json):
//
//   {"format_version":1,
//    "graph":{"edges":[[1,2],...],"vertices":[{"id":1,"input":false,"pos":[x,y]},...]},
//    "initial":{...same shape as graph...},      only when the journal is non-empty
//    "journal":[{"args":{...},"consumed":k,"label_map":[[old,new],...],"op":"z","seq":1},...],
//    "metadata":{"title":"..."}}
//
// Keys are sorted, vertices ascend by id, edges are [lo,hi] pairs in
// ascending order, and there is no insignificant whitespace.

#include <string>
#include <string_view>

#include "json.hpp"
#include "q2g/persistence/document.hpp"

namespace q2g {

using Json = nlohmann::json;

std::string serialize(const GraphDocument& doc);

/// Parses and fully validates a document: every graph invariant is
/// re-checked. Malformed text throws a parse error with its byte offset;
/// invariant violations throw the violated rule (loop, duplicate-edge,
/// non-contiguous-labels, ...).
GraphDocument deserialize(std::string_view text);

/// deserialize followed by replay(): the journal must reproduce the graph.
GraphDocument load_document(std::string_view text);

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);
Json label_map_to_json(const LabelMap& map);
Json operation_args_to_json(const Operation& op);
Operation operation_from_json(OpKind kind, const Json& args);
Json record_to_json(const OpRecord& record);
Json journal_to_json(const Journal& journal);
Json document_to_json(const GraphDocument& doc);
GraphDocument document_from_json(const Json& j);

}  // namespace q2g

#endif  // Q2G_PERSISTENCE_JSON_CODEC_HPP
