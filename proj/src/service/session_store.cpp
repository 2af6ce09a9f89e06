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

#include "q2g/service/session_store.hpp"

#include <charconv>
#include <cstdio>

#include "q2g/error.hpp"
#include "q2g/persistence/json_codec.hpp"

namespace q2g::service {

Reply error_reply(int status, std::string_view rule, const std::string& message,
                  const std::string& detail_json) {
  Json body{{"rule", rule}, {"message", message}, {"detail", Json::parse(detail_json)}};
  return {status, body.dump()};
}

int status_for_rule(std::string_view rule) { return rule == rule::kParse ? 400 : 422; }

namespace {

Reply ok(const Json& body, int status = 200) { return {status, body.dump()}; }

Reply from_error(const Error& e) { return error_reply(status_for_rule(e.rule()), e.rule(), e.what()); }

Reply unknown_session(const std::string& id) {
  return error_reply(404, kUnknownSession, "no session with id '" + id + "'");
}

Json parse_body(std::string_view body) {
  try {
    return Json::parse(body.begin(), body.end());
  } catch (const Json::parse_error& e) {
    throw Error(rule::kParse, "malformed JSON at byte " + std::to_string(e.byte));
  } catch (const Json::exception& e) {
    throw Error(rule::kParse, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

SessionStore::SessionStore() : rng_(std::random_device{}()) {}

std::string SessionStore::new_id() {
  std::lock_guard lock(rng_mutex_);
  char buf[33];
  std::snprintf(buf, sizeof buf, "%016llx%016llx", static_cast<unsigned long long>(rng_()),
                static_cast<unsigned long long>(rng_()));
  return buf;
}

std::shared_ptr<SessionStore::Session> SessionStore::find(const std::string& id) const {
  std::shared_lock lock(sessions_mutex_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

std::size_t SessionStore::session_count() const {
  std::shared_lock lock(sessions_mutex_);
  return sessions_.size();
}

Reply SessionStore::create_session(std::string_view body) {
  auto session = std::make_shared<Session>();
  if (body.find_first_not_of(" \t\r\n") != std::string_view::npos) {
    try {
      session->doc = load_document(body);
    } catch (const Error& e) {
      return from_error(e);
    }
  }
  std::string id = new_id();
  {
    std::unique_lock lock(sessions_mutex_);
    sessions_.emplace(id, session);
  }
  return ok({{"id", id}, {"revision", 0}}, 201);
}

Reply SessionStore::get_graph(const std::string& id) const {
  auto session = find(id);
  if (!session) return unknown_session(id);
  std::shared_lock lock(session->mutex);
  return ok({{"document", document_to_json(session->doc)}, {"revision", session->revision}});
}

Reply SessionStore::apply(const std::string& id, std::string_view body) {
  auto session = find(id);
  if (!session) return unknown_session(id);
  try {
    const Json request = parse_body(body);
    if (!request.is_object() || !request.contains("kind") || !request.at("kind").is_string()) {
      throw Error(rule::kValidation, "operation needs a string \"kind\"");
    }
    if (!request.contains("expected_revision") || !request.at("expected_revision").is_number_unsigned()) {
      throw Error(rule::kValidation, "operation needs a non-negative integer \"expected_revision\"");
    }
    const auto kind = op_from_name(request.at("kind").get<std::string>());
    if (!kind) throw Error(rule::kValidation, "unknown operation kind '" + request.at("kind").get<std::string>() + "'");
    Json args = request.value("args", Json::object());
    const auto expected = request.at("expected_revision").get<std::uint64_t>();

    std::unique_lock lock(session->mutex);
    if (expected != session->revision) {
      return error_reply(409, kRevisionConflict,
                         "expected revision " + std::to_string(expected) + " but the session is at " +
                             std::to_string(session->revision),
                         Json{{"current_revision", session->revision}}.dump());
    }
    if (*kind == OpKind::kSetAttrs && args.is_object() && args.contains("target") &&
        args.at("target").is_number_unsigned()) {
      // Drag-and-drop sends only the position; keep whatever is not sent.
      const VertexId v{args.at("target").get<std::uint32_t>()};
      if (session->doc.graph.has_vertex(v)) {
        const VertexAttrs& current = session->doc.graph.attrs(v);
        if (!args.contains("input")) args["input"] = current.is_input;
        if (!args.contains("pos")) args["pos"] = Json::array({current.position.x, current.position.y});
      }
    }
    const Operation op = operation_from_json(*kind, args);
    const AppliedOperation applied = apply_operation(session->doc, op);
    session->revision += 1;
    const LabelMap map = applied.record.label_map.value_or(LabelMap::identity(session->doc.graph.vertex_count()));
    Json reply{{"graph", graph_to_json(session->doc.graph)},
               {"label_map", label_map_to_json(map)},
               {"record", record_to_json(applied.record)},
               {"revision", session->revision}};
    if (applied.added) reply["added"] = applied.added->value;
    return ok(reply);
  } catch (const Error& e) {
    return from_error(e);
  }
}

Reply SessionStore::get_journal(const std::string& id) const {
  auto session = find(id);
  if (!session) return unknown_session(id);
  std::shared_lock lock(session->mutex);
  return ok({{"journal", journal_to_json(session->doc.journal)}, {"revision", session->revision}});
}

Reply SessionStore::save(const std::string& id) const {
  auto session = find(id);
  if (!session) return unknown_session(id);
  std::shared_lock lock(session->mutex);
  return {200, serialize(session->doc)};
}

Reply SessionStore::load(const std::string& id, std::string_view body) {
  auto session = find(id);
  if (!session) return unknown_session(id);
  GraphDocument doc;
  try {
    doc = load_document(body);
  } catch (const Error& e) {
    return from_error(e);
  }
  std::unique_lock lock(session->mutex);
  session->doc = std::move(doc);
  session->revision = 0;
  return ok({{"revision", 0}});
}

Reply SessionStore::neighbourhood(const std::string& id, std::string_view vertex) const {
  auto session = find(id);
  if (!session) return unknown_session(id);
  std::uint32_t label = 0;
  auto [ptr, ec] = std::from_chars(vertex.data(), vertex.data() + vertex.size(), label);
  if (ec != std::errc{} || ptr != vertex.data() + vertex.size()) {
    return error_reply(400, rule::kParse, "invalid vertex '" + std::string(vertex) + "'");
  }
  std::shared_lock lock(session->mutex);
  try {
    Json nbrs = Json::array();
    for (VertexId v : session->doc.graph.neighbours(VertexId{label})) nbrs.push_back(v.value);
    return ok({{"vertex", label}, {"neighbours", std::move(nbrs)}, {"revision", session->revision}});
  } catch (const Error& e) {
    return from_error(e);
  }
}

Reply SessionStore::integrity(const std::string& id) const {
  auto session = find(id);
  if (!session) return unknown_session(id);
  std::shared_lock lock(session->mutex);
  try {
    replay(session->doc);
    return ok({{"ok", true}, {"revision", session->revision}});
  } catch (const Error& e) {
    return from_error(e);
  }
}

}  // namespace q2g::service
