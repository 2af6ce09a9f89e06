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

#ifndef Q2G_SERVICE_SESSION_STORE_HPP
#define Q2G_SERVICE_SESSION_STORE_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <shared_mutex>
#include <string>
#include <string_view>

#include "q2g/persistence/document.hpp"

namespace q2g::service {

/// Transport-neutral reply: HTTP status plus a body.
struct Reply {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

inline constexpr std::string_view kRevisionConflict = "revision-conflict";
inline constexpr std::string_view kUnknownSession = "unknown-session";

/// In-memory sessions, one document each.
///
/// Mutations of one session are serialized by that session's lock and are
/// guarded by an expected revision: a request naming a stale revision is
/// refused with 409 and changes nothing. Reads take the lock shared.
/// Sessions are independent of each other.
class SessionStore {
 public:
  SessionStore();

  /// POST /sessions. Empty body: empty graph. Otherwise a document.
  Reply create_session(std::string_view body);
  /// GET /sessions/{id}/graph
  Reply get_graph(const std::string& id) const;
  /// POST /sessions/{id}/ops with {"kind", "args", "expected_revision"}.
  Reply apply(const std::string& id, std::string_view body);
  /// GET /sessions/{id}/journal
  Reply get_journal(const std::string& id) const;
  /// GET /sessions/{id}/save: the canonical document text.
  Reply save(const std::string& id) const;
  /// PUT /sessions/{id}/load: replace the document; revision resets to 0.
  Reply load(const std::string& id, std::string_view body);
  /// GET /sessions/{id}/neighbourhood/{v}, for special-neighbour prompts.
  Reply neighbourhood(const std::string& id, std::string_view vertex) const;
  /// GET /sessions/{id}/integrity: replays the journal against the graph.
  Reply integrity(const std::string& id) const;

  std::size_t session_count() const;

 private:
  struct Session {
    mutable std::shared_mutex mutex;
    GraphDocument doc;
    std::uint64_t revision = 0;
  };

  std::shared_ptr<Session> find(const std::string& id) const;
  std::string new_id();

  mutable std::shared_mutex sessions_mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::mutex rng_mutex_;
  std::mt19937_64 rng_;
};

/// {"rule": ..., "message": ..., "detail": {...}} with the given status.
Reply error_reply(int status, std::string_view rule, const std::string& message,
                  const std::string& detail_json = "{}");

/// Status code for a domain rule: 400 for malformed input, 422 otherwise.
int status_for_rule(std::string_view rule);

}  // namespace q2g::service

#endif  // Q2G_SERVICE_SESSION_STORE_HPP
