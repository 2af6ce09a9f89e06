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

#ifndef Q2G_SERVICE_SERVER_HPP
#define Q2G_SERVICE_SERVER_HPP

#include <memory>
#include <string>

#include "q2g/service/session_store.hpp"

namespace q2g::service {

/// HTTP front end over a SessionStore.
///
///   POST /sessions                        create (optional document body)
///   GET  /sessions/{id}/graph             document + revision
///   POST /sessions/{id}/ops               apply one operation
///   GET  /sessions/{id}/journal           journal + revision
///   GET  /sessions/{id}/save              canonical document text
///   PUT  /sessions/{id}/load              replace document
///   GET  /sessions/{id}/neighbourhood/{v} neighbours of v
///   GET  /sessions/{id}/integrity         journal replay check
class Server {
 public:
  explicit Server(SessionStore& store);
  ~Server();
  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  /// Binds without serving. Port 0 picks a free port. Returns the bound
  /// port, or -1 on failure.
  int bind(const std::string& address, int port);
  /// Serves until stop(). Call after bind().
  bool listen();
  void stop();
  void wait_until_ready() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace q2g::service

#endif  // Q2G_SERVICE_SERVER_HPP
