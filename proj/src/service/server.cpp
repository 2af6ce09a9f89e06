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

#include "q2g/service/server.hpp"

#include "httplib.h"

namespace q2g::service {

struct Server::Impl {
  explicit Impl(SessionStore& s) : store(s) {}
  SessionStore& store;
  httplib::Server http;
};

namespace {

void send(httplib::Response& res, const Reply& reply) {
  res.status = reply.status;
  res.set_content(reply.body, reply.content_type);
}

}  // namespace

Server::Server(SessionStore& store) : impl_(std::make_unique<Impl>(store)) {
  auto& http = impl_->http;
  SessionStore& s = impl_->store;

  // The editor may be served from another origin.
  http.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                            {"Access-Control-Allow-Methods", "GET, POST, PUT, OPTIONS"},
                            {"Access-Control-Allow-Headers", "Content-Type"}});
  http.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

  http.Post("/sessions", [&s](const httplib::Request& req, httplib::Response& res) {
    send(res, s.create_session(req.body));
  });
  http.Get(R"(/sessions/([^/]+)/graph)", [&s](const httplib::Request& req, httplib::Response& res) {
    send(res, s.get_graph(req.matches[1]));
  });
  http.Post(R"(/sessions/([^/]+)/ops)", [&s](const httplib::Request& req, httplib::Response& res) {
    send(res, s.apply(req.matches[1], req.body));
  });
  http.Get(R"(/sessions/([^/]+)/journal)", [&s](const httplib::Request& req, httplib::Response& res) {
    send(res, s.get_journal(req.matches[1]));
  });
  http.Get(R"(/sessions/([^/]+)/save)", [&s](const httplib::Request& req, httplib::Response& res) {
    send(res, s.save(req.matches[1]));
  });
  http.Put(R"(/sessions/([^/]+)/load)", [&s](const httplib::Request& req, httplib::Response& res) {
    send(res, s.load(req.matches[1], req.body));
  });
  http.Get(R"(/sessions/([^/]+)/neighbourhood/([^/]+))",
           [&s](const httplib::Request& req, httplib::Response& res) {
             send(res, s.neighbourhood(req.matches[1], req.matches[2].str()));
           });
  http.Get(R"(/sessions/([^/]+)/integrity)", [&s](const httplib::Request& req, httplib::Response& res) {
    send(res, s.integrity(req.matches[1]));
  });
  http.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (res.body.empty()) {
      const Reply r = error_reply(res.status, "not-found", "no such endpoint");
      res.set_content(r.body, r.content_type);
    }
  });
}

Server::~Server() { stop(); }

int Server::bind(const std::string& address, int port) {
  if (port == 0) return impl_->http.bind_to_any_port(address);
  return impl_->http.bind_to_port(address, port) ? port : -1;
}

bool Server::listen() { return impl_->http.listen_after_bind(); }

void Server::stop() { impl_->http.stop(); }

void Server::wait_until_ready() const { impl_->http.wait_until_ready(); }

}  // namespace q2g::service
