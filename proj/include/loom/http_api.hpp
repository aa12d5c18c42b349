// Copyright 2026 The Loom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// HTTP JSON API over a SessionStore.
//
//   POST /api/sessions                          {questionnaire, palette, mode, config} -> 201 {session_id}
//   GET  /api/sessions/{id}                     state view
//   POST /api/sessions/{id}/participants        {label} -> 201 {participant_id}
//   POST /api/sessions/{id}/answers             {participant_id, question_index, option_index} -> 204
//   POST /api/sessions/{id}/freeform-picks      {participant_id, color_name} -> 204
//   POST /api/sessions/{id}/close               -> 204
//   GET  /api/sessions/{id}/next-picks          {picks:[{yarn, rgb, count, purpose}]}
//   GET  /api/sessions/{id}/preview.svg[?cell_px=N]
//   GET  /api/sessions/{id}/draft.wif
//   GET  /api/sessions/{id}/report
//
// Errors are {error: <code>, detail} with a 4xx status (5xx for I/O).
// SessionApi::handle does all of the routing so it can be driven without a
// socket; HttpServer only adapts cpp-httplib to it.

#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <string>

#include "loom/errors.hpp"
#include "loom/session_store.hpp"

namespace loom {

struct ApiRequest {
  std::string method;
  std::string path;
  std::string body;
  std::map<std::string, std::string> query;
};

struct ApiResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

int http_status(ErrorCode code);

class SessionApi {
 public:
  explicit SessionApi(SessionStore& store) : store_(store) {}

  ApiResponse handle(const ApiRequest& request) const;

 private:
  SessionStore& store_;
};

class HttpServer {
 public:
  // static_dir, when nonempty, is served at "/" for the browser console.
  HttpServer(SessionStore& store, std::filesystem::path static_dir = {});
  ~HttpServer();

  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Blocks until stop(). Returns false if the port could not be bound.
  bool listen(const std::string& host, int port);
  // Binds an ephemeral port and returns it (-1 on failure); then call
  // listen_after_bind() to serve.
  int bind_to_any_port(const std::string& host);
  bool listen_after_bind();
  void stop();
  void wait_until_ready() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace loom
