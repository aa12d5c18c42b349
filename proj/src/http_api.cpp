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

#include "loom/http_api.hpp"

#include <charconv>
#include <vector>

#include <httplib.h>
#include <json.hpp>

#include "loom/io.hpp"
#include "loom/session_json.hpp"
#include "loom/wif.hpp"

namespace loom {

using nlohmann::json;

namespace {

ApiResponse json_response(int status, const json& body) {
  return {status, "application/json", body.dump()};
}

ApiResponse error_response(int status, std::string_view code, const std::string& detail) {
  return json_response(status, {{"error", code}, {"detail", detail}});
}

ApiResponse no_content() { return {204, "application/json", ""}; }

std::vector<std::string> split_path(const std::string& path) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (pos < path.size()) {
    const auto slash = path.find('/', pos);
    const auto end = slash == std::string::npos ? path.size() : slash;
    if (end > pos) parts.push_back(path.substr(pos, end - pos));
    pos = end + 1;
  }
  return parts;
}

json parse_body(const std::string& body) {
  if (body.empty()) return json::object();
  try {
    json j = json::parse(body);
    if (!j.is_object()) throw Error(ErrorCode::ParseError, "request body must be a JSON object");
    return j;
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed JSON body: ") + e.what());
  }
}

template <class T>
T body_field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw Error(ErrorCode::ParseError, std::string("missing \"") + key + "\"");
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    throw Error(ErrorCode::ParseError, std::string("\"") + key + "\" has the wrong type");
  }
}

int query_int(const ApiRequest& r, const std::string& key, int fallback) {
  auto it = r.query.find(key);
  if (it == r.query.end()) return fallback;
  int v = 0;
  const auto& s = it->second;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || v < 1 || v > 200) {
    throw Error(ErrorCode::InvalidArgument, key + " must be an integer in 1..200");
  }
  return v;
}

}  // namespace

int http_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotFound:
      return 404;
    case ErrorCode::UnknownParticipant:
    case ErrorCode::InvalidAnswer:
    case ErrorCode::UnknownColor:
      return 422;
    case ErrorCode::DuplicateAnswer:
    case ErrorCode::DuplicateParticipant:
    case ErrorCode::SessionClosed:
    case ErrorCode::ModeMismatch:
    case ErrorCode::OutOfSequence:
      return 409;
    case ErrorCode::IoError:
    case ErrorCode::CorruptLog:
      return 500;
    default:
      return 400;
  }
}

ApiResponse SessionApi::handle(const ApiRequest& request) const {
  const auto parts = split_path(request.path);
  const std::string& method = request.method;
  auto not_allowed = [&] {
    return error_response(405, "MethodNotAllowed", method + " " + request.path);
  };
  try {
    if (parts.size() < 2 || parts[0] != "api" || parts[1] != "sessions") {
      return error_response(404, "NotFound", "no route " + request.path);
    }

    if (parts.size() == 2) {
      if (method == "GET") return json_response(200, {{"sessions", store_.session_ids()}});
      if (method != "POST") return not_allowed();
      const json body = parse_body(request.body);
      const auto q = questionnaire_from_json(body_field<json>(body, "questionnaire"));
      const auto palette = palette_from_json(body_field<json>(body, "palette"));
      const auto mode = body.contains("mode")
                            ? session_mode_from_string(body_field<std::string>(body, "mode"))
                            : SessionMode::Data;
      const auto config =
          session_config_from_json(body.contains("config") ? body["config"] : json{});
      return json_response(201, {{"session_id", store_.create(q, palette, mode, config)}});
    }

    const std::string& id = parts[2];
    if (parts.size() == 3) {
      if (method != "GET") return not_allowed();
      return json_response(200, state_view(store_.snapshot(id)));
    }
    if (parts.size() != 4) return error_response(404, "NotFound", "no route " + request.path);
    const std::string& action = parts[3];

    if (action == "participants") {
      if (method != "POST") return not_allowed();
      const json body = parse_body(request.body);
      const std::string label = body.contains("label") ? body_field<std::string>(body, "label") : "";
      return json_response(201, {{"participant_id", store_.add_participant(id, label)}});
    }
    if (action == "answers") {
      if (method != "POST") return not_allowed();
      const json body = parse_body(request.body);
      const auto question = body_field<long long>(body, "question_index");
      if (question < 0) throw Error(ErrorCode::InvalidAnswer, "question_index must be >= 0");
      store_.record_answer(id, body_field<std::string>(body, "participant_id"),
                           static_cast<std::size_t>(question), body_field<int>(body, "option_index"));
      return no_content();
    }
    if (action == "freeform-picks") {
      if (method != "POST") return not_allowed();
      const json body = parse_body(request.body);
      store_.record_freeform_pick(id, body_field<std::string>(body, "participant_id"),
                                  body_field<std::string>(body, "color_name"));
      return no_content();
    }
    if (action == "close") {
      if (method != "POST") return not_allowed();
      store_.close(id);
      return no_content();
    }

    if (method != "GET") {
      if (action == "next-picks" || action == "preview.svg" || action == "draft.wif" ||
          action == "report") {
        return not_allowed();
      }
      return error_response(404, "NotFound", "no route " + request.path);
    }
    const SessionState state = store_.snapshot(id);
    if (action == "next-picks") {
      json picks = json::array();
      for (const auto& p : next_picks(state)) picks.push_back(to_json(p));
      return json_response(200, {{"picks", picks}});
    }
    if (action == "preview.svg") {
      return {200, "image/svg+xml", export_svg(preview(state), query_int(request, "cell_px", 10))};
    }
    if (action == "draft.wif") {
      WifMetadata meta;
      const auto log = store_.events(id);
      meta.date = log.front().timestamp.substr(0, 10);
      return {200, "text/plain; charset=utf-8", emit_wif(woven_draft(state), state.palette, meta)};
    }
    if (action == "report") {
      return json_response(200, to_json(session_report(state), state.questionnaire));
    }
    return error_response(404, "NotFound", "no route " + request.path);
  } catch (const Error& e) {
    return error_response(http_status(e.code()), to_string(e.code()), e.what());
  } catch (const std::exception& e) {
    return error_response(500, "Internal", e.what());
  }
}

struct HttpServer::Impl {
  SessionApi api;
  httplib::Server server;

  explicit Impl(SessionStore& store) : api(store) {}
};

HttpServer::HttpServer(SessionStore& store, std::filesystem::path static_dir)
    : impl_(std::make_unique<Impl>(store)) {
  auto dispatch = [this](const httplib::Request& req, httplib::Response& res) {
    ApiRequest request{req.method, req.path, req.body, {}};
    for (const auto& [k, v] : req.params) request.query.emplace(k, v);
    const ApiResponse response = impl_->api.handle(request);
    res.status = response.status;
    if (response.status != 204) res.set_content(response.body, response.content_type);
  };
  const char* pattern = R"(/api/.*)";
  impl_->server.Get(pattern, dispatch);
  impl_->server.Post(pattern, dispatch);
  impl_->server.Put(pattern, dispatch);
  impl_->server.Delete(pattern, dispatch);
  impl_->server.Patch(pattern, dispatch);
  if (!static_dir.empty()) impl_->server.set_mount_point("/", static_dir.string());
}

HttpServer::~HttpServer() = default;

bool HttpServer::listen(const std::string& host, int port) {
  return impl_->server.listen(host, port);
}

int HttpServer::bind_to_any_port(const std::string& host) {
  return impl_->server.bind_to_any_port(host);
}

bool HttpServer::listen_after_bind() { return impl_->server.listen_after_bind(); }

void HttpServer::stop() { impl_->server.stop(); }

void HttpServer::wait_until_ready() const { impl_->server.wait_until_ready(); }

}  // namespace loom
