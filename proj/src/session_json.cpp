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

#include "loom/session_json.hpp"

#include "loom/io.hpp"

namespace loom {

using nlohmann::json;

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

template <class T>
T field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw Error(ErrorCode::ParseError, std::string("missing \"") + key + "\"");
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    throw Error(ErrorCode::ParseError, std::string("\"") + key + "\" has the wrong type");
  }
}

template <class T>
T field_or(const json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  return field<T>(j, key);
}

}  // namespace

json to_json(const SessionConfig& c) {
  return {{"warp_ends", c.encode.warp_ends},
          {"picks_per_answer", c.encode.picks_per_answer},
          {"boundary_picks", c.encode.boundary_picks},
          {"rows_per_pick", c.rows_per_pick},
          {"min_distance", c.min_distance}};
}

SessionConfig session_config_from_json(const json& j) {
  SessionConfig c;
  if (j.is_null()) return c;
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "config must be an object");
  c.encode.warp_ends = field_or<int>(j, "warp_ends", c.encode.warp_ends);
  c.encode.picks_per_answer = field_or<int>(j, "picks_per_answer", c.encode.picks_per_answer);
  c.encode.boundary_picks = field_or<int>(j, "boundary_picks", c.encode.boundary_picks);
  c.rows_per_pick = field_or<int>(j, "rows_per_pick", c.rows_per_pick);
  c.min_distance = field_or<double>(j, "min_distance", c.min_distance);
  return c;
}

json to_json(const SessionEvent& e) {
  json j = {{"seq", e.sequence}, {"ts", e.timestamp}};
  std::visit(Overloaded{
                 [&](const event::Created& c) {
                   j["kind"] = "Created";
                   j["session_id"] = c.session_id;
                   j["questionnaire"] = to_json(c.questionnaire);
                   j["palette"] = to_json(c.palette);
                   j["mode"] = std::string(to_string(c.mode));
                   j["config"] = to_json(c.config);
                 },
                 [&](const event::ParticipantAdded& p) {
                   j["kind"] = "ParticipantAdded";
                   j["participant_id"] = p.participant_id;
                   j["label"] = p.label;
                 },
                 [&](const event::AnswerRecorded& a) {
                   j["kind"] = "AnswerRecorded";
                   j["participant_id"] = a.participant_id;
                   j["question_index"] = a.question_index;
                   j["option_index"] = a.option_index;
                 },
                 [&](const event::FreeformPickRecorded& f) {
                   j["kind"] = "FreeformPickRecorded";
                   j["participant_id"] = f.participant_id;
                   j["color_name"] = f.color_name;
                 },
                 [&](const event::Closed&) { j["kind"] = "Closed"; },
             },
             e.kind);
  return j;
}

SessionEvent session_event_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "event must be an object");
  SessionEvent e;
  e.sequence = field<std::uint64_t>(j, "seq");
  e.timestamp = field_or<std::string>(j, "ts", "");
  const auto kind = field<std::string>(j, "kind");
  if (kind == "Created") {
    event::Created c;
    c.session_id = field<std::string>(j, "session_id");
    c.questionnaire = questionnaire_from_json(field<json>(j, "questionnaire"));
    c.palette = palette_from_json(field<json>(j, "palette"));
    c.mode = session_mode_from_string(field<std::string>(j, "mode"));
    c.config = session_config_from_json(field_or<json>(j, "config", json{}));
    e.kind = std::move(c);
  } else if (kind == "ParticipantAdded") {
    e.kind = event::ParticipantAdded{field<std::string>(j, "participant_id"),
                                     field_or<std::string>(j, "label", "")};
  } else if (kind == "AnswerRecorded") {
    e.kind = event::AnswerRecorded{field<std::string>(j, "participant_id"),
                                   field<std::size_t>(j, "question_index"),
                                   field<int>(j, "option_index")};
  } else if (kind == "FreeformPickRecorded") {
    e.kind = event::FreeformPickRecorded{field<std::string>(j, "participant_id"),
                                         field<std::string>(j, "color_name")};
  } else if (kind == "Closed") {
    e.kind = event::Closed{};
  } else {
    throw Error(ErrorCode::ParseError, "unknown event kind \"" + kind + "\"");
  }
  return e;
}

json to_json(const PickInstruction& p) {
  json purpose = p.purpose == PickPurpose::Boundary
                     ? json{{"kind", "boundary"}}
                     : json{{"kind", "answer"},
                            {"question_index", p.question_index},
                            {"question_prompt", p.question_prompt}};
  return {{"yarn", p.yarn}, {"rgb", {p.rgb.r, p.rgb.g, p.rgb.b}}, {"count", p.count},
          {"purpose", purpose}};
}

json state_view(const SessionState& state) {
  json participants = json::array();
  for (const auto& p : state.participants) {
    json answers = json::array();
    for (const auto& a : p.answers) answers.push_back(a ? json(*a) : json(nullptr));
    participants.push_back({{"participant_id", p.id},
                            {"label", p.label},
                            {"answers", answers},
                            {"answered", p.answered()},
                            {"complete", state.mode == SessionMode::Data && p.complete()}});
  }
  json freeform = json::array();
  for (const auto& f : state.freeform_picks) {
    freeform.push_back({{"participant_id", f.participant_id}, {"color", to_json(f.color)}});
  }
  json current = nullptr;
  if (state.mode == SessionMode::Data) {
    if (auto c = state.current_participant()) current = state.participants[*c].id;
  }
  return {{"session_id", state.id},
          {"mode", std::string(to_string(state.mode))},
          {"closed", state.closed},
          {"questionnaire", to_json(state.questionnaire)},
          {"palette", to_json(state.palette)},
          {"config", to_json(state.config)},
          {"participants", participants},
          {"current_participant", current},
          {"freeform_picks", freeform},
          {"event_count", state.last_sequence}};
}

}  // namespace loom
