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

// JSON forms of session events (one per line in the session log) and of the
// state views returned by the HTTP API.

#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "loom/session.hpp"

namespace loom {

nlohmann::json to_json(const SessionEvent& e);
// Throws Error(ParseError).
SessionEvent session_event_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SessionConfig& c);
// Missing fields take their defaults; throws Error(ParseError) on wrong types.
SessionConfig session_config_from_json(const nlohmann::json& j);

nlohmann::json state_view(const SessionState& state);
nlohmann::json to_json(const PickInstruction& p);

}  // namespace loom
