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

// File formats for the core model.
//
//   questionnaire.json  {id, title, questions:[{id, prompt, options:[label,...]}]}
//   palette.json        {option_colors:[{name, rgb:[r,g,b]}], boundary:{...}, warp:{...}}
//   responses.csv       participant_id,q1,...,qQ  (0-based option indices)
//
// Parse failures throw loom::Error with ErrorCode::ParseError. None of these
// functions run the model validators; callers decide when to validate.

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "loom/model.hpp"

namespace loom {

Questionnaire questionnaire_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Questionnaire& q);

YarnColor yarn_from_json(const nlohmann::json& j);
nlohmann::json to_json(const YarnColor& c);

// "warp" is optional and defaults to default_warp_color().
Palette palette_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Palette& p);

// Accepts LF or CRLF, a leading UTF-8 BOM and RFC 4180 quoting. The header
// must start with participant_id; the remaining column names are not checked,
// only their count against question_count.
std::vector<ParticipantRecord> parse_responses_csv(std::string_view text,
                                                   std::size_t question_count);
std::string write_responses_csv(const std::vector<ParticipantRecord>& records,
                                std::size_t question_count);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace loom
