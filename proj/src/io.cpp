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

#include "loom/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace loom {

using nlohmann::json;

namespace {

[[noreturn]] void parse_error(const std::string& detail) {
  throw Error(ErrorCode::ParseError, detail);
}

const json& require(const json& j, const char* key, const char* what) {
  if (!j.is_object()) parse_error(std::string(what) + " must be a JSON object");
  auto it = j.find(key);
  if (it == j.end()) parse_error(std::string(what) + " is missing \"" + key + "\"");
  return *it;
}

std::string require_string(const json& j, const char* key, const char* what) {
  const json& v = require(j, key, what);
  if (!v.is_string()) parse_error(std::string(what) + " field \"" + key + "\" must be a string");
  return v.get<std::string>();
}

// Splits one CSV record starting at pos; advances pos past the line break.
std::vector<std::string> split_csv_record(std::string_view text, std::size_t& pos,
                                          std::size_t line_no) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  bool was_quoted = false;
  while (pos < text.size()) {
    const char c = text[pos];
    if (quoted) {
      if (c == '"') {
        if (pos + 1 < text.size() && text[pos + 1] == '"') {
          field += '"';
          pos += 2;
          continue;
        }
        quoted = false;
        ++pos;
        continue;
      }
      field += c;
      ++pos;
      continue;
    }
    if (c == '"' && field.empty() && !was_quoted) {
      quoted = true;
      was_quoted = true;
      ++pos;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
      was_quoted = false;
      ++pos;
    } else if (c == '\r' && pos + 1 < text.size() && text[pos + 1] == '\n') {
      pos += 2;
      fields.push_back(std::move(field));
      return fields;
    } else if (c == '\n') {
      ++pos;
      fields.push_back(std::move(field));
      return fields;
    } else {
      field += c;
      ++pos;
    }
  }
  if (quoted) parse_error("responses CSV line " + std::to_string(line_no) + ": unterminated quote");
  fields.push_back(std::move(field));
  return fields;
}

bool is_blank(const std::vector<std::string>& fields) {
  return fields.size() == 1 && fields[0].empty();
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

Questionnaire questionnaire_from_json(const json& j) {
  Questionnaire q;
  q.id = require_string(j, "id", "questionnaire");
  q.title = j.is_object() && j.contains("title") && j["title"].is_string()
                ? j["title"].get<std::string>()
                : std::string{};
  const json& questions = require(j, "questions", "questionnaire");
  if (!questions.is_array()) parse_error("questionnaire \"questions\" must be an array");
  for (const auto& jq : questions) {
    std::vector<std::string> labels;
    const json& options = require(jq, "options", "question");
    if (!options.is_array()) parse_error("question \"options\" must be an array");
    for (const auto& label : options) {
      if (!label.is_string()) parse_error("option labels must be strings");
      labels.push_back(label.get<std::string>());
    }
    std::string prompt = jq.contains("prompt") && jq["prompt"].is_string()
                             ? jq["prompt"].get<std::string>()
                             : std::string{};
    q.questions.push_back(make_question(require_string(jq, "id", "question"),
                                        std::move(prompt), labels));
  }
  return q;
}

json to_json(const Questionnaire& q) {
  json questions = json::array();
  for (const auto& question : q.questions) {
    json labels = json::array();
    for (const auto& option : question.options) labels.push_back(option.label);
    questions.push_back({{"id", question.id}, {"prompt", question.prompt}, {"options", labels}});
  }
  return {{"id", q.id}, {"title", q.title}, {"questions", questions}};
}

YarnColor yarn_from_json(const json& j) {
  YarnColor c;
  c.name = require_string(j, "name", "yarn color");
  const json& rgb = require(j, "rgb", "yarn color");
  if (!rgb.is_array() || rgb.size() != 3) {
    parse_error("yarn color \"" + c.name + "\" rgb must be an array of 3 integers");
  }
  std::uint8_t channels[3];
  for (std::size_t i = 0; i < 3; ++i) {
    if (!rgb[i].is_number_integer()) {
      parse_error("yarn color \"" + c.name + "\" rgb must contain integers");
    }
    const auto v = rgb[i].get<long long>();
    if (v < 0 || v > 255) {
      parse_error("yarn color \"" + c.name + "\" channel out of range 0..255");
    }
    channels[i] = static_cast<std::uint8_t>(v);
  }
  c.rgb = {channels[0], channels[1], channels[2]};
  return c;
}

json to_json(const YarnColor& c) {
  return {{"name", c.name}, {"rgb", {c.rgb.r, c.rgb.g, c.rgb.b}}};
}

Palette palette_from_json(const json& j) {
  Palette p;
  const json& options = require(j, "option_colors", "palette");
  if (!options.is_array()) parse_error("palette \"option_colors\" must be an array");
  for (const auto& c : options) p.option_colors.push_back(yarn_from_json(c));
  p.boundary = yarn_from_json(require(j, "boundary", "palette"));
  if (j.contains("warp")) p.warp = yarn_from_json(j["warp"]);
  return p;
}

json to_json(const Palette& p) {
  json options = json::array();
  for (const auto& c : p.option_colors) options.push_back(to_json(c));
  return {{"option_colors", options}, {"boundary", to_json(p.boundary)}, {"warp", to_json(p.warp)}};
}

std::vector<ParticipantRecord> parse_responses_csv(std::string_view text,
                                                   std::size_t question_count) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

  std::size_t pos = 0;
  std::size_t line_no = 1;
  std::vector<std::string> header;
  while (pos < text.size()) {
    header = split_csv_record(text, pos, line_no);
    if (!is_blank(header)) break;
    ++line_no;
  }
  if (header.empty() || is_blank(header)) parse_error("responses CSV is missing its header row");
  if (header[0] != "participant_id") {
    parse_error("responses CSV header must start with participant_id");
  }
  if (header.size() != question_count + 1) {
    parse_error("responses CSV header has " + std::to_string(header.size() - 1) +
                " answer column(s), questionnaire has " + std::to_string(question_count));
  }

  std::vector<ParticipantRecord> records;
  while (pos < text.size()) {
    ++line_no;
    auto fields = split_csv_record(text, pos, line_no);
    if (is_blank(fields)) continue;
    if (fields.size() != header.size()) {
      parse_error("responses CSV line " + std::to_string(line_no) + ": expected " +
                  std::to_string(header.size()) + " cells, got " + std::to_string(fields.size()));
    }
    ParticipantRecord record{fields[0], {}};
    for (std::size_t i = 1; i < fields.size(); ++i) {
      const std::string& cell = fields[i];
      int value = 0;
      const auto* begin = cell.data();
      const auto* end = cell.data() + cell.size();
      auto [ptr, ec] = std::from_chars(begin, end, value);
      if (cell.empty() || ec != std::errc{} || ptr != end) {
        parse_error("responses CSV line " + std::to_string(line_no) + ": \"" + cell +
                    "\" is not an integer option index");
      }
      record.answers.push_back(value);
    }
    records.push_back(std::move(record));
  }
  return records;
}

std::string write_responses_csv(const std::vector<ParticipantRecord>& records,
                                std::size_t question_count) {
  std::string out = "participant_id";
  for (std::size_t i = 1; i <= question_count; ++i) out += ",q" + std::to_string(i);
  out += '\n';
  for (const auto& record : records) {
    out += csv_escape(record.participant_id);
    for (int a : record.answers) out += "," + std::to_string(a);
    out += '\n';
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::IoError, "cannot read " + path.string());
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
}

json read_json_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    parse_error(path.string() + ": " + e.what());
  }
}

}  // namespace loom
