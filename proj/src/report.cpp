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

#include "loom/report.hpp"

#include <cstdio>

namespace loom {

Report empty_report(const Questionnaire& q) {
  Report report;
  for (const auto& question : q.questions) {
    report.questions.push_back({question.id, std::vector<std::size_t>(question.options.size(), 0), 0});
  }
  return report;
}

void tally(Report& report, std::size_t question_index, int option) {
  auto& t = report.questions.at(question_index);
  ++t.counts.at(static_cast<std::size_t>(option));
  ++t.answered;
}

Report report_from_records(const Questionnaire& q, std::span<const ParticipantRecord> records) {
  std::vector<ValidationError> errors;
  for (const auto& record : records) {
    auto e = validate_record(q, record);
    errors.insert(errors.end(), e.begin(), e.end());
  }
  if (!errors.empty()) throw ValidationFailure(std::move(errors));

  Report report = empty_report(q);
  report.participants_total = records.size();
  for (const auto& record : records) {
    for (std::size_t i = 0; i < record.answers.size(); ++i) tally(report, i, record.answers[i]);
  }
  return report;
}

nlohmann::json to_json(const Report& report, const Questionnaire& q) {
  nlohmann::json questions = nlohmann::json::array();
  for (std::size_t i = 0; i < report.questions.size(); ++i) {
    const auto& t = report.questions[i];
    nlohmann::json options = nlohmann::json::array();
    for (std::size_t k = 0; k < t.counts.size(); ++k) {
      const std::string label = i < q.questions.size() && k < q.questions[i].options.size()
                                    ? q.questions[i].options[k].label
                                    : std::string{};
      options.push_back({{"index", k}, {"label", label}, {"count", t.counts[k]}});
    }
    questions.push_back({{"question_id", t.question_id},
                         {"prompt", i < q.questions.size() ? q.questions[i].prompt : ""},
                         {"answered", t.answered},
                         {"options", options}});
  }
  return {{"participants_total", report.participants_total}, {"questions", questions}};
}

std::string format_report(const Report& report, const Questionnaire& q) {
  std::string out = "participants: " + std::to_string(report.participants_total) + "\n";
  char buf[256];
  for (std::size_t i = 0; i < report.questions.size(); ++i) {
    const auto& t = report.questions[i];
    const auto& question = q.questions.at(i);
    out += "\n" + question.id + (question.prompt.empty() ? "" : "  " + question.prompt) +
           "  (answered " + std::to_string(t.answered) + ")\n";
    for (std::size_t k = 0; k < t.counts.size(); ++k) {
      std::snprintf(buf, sizeof buf, "  %2zu  %-24s %5zu\n", k, question.options[k].label.c_str(),
                    t.counts[k]);
      out += buf;
    }
  }
  return out;
}

}  // namespace loom
