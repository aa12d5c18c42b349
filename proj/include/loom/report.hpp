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

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "loom/model.hpp"

namespace loom {

struct QuestionTally {
  std::string question_id;
  std::vector<std::size_t> counts;  // indexed by option
  std::size_t answered = 0;         // == sum of counts

  friend bool operator==(const QuestionTally&, const QuestionTally&) = default;
};

// Answer frequencies per question.
struct Report {
  std::size_t participants_total = 0;
  std::vector<QuestionTally> questions;

  friend bool operator==(const Report&, const Report&) = default;
};

Report empty_report(const Questionnaire& q);

// Counts one answer; option must be in range for the question.
void tally(Report& report, std::size_t question_index, int option);

// Records are validated first; throws ValidationFailure.
Report report_from_records(const Questionnaire& q, std::span<const ParticipantRecord> records);

nlohmann::json to_json(const Report& report, const Questionnaire& q);

// Fixed-width text table, one block per question.
std::string format_report(const Report& report, const Questionnaire& q);

}  // namespace loom
