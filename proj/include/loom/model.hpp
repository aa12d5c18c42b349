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

// Questionnaires, yarn palettes and participant records, plus the validation
// rules that make a set of them encodable and decodable.
//
// Colors are assigned globally by option index: option k of every question is
// woven with palette.option_colors[k]. The boundary yarn separates one
// participant's picks from the next and must stay distinguishable from every
// option color; the warp color is presentation only.

#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "loom/color.hpp"
#include "loom/errors.hpp"

namespace loom {

inline constexpr double kDefaultMinDistance = 64.0;

struct ResponseOption {
  std::size_t index = 0;
  std::string label;

  friend bool operator==(const ResponseOption&, const ResponseOption&) = default;
};

struct Question {
  std::string id;
  std::string prompt;
  std::vector<ResponseOption> options;

  friend bool operator==(const Question&, const Question&) = default;
};

struct Questionnaire {
  std::string id;
  std::string title;
  std::vector<Question> questions;

  std::size_t question_count() const { return questions.size(); }
  std::size_t max_option_count() const;

  friend bool operator==(const Questionnaire&, const Questionnaire&) = default;
};

// Builds a question whose options are indexed 0..labels.size()-1.
Question make_question(std::string id, std::string prompt,
                       const std::vector<std::string>& labels);

YarnColor default_warp_color();

struct Palette {
  std::vector<YarnColor> option_colors;
  YarnColor boundary;
  YarnColor warp = default_warp_color();

  friend bool operator==(const Palette&, const Palette&) = default;
};

struct ParticipantRecord {
  std::string participant_id;
  std::vector<int> answers;

  friend bool operator==(const ParticipantRecord&, const ParticipantRecord&) = default;
};

// ---------------------------------------------------------------------------
// Validation errors

struct EmptyQuestionnaire {};
struct TooFewOptions {
  std::string question_id;
  std::size_t count = 0;
};
struct DuplicateQuestionId {
  std::string question_id;
};
struct EmptyOptionLabel {
  std::string question_id;
  std::size_t option_index = 0;
};
struct NonContiguousOptions {
  std::string question_id;
};
struct DuplicateColor {
  std::string name_a;
  std::string name_b;
};
struct ColorsTooClose {
  std::string name_a;
  std::string name_b;
  double distance = 0.0;
};
struct PaletteTooSmall {
  std::size_t colors = 0;
  std::size_t required = 0;
};
struct AnswerCountMismatch {
  std::size_t expected = 0;
  std::size_t got = 0;
};
struct OptionOutOfRange {
  std::size_t question_index = 0;
  int value = 0;
};

using ValidationError =
    std::variant<EmptyQuestionnaire, TooFewOptions, DuplicateQuestionId,
                 EmptyOptionLabel, NonContiguousOptions, DuplicateColor,
                 ColorsTooClose, PaletteTooSmall, AnswerCountMismatch,
                 OptionOutOfRange>;

std::string describe(const ValidationError& error);

// Thrown where a caller required valid input and did not get it. The code is
// ValidationFailed except for the palette-coverage check (PaletteTooSmall).
class ValidationFailure : public Error {
 public:
  explicit ValidationFailure(std::vector<ValidationError> errors,
                             ErrorCode code = ErrorCode::ValidationFailed);

  const std::vector<ValidationError>& errors() const noexcept { return errors_; }

 private:
  std::vector<ValidationError> errors_;
};

// An empty result means valid.
std::vector<ValidationError> validate_questionnaire(const Questionnaire& q);

// Reports the closest pair among option colors and the boundary when it is
// nearer than min_distance (DuplicateColor when they coincide).
std::vector<ValidationError> validate_palette(const Palette& palette,
                                              double min_distance = kDefaultMinDistance);

std::vector<ValidationError> validate_palette_coverage(const Palette& palette,
                                                       const Questionnaire& q);

std::vector<ValidationError> validate_record(const Questionnaire& q,
                                             const ParticipantRecord& record);

// Smallest pairwise distance among option colors and the boundary; 0 for
// fewer than two colors.
double min_pairwise_distance(const Palette& palette);

}  // namespace loom
