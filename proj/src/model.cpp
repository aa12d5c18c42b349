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

#include "loom/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <unordered_set>

namespace loom {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string join_descriptions(const std::vector<ValidationError>& errors) {
  std::string out;
  for (const auto& e : errors) {
    if (!out.empty()) out += "; ";
    out += describe(e);
  }
  return out;
}

// Option colors followed by the boundary, the class order used everywhere.
std::vector<const YarnColor*> classed_colors(const Palette& palette) {
  std::vector<const YarnColor*> colors;
  colors.reserve(palette.option_colors.size() + 1);
  for (const auto& c : palette.option_colors) colors.push_back(&c);
  colors.push_back(&palette.boundary);
  return colors;
}

}  // namespace

std::size_t Questionnaire::max_option_count() const {
  std::size_t n = 0;
  for (const auto& question : questions) n = std::max(n, question.options.size());
  return n;
}

Question make_question(std::string id, std::string prompt,
                       const std::vector<std::string>& labels) {
  Question question{std::move(id), std::move(prompt), {}};
  question.options.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    question.options.push_back({i, labels[i]});
  }
  return question;
}

YarnColor default_warp_color() { return {"Natural", {242, 238, 230}}; }

std::string describe(const ValidationError& error) {
  return std::visit(
      Overloaded{
          [](const EmptyQuestionnaire&) -> std::string {
            return "EmptyQuestionnaire: questionnaire has no questions";
          },
          [](const TooFewOptions& e) -> std::string {
            return "TooFewOptions(" + e.question_id + "): " + std::to_string(e.count) +
                   " option(s), at least 2 required";
          },
          [](const DuplicateQuestionId& e) -> std::string {
            return "DuplicateQuestionId(" + e.question_id + ")";
          },
          [](const EmptyOptionLabel& e) -> std::string {
            return "EmptyOptionLabel(" + e.question_id + "): option " +
                   std::to_string(e.option_index) + " has an empty label";
          },
          [](const NonContiguousOptions& e) -> std::string {
            return "NonContiguousOptions(" + e.question_id +
                   "): option indices must be 0..N-1 in order";
          },
          [](const DuplicateColor& e) -> std::string {
            return "DuplicateColor(" + e.name_a + ", " + e.name_b + ")";
          },
          [](const ColorsTooClose& e) -> std::string {
            std::ostringstream os;
            os.precision(4);
            os << "ColorsTooClose(" << e.name_a << ", " << e.name_b << ", " << e.distance << ")";
            return os.str();
          },
          [](const PaletteTooSmall& e) -> std::string {
            return "PaletteTooSmall: " + std::to_string(e.colors) + " option color(s), " +
                   std::to_string(e.required) + " required";
          },
          [](const AnswerCountMismatch& e) -> std::string {
            return "AnswerCountMismatch(" + std::to_string(e.expected) + ", " +
                   std::to_string(e.got) + ")";
          },
          [](const OptionOutOfRange& e) -> std::string {
            return "OptionOutOfRange(" + std::to_string(e.question_index) + ", " +
                   std::to_string(e.value) + ")";
          },
      },
      error);
}

ValidationFailure::ValidationFailure(std::vector<ValidationError> errors, ErrorCode code)
    : Error(code, join_descriptions(errors)),
      errors_(std::move(errors)) {}

std::vector<ValidationError> validate_questionnaire(const Questionnaire& q) {
  std::vector<ValidationError> errors;
  if (q.questions.empty()) {
    errors.emplace_back(EmptyQuestionnaire{});
    return errors;
  }
  std::unordered_set<std::string> seen;
  for (const auto& question : q.questions) {
    if (!seen.insert(question.id).second) {
      errors.emplace_back(DuplicateQuestionId{question.id});
    }
    if (question.options.size() < 2) {
      errors.emplace_back(TooFewOptions{question.id, question.options.size()});
    }
    for (std::size_t i = 0; i < question.options.size(); ++i) {
      if (question.options[i].index != i) {
        errors.emplace_back(NonContiguousOptions{question.id});
        break;
      }
    }
    for (std::size_t i = 0; i < question.options.size(); ++i) {
      if (question.options[i].label.empty()) {
        errors.emplace_back(EmptyOptionLabel{question.id, i});
      }
    }
  }
  return errors;
}

double min_pairwise_distance(const Palette& palette) {
  const auto colors = classed_colors(palette);
  if (colors.size() < 2) return 0.0;
  int best = std::numeric_limits<int>::max();
  for (std::size_t i = 0; i < colors.size(); ++i) {
    for (std::size_t j = i + 1; j < colors.size(); ++j) {
      best = std::min(best, squared_distance(colors[i]->rgb, colors[j]->rgb));
    }
  }
  return std::sqrt(static_cast<double>(best));
}

std::vector<ValidationError> validate_palette(const Palette& palette, double min_distance) {
  std::vector<ValidationError> errors;
  const auto colors = classed_colors(palette);
  const double threshold_sq = min_distance * min_distance;

  int best = std::numeric_limits<int>::max();
  std::size_t best_i = 0;
  std::size_t best_j = 0;
  for (std::size_t i = 0; i < colors.size(); ++i) {
    for (std::size_t j = i + 1; j < colors.size(); ++j) {
      const int d = squared_distance(colors[i]->rgb, colors[j]->rgb);
      if (d < best) {
        best = d;
        best_i = i;
        best_j = j;
      }
    }
  }
  if (colors.size() >= 2 && static_cast<double>(best) < threshold_sq) {
    const auto& a = colors[best_i]->name;
    const auto& b = colors[best_j]->name;
    if (best == 0) {
      errors.emplace_back(DuplicateColor{a, b});
    } else {
      errors.emplace_back(ColorsTooClose{a, b, std::sqrt(static_cast<double>(best))});
    }
  } else if (colors.size() >= 2 && best == 0) {
    // min_distance 0 still rejects identical colors: they cannot be decoded.
    errors.emplace_back(DuplicateColor{colors[best_i]->name, colors[best_j]->name});
  }
  return errors;
}

std::vector<ValidationError> validate_palette_coverage(const Palette& palette,
                                                       const Questionnaire& q) {
  std::vector<ValidationError> errors;
  const std::size_t required = q.max_option_count();
  if (palette.option_colors.size() < required) {
    errors.emplace_back(PaletteTooSmall{palette.option_colors.size(), required});
  }
  return errors;
}

std::vector<ValidationError> validate_record(const Questionnaire& q,
                                             const ParticipantRecord& record) {
  std::vector<ValidationError> errors;
  const std::size_t expected = q.question_count();
  if (record.answers.size() != expected) {
    errors.emplace_back(AnswerCountMismatch{expected, record.answers.size()});
  }
  const std::size_t n = std::min(expected, record.answers.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int value = record.answers[i];
    if (value < 0 || static_cast<std::size_t>(value) >= q.questions[i].options.size()) {
      errors.emplace_back(OptionOutOfRange{i, value});
    }
  }
  return errors;
}

}  // namespace loom
