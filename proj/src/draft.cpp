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

#include "loom/draft.hpp"

#include <algorithm>

namespace loom {

namespace {

void check_positive(int value, const char* name) {
  if (value < 1) {
    throw Error(ErrorCode::InvalidArgument, std::string(name) + " must be a positive integer");
  }
}

void check_config(const EncodeConfig& config) {
  check_positive(config.warp_ends, "warp_ends");
  check_positive(config.picks_per_answer, "picks_per_answer");
  check_positive(config.boundary_picks, "boundary_picks");
}

WeavingDraft empty_draft(const Palette& palette, const EncodeConfig& config) {
  WeavingDraft draft;
  draft.warp_ends = config.warp_ends;
  draft.warp_color = palette.warp;
  draft.picks_per_answer = config.picks_per_answer;
  draft.boundary_picks = config.boundary_picks;
  return draft;
}

void append_boundary(WeavingDraft& draft, const Palette& palette) {
  for (int k = 0; k < draft.boundary_picks; ++k) {
    draft.picks.push_back({palette.boundary, BoundaryPick{}});
  }
}

void append_answer(WeavingDraft& draft, const Palette& palette, std::size_t participant,
                   std::size_t question, int answer) {
  const auto& color = palette.option_colors[static_cast<std::size_t>(answer)];
  for (int k = 0; k < draft.picks_per_answer; ++k) {
    draft.picks.push_back({color, DataPick{participant, question}});
  }
}

}  // namespace

std::size_t WeavingDraft::boundary_pick_count() const {
  return static_cast<std::size_t>(
      std::count_if(picks.begin(), picks.end(), [](const WeftPick& p) { return p.is_boundary(); }));
}

WeavingDraft encode_session(const Questionnaire& q, const Palette& palette,
                            std::span<const ParticipantRecord> records,
                            const EncodeConfig& config, double min_distance) {
  check_config(config);
  if (auto errors = validate_palette_coverage(palette, q); !errors.empty()) {
    throw ValidationFailure(std::move(errors), ErrorCode::PaletteTooSmall);
  }
  std::vector<ValidationError> errors = validate_questionnaire(q);
  auto palette_errors = validate_palette(palette, min_distance);
  errors.insert(errors.end(), palette_errors.begin(), palette_errors.end());
  for (const auto& record : records) {
    auto record_errors = validate_record(q, record);
    errors.insert(errors.end(), record_errors.begin(), record_errors.end());
  }
  if (!errors.empty()) throw ValidationFailure(std::move(errors));

  WeavingDraft draft = empty_draft(palette, config);
  const std::size_t question_count = q.question_count();
  draft.picks.reserve(records.size() * question_count *
                          static_cast<std::size_t>(config.picks_per_answer) +
                      (records.empty() ? 0 : records.size() - 1) *
                          static_cast<std::size_t>(config.boundary_picks));
  for (std::size_t p = 0; p < records.size(); ++p) {
    if (p > 0) append_boundary(draft, palette);
    for (std::size_t i = 0; i < question_count; ++i) {
      append_answer(draft, palette, p, i, records[p].answers[i]);
    }
  }
  return draft;
}

bool PartialRecord::complete() const {
  return std::all_of(answers.begin(), answers.end(), [](const auto& a) { return a.has_value(); });
}

WeavingDraft encode_partial(const Palette& palette, std::span<const PartialRecord> participants,
                            const EncodeConfig& config) {
  check_config(config);
  WeavingDraft draft = empty_draft(palette, config);
  for (std::size_t p = 0; p < participants.size(); ++p) {
    const auto& answers = participants[p].answers;
    for (std::size_t i = 0; i < answers.size(); ++i) {
      if (answers[i]) append_answer(draft, palette, p, i, *answers[i]);
    }
    if (participants[p].complete() && p + 1 < participants.size()) {
      append_boundary(draft, palette);
    }
  }
  return draft;
}

ColorGrid::ColorGrid(std::size_t rows, std::size_t cols, Rgb fill)
    : rows_(rows), cols_(cols), cells_(rows * cols, fill) {}

ColorGrid render_chart(const WeavingDraft& draft, const ChartConfig& config) {
  check_positive(config.rows_per_pick, "rows_per_pick");
  const auto rows_per_pick = static_cast<std::size_t>(config.rows_per_pick);
  ColorGrid grid(draft.picks.size() * rows_per_pick, static_cast<std::size_t>(draft.warp_ends));
  for (std::size_t i = 0; i < draft.picks.size(); ++i) {
    for (std::size_t k = 0; k < rows_per_pick; ++k) {
      auto row = grid.row(i * rows_per_pick + k);
      std::fill(row.begin(), row.end(), draft.picks[i].color.rgb);
    }
  }
  return grid;
}

std::string export_svg(const ColorGrid& grid, int cell_px) {
  check_positive(cell_px, "cell_px");
  const std::size_t px = static_cast<std::size_t>(cell_px);
  const std::string width = std::to_string(grid.cols() * px);
  const std::string height = std::to_string(grid.rows() * px);
  const std::string cell = std::to_string(px);

  std::string out;
  out.reserve(128 + grid.rows() * grid.cols() * 64);
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + width +
         "\" height=\"" + height + "\" viewBox=\"0 0 " + width + " " + height +
         "\" shape-rendering=\"crispEdges\">\n";
  for (std::size_t r = 0; r < grid.rows(); ++r) {
    const std::string y = std::to_string(r * px);
    for (std::size_t c = 0; c < grid.cols(); ++c) {
      out += "<rect x=\"" + std::to_string(c * px) + "\" y=\"" + y + "\" width=\"" + cell +
             "\" height=\"" + cell + "\" fill=\"" + to_hex(grid.at(r, c)) + "\"/>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace loom
