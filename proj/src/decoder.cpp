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

#include "loom/decoder.hpp"

#include <algorithm>
#include <charconv>

#include "loom/errors.hpp"

namespace loom {

namespace {

struct Pick {
  RowClassification cls;
  std::size_t row = 0;  // first grid row of the pick
};

RowClassification to_classification(const BlockVote& vote, std::size_t option_count) {
  RowClassification out;
  if (vote.class_index == option_count) {
    out.kind = RowKind::Boundary;
  } else {
    out.kind = RowKind::Option;
    out.option = vote.class_index;
  }
  out.votes = vote.votes;
  out.cells = vote.cells;
  out.confidence =
      vote.cells == 0 ? 0.0 : static_cast<double>(vote.votes) / static_cast<double>(vote.cells);
  return out;
}

void require_positive(int v, const char* name) {
  if (v < 1) throw Error(ErrorCode::InvalidArgument, std::string(name) + " must be positive");
}

// Turns one participant block's data picks into a record, or diagnostics.
void decode_block(std::span<const Pick> picks, std::size_t block, const Questionnaire& q,
                  const DecodeConfig& config, DecodeResult& result) {
  const auto per_answer = static_cast<std::size_t>(config.picks_per_answer);
  const std::size_t expected = q.question_count() * per_answer;
  if (picks.size() != expected) {
    result.diagnostics.push_back(
        {block, picks.front().row, DiagnosticIssue::BlockLengthMismatch, std::nullopt,
         "expected " + std::to_string(expected) + " data picks, found " +
             std::to_string(picks.size())});
    return;
  }

  ParticipantRecord record{"p" + std::to_string(block), {}};
  bool ok = true;
  for (std::size_t question = 0; question < q.question_count(); ++question) {
    const auto run = picks.subspan(question * per_answer, per_answer);
    const std::size_t option = run.front().cls.option;
    const bool agree = std::all_of(run.begin(), run.end(),
                                   [&](const Pick& p) { return p.cls.option == option; });
    if (!agree) {
      result.diagnostics.push_back({block, run.front().row, DiagnosticIssue::RunDisagreement,
                                    std::nullopt,
                                    "picks for question " + std::to_string(question + 1) +
                                        " disagree"});
      ok = false;
      continue;
    }
    if (option >= q.questions[question].options.size()) {
      result.diagnostics.push_back({block, run.front().row, DiagnosticIssue::OptionOutOfRange,
                                    std::nullopt,
                                    "option " + std::to_string(option) + " not offered by " +
                                        q.questions[question].id});
      ok = false;
      continue;
    }
    record.answers.push_back(static_cast<int>(option));
  }
  if (ok) result.records.push_back(std::move(record));
}

}  // namespace

std::string_view to_string(DiagnosticIssue issue) {
  switch (issue) {
    case DiagnosticIssue::AmbiguousColor: return "AmbiguousColor";
    case DiagnosticIssue::LeadingBoundary: return "LeadingBoundary";
    case DiagnosticIssue::TrailingBoundary: return "TrailingBoundary";
    case DiagnosticIssue::BoundaryOnly: return "BoundaryOnly";
    case DiagnosticIssue::BoundaryWidth: return "BoundaryWidth";
    case DiagnosticIssue::BlockLengthMismatch: return "BlockLengthMismatch";
    case DiagnosticIssue::RunDisagreement: return "RunDisagreement";
    case DiagnosticIssue::OptionOutOfRange: return "OptionOutOfRange";
  }
  return "Unknown";
}

bool fails_block(DiagnosticIssue issue) {
  return issue == DiagnosticIssue::BlockLengthMismatch ||
         issue == DiagnosticIssue::RunDisagreement || issue == DiagnosticIssue::OptionOutOfRange;
}

bool DecodeResult::any_block_failed() const {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return fails_block(d.issue); });
}

std::size_t DecodeResult::count(DiagnosticIssue issue) const {
  return static_cast<std::size_t>(std::count_if(
      diagnostics.begin(), diagnostics.end(), [&](const Diagnostic& d) { return d.issue == issue; }));
}

std::vector<Rgb> class_colors(const Palette& palette) {
  std::vector<Rgb> classes;
  classes.reserve(palette.option_colors.size() + 1);
  for (const auto& c : palette.option_colors) classes.push_back(c.rgb);
  classes.push_back(palette.boundary.rgb);
  return classes;
}

RowClassification classify_row(std::span<const Rgb> cells, const Palette& palette) {
  if (cells.empty()) throw Error(ErrorCode::ShapeError, "cannot classify an empty row");
  ColorGrid row(1, cells.size());
  std::copy(cells.begin(), cells.end(), row.row(0).begin());
  const auto classes = class_colors(palette);
  const auto votes = reference::classify_blocks(row, classes, 1);
  return to_classification(votes.front(), palette.option_colors.size());
}

DecodeResult decode_grid(const ColorGrid& grid, const Questionnaire& q, const Palette& palette,
                         const DecodeConfig& config) {
  require_positive(config.rows_per_pick, "rows_per_pick");
  require_positive(config.picks_per_answer, "picks_per_answer");
  require_positive(config.boundary_picks, "boundary_picks");
  const auto rows_per_pick = static_cast<std::size_t>(config.rows_per_pick);
  if (grid.rows() % rows_per_pick != 0) {
    throw Error(ErrorCode::ShapeError, std::to_string(grid.rows()) +
                                           " rows are not a multiple of rows_per_pick " +
                                           std::to_string(rows_per_pick));
  }
  DecodeResult result;
  if (grid.rows() == 0) return result;
  if (grid.cols() == 0) throw Error(ErrorCode::ShapeError, "grid has rows but no columns");

  const auto classes = class_colors(palette);
  const auto votes = config.reference_kernels
                         ? reference::classify_blocks(grid, classes, rows_per_pick)
                         : parallel::classify_blocks(grid, classes, rows_per_pick);

  std::vector<Pick> picks;
  picks.reserve(votes.size());
  for (std::size_t i = 0; i < votes.size(); ++i) {
    Pick pick{to_classification(votes[i], palette.option_colors.size()), i * rows_per_pick};
    if (pick.cls.confidence < config.confidence_threshold) {
      result.diagnostics.push_back({std::nullopt, pick.row, DiagnosticIssue::AmbiguousColor,
                                    pick.cls.confidence,
                                    std::to_string(pick.cls.votes) + " of " +
                                        std::to_string(pick.cls.cells) + " cells agree"});
    }
    picks.push_back(pick);
  }

  auto is_data = [](const Pick& p) { return !p.cls.is_boundary(); };
  const auto first = std::find_if(picks.begin(), picks.end(), is_data);
  if (first == picks.end()) {
    result.diagnostics.push_back({std::nullopt, 0, DiagnosticIssue::BoundaryOnly, std::nullopt,
                                  "all " + std::to_string(picks.size()) +
                                      " picks are boundary color"});
    return result;
  }
  const auto last = std::find_if(picks.rbegin(), picks.rend(), is_data).base();
  if (first != picks.begin()) {
    result.diagnostics.push_back(
        {std::nullopt, 0, DiagnosticIssue::LeadingBoundary, std::nullopt,
         std::to_string(first - picks.begin()) + " boundary pick(s) before the first data pick"});
  }
  if (last != picks.end()) {
    result.diagnostics.push_back(
        {std::nullopt, last->row, DiagnosticIssue::TrailingBoundary, std::nullopt,
         std::to_string(picks.end() - last) + " boundary pick(s) after the last data pick"});
  }

  // Split [first, last) into data blocks at maximal boundary runs.
  std::size_t block = 0;
  auto it = first;
  while (it != last) {
    const auto block_end = std::find_if(it, last, [](const Pick& p) { return p.cls.is_boundary(); });
    ++block;
    decode_block(std::span<const Pick>(&*it, static_cast<std::size_t>(block_end - it)), block, q,
                 config, result);
    if (block_end == last) break;
    const auto run_end = std::find_if(block_end, last, is_data);
    const auto width = static_cast<std::size_t>(run_end - block_end);
    if (width != static_cast<std::size_t>(config.boundary_picks)) {
      result.diagnostics.push_back({block, block_end->row, DiagnosticIssue::BoundaryWidth,
                                    std::nullopt,
                                    "separator of " + std::to_string(width) + " pick(s), expected " +
                                        std::to_string(config.boundary_picks)});
    }
    it = run_end;
  }
  result.blocks = block;
  return result;
}

ColorGrid sample_grid(const Image& image, const GridGeometry& g, bool reference_kernels) {
  return reference_kernels ? reference::sample_grid(image, g) : parallel::sample_grid(image, g);
}

DecodeResult decode_image(const Image& image, const GridGeometry& g, const Questionnaire& q,
                          const Palette& palette, const DecodeConfig& config) {
  return decode_grid(sample_grid(image, g, config.reference_kernels), q, palette, config);
}

nlohmann::json diagnostics_to_json(const DecodeResult& result) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& d : result.diagnostics) {
    nlohmann::json item;
    if (d.block) item["block"] = *d.block;
    if (d.row) item["row"] = *d.row;
    item["issue"] = std::string(to_string(d.issue));
    if (d.confidence) item["confidence"] = *d.confidence;
    item["detail"] = d.detail;
    list.push_back(std::move(item));
  }
  return {{"diagnostics", list}};
}

GridGeometry parse_geometry(std::string_view text) {
  auto fail = [&] {
    throw Error(ErrorCode::InvalidArgument, "geometry must be \"rows,cols,ox,oy,cw,ch\", got \"" +
                                                std::string(text) + "\"");
  };
  std::vector<std::size_t> values;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    const auto field = rest.substr(0, comma);
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) fail();
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (values.size() != 6) fail();
  return {values[0], values[1], values[2], values[3], values[4], values[5]};
}

}  // namespace loom
