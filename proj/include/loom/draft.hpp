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

// Weaving drafts: the weft pick sequence produced from participant answers,
// and its row-per-pick readout chart.
//
// A session of P participants and Q questions weaves
//
//     P * Q * picks_per_answer + max(P - 1, 0) * boundary_picks
//
// picks, participant by participant and question by question, with a
// boundary run between consecutive participants only. The warp is a plain
// weave on two shafts.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "loom/color.hpp"
#include "loom/model.hpp"

namespace loom {

struct DataPick {
  std::size_t participant_index = 0;
  std::size_t question_index = 0;

  friend bool operator==(const DataPick&, const DataPick&) = default;
};
struct BoundaryPick {
  friend bool operator==(const BoundaryPick&, const BoundaryPick&) = default;
};
// Role lost in transit (picks parsed back from WIF).
struct UnknownPick {
  friend bool operator==(const UnknownPick&, const UnknownPick&) = default;
};

using PickRole = std::variant<DataPick, BoundaryPick, UnknownPick>;

struct WeftPick {
  YarnColor color;
  PickRole role;

  bool is_boundary() const { return std::holds_alternative<BoundaryPick>(role); }

  friend bool operator==(const WeftPick&, const WeftPick&) = default;
};

struct EncodeConfig {
  int warp_ends = 24;
  int picks_per_answer = 1;
  int boundary_picks = 1;
};

struct WeavingDraft {
  int warp_ends = 24;
  YarnColor warp_color = default_warp_color();
  std::vector<WeftPick> picks;
  int picks_per_answer = 1;
  int boundary_picks = 1;

  std::size_t boundary_pick_count() const;
};

// Throws ValidationFailure if the questionnaire, palette or any record is
// invalid, or if the palette has fewer option colors than the widest question
// (code PaletteTooSmall). Throws loom::Error
// (InvalidArgument) on a non-positive config value.
WeavingDraft encode_session(const Questionnaire& q, const Palette& palette,
                            std::span<const ParticipantRecord> records,
                            const EncodeConfig& config = {},
                            double min_distance = kDefaultMinDistance);

// A participant whose answers may be incomplete. Only answered questions are
// woven, in question order.
struct PartialRecord {
  std::vector<std::optional<int>> answers;

  bool complete() const;
};

// Encodes what has been woven so far in a live session: every answered
// question, plus a boundary after each fully answered participant that is
// not the last one. Inputs are assumed already validated.
WeavingDraft encode_partial(const Palette& palette, std::span<const PartialRecord> participants,
                            const EncodeConfig& config = {});

// Row-major grid of RGB cells.
class ColorGrid {
 public:
  ColorGrid() = default;
  ColorGrid(std::size_t rows, std::size_t cols, Rgb fill = {});

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rgb& at(std::size_t row, std::size_t col) { return cells_[row * cols_ + col]; }
  const Rgb& at(std::size_t row, std::size_t col) const { return cells_[row * cols_ + col]; }

  std::span<Rgb> row(std::size_t r) { return {cells_.data() + r * cols_, cols_}; }
  std::span<const Rgb> row(std::size_t r) const { return {cells_.data() + r * cols_, cols_}; }

  std::span<const Rgb> cells() const { return cells_; }

  friend bool operator==(const ColorGrid&, const ColorGrid&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rgb> cells_;
};

struct ChartConfig {
  int rows_per_pick = 1;
};

// Readout chart: each pick becomes rows_per_pick rows of its weft color
// across the full warp width.
ColorGrid render_chart(const WeavingDraft& draft, const ChartConfig& config = {});

// SVG 1.1 document with one filled rect per cell.
std::string export_svg(const ColorGrid& grid, int cell_px);

}  // namespace loom
