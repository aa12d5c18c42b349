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

// Reads participant records back out of a readout chart or a rectified photo
// of a woven scroll.
//
// Pipeline: sample the image into a color grid (median of each cell's inner
// region), vote each pick's class against the palette (options, then the
// boundary), split the pick sequence at maximal boundary runs, and collapse
// each block's picks_per_answer runs into answers.
//
// Only a wrong grid shape is an error. Everything else a facilitator might
// hit on a real scroll (ambiguous colors, a participant with a missing or
// extra thread) is reported as a diagnostic and the remaining blocks still
// decode.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "loom/draft.hpp"
#include "loom/kernels.hpp"
#include "loom/model.hpp"
#include "loom/ppm.hpp"

namespace loom {

enum class RowKind { Option, Boundary };

struct RowClassification {
  RowKind kind = RowKind::Option;
  std::size_t option = 0;  // meaningful for RowKind::Option
  double confidence = 0.0;  // majority votes / cells
  std::size_t votes = 0;
  std::size_t cells = 0;

  bool is_boundary() const { return kind == RowKind::Boundary; }
};

// Option colors in index order followed by the boundary.
std::vector<Rgb> class_colors(const Palette& palette);

// Per-cell nearest class, majority vote, ties to the lowest class index with
// the boundary ordered last. Throws Error(ShapeError) on an empty row.
RowClassification classify_row(std::span<const Rgb> cells, const Palette& palette);

enum class DiagnosticIssue {
  AmbiguousColor,       // pick confidence below the threshold
  LeadingBoundary,      // boundary picks before the first data pick
  TrailingBoundary,     // boundary picks after the last data pick
  BoundaryOnly,         // nothing but boundary picks
  BoundaryWidth,        // separator run length differs from boundary_picks
  BlockLengthMismatch,  // block does not hold Q * picks_per_answer data picks
  RunDisagreement,      // picks of one answer run classify differently
  OptionOutOfRange,     // answer color not offered by that question
};

std::string_view to_string(DiagnosticIssue issue);

// Whether a diagnostic of this kind means its block produced no record.
bool fails_block(DiagnosticIssue issue);

struct Diagnostic {
  std::optional<std::size_t> block;  // 1-based participant block
  std::optional<std::size_t> row;    // 0-based grid row
  DiagnosticIssue issue = DiagnosticIssue::AmbiguousColor;
  std::optional<double> confidence;
  std::string detail;
};

struct DecodeConfig {
  int rows_per_pick = 1;
  int picks_per_answer = 1;
  int boundary_picks = 1;
  double confidence_threshold = 0.6;
  bool reference_kernels = false;  // serial oracle instead of the OpenMP path
};

struct DecodeResult {
  // Ids are "p<block>", so a failed block leaves a gap in the numbering.
  std::vector<ParticipantRecord> records;
  std::vector<Diagnostic> diagnostics;
  std::size_t blocks = 0;

  bool any_block_failed() const;
  std::size_t count(DiagnosticIssue issue) const;
};

// Throws Error(ShapeError) when rows are not a multiple of rows_per_pick or
// the grid has rows but no columns; Error(InvalidArgument) for non-positive
// config values.
DecodeResult decode_grid(const ColorGrid& grid, const Questionnaire& q, const Palette& palette,
                         const DecodeConfig& config = {});

ColorGrid sample_grid(const Image& image, const GridGeometry& g, bool reference_kernels = false);

DecodeResult decode_image(const Image& image, const GridGeometry& g, const Questionnaire& q,
                          const Palette& palette, const DecodeConfig& config = {});

// {diagnostics:[{block?, row?, issue, confidence?, detail}]}
nlohmann::json diagnostics_to_json(const DecodeResult& result);

// "rows,cols,origin_x,origin_y,cell_w,cell_h"; throws Error(InvalidArgument).
GridGeometry parse_geometry(std::string_view text);

}  // namespace loom
