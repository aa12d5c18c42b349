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

#include <algorithm>

#include "kernels/shared.hpp"
#include "loom/errors.hpp"
#include "loom/kernels.hpp"

namespace loom {

void check_geometry(const Image& image, const GridGeometry& g) {
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::GeometryError,
                why + " (grid " + std::to_string(g.rows) + "x" + std::to_string(g.cols) +
                    " at " + std::to_string(g.origin_x) + "," + std::to_string(g.origin_y) +
                    " cell " + std::to_string(g.cell_w) + "x" + std::to_string(g.cell_h) +
                    ", image " + std::to_string(image.width()) + "x" +
                    std::to_string(image.height()) + ")");
  };
  if (g.rows == 0 || g.cols == 0) fail("grid must have at least one row and column");
  if (g.cell_w == 0 || g.cell_h == 0) fail("cell size must be positive");
  if (g.cols > (image.width() - std::min(image.width(), g.origin_x)) / g.cell_w ||
      g.origin_x > image.width()) {
    fail("grid exceeds image width");
  }
  if (g.rows > (image.height() - std::min(image.height(), g.origin_y)) / g.cell_h ||
      g.origin_y > image.height()) {
    fail("grid exceeds image height");
  }
}

InnerSpan inner_span(std::size_t cell_start, std::size_t extent) {
  const std::size_t length = std::max<std::size_t>(1, (extent + 1) / 2);
  return {cell_start + (extent - length) / 2, length};
}

std::size_t nearest_class(Rgb color, std::span<const Rgb> classes) {
  std::size_t best = 0;
  int best_d = squared_distance(color, classes[0]);
  for (std::size_t k = 1; k < classes.size(); ++k) {
    const int d = squared_distance(color, classes[k]);
    if (d < best_d) {
      best_d = d;
      best = k;
    }
  }
  return best;
}

namespace detail {

Rgb median_of_cell(const Image& image, const GridGeometry& g, std::size_t row, std::size_t col,
                   std::vector<std::uint8_t>& scratch) {
  const InnerSpan xs = inner_span(g.origin_x + col * g.cell_w, g.cell_w);
  const InnerSpan ys = inner_span(g.origin_y + row * g.cell_h, g.cell_h);
  const std::size_t n = xs.length * ys.length;
  const std::size_t mid = (n - 1) / 2;
  std::uint8_t channel[3];
  for (int c = 0; c < 3; ++c) {
    scratch.clear();
    for (std::size_t y = ys.begin; y < ys.begin + ys.length; ++y) {
      for (std::size_t x = xs.begin; x < xs.begin + xs.length; ++x) {
        const Rgb& p = image.at(x, y);
        scratch.push_back(c == 0 ? p.r : c == 1 ? p.g : p.b);
      }
    }
    std::nth_element(scratch.begin(), scratch.begin() + static_cast<std::ptrdiff_t>(mid),
                     scratch.end());
    channel[c] = scratch[mid];
  }
  return {channel[0], channel[1], channel[2]};
}

BlockVote vote_block(const ColorGrid& grid, std::span<const Rgb> classes, std::size_t first_row,
                     std::size_t rows, std::vector<std::size_t>& counts) {
  counts.assign(classes.size(), 0);
  for (std::size_t r = first_row; r < first_row + rows; ++r) {
    for (const Rgb& cell : grid.row(r)) ++counts[nearest_class(cell, classes)];
  }
  BlockVote vote;
  vote.cells = rows * grid.cols();
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (counts[k] > vote.votes) {
      vote.votes = counts[k];
      vote.class_index = k;
    }
  }
  return vote;
}

void check_blocks(const ColorGrid& grid, std::span<const Rgb> classes, std::size_t rows_per_block) {
  if (classes.empty()) throw Error(ErrorCode::InvalidArgument, "no classes to vote for");
  if (rows_per_block == 0 || grid.rows() % rows_per_block != 0) {
    throw Error(ErrorCode::ShapeError, std::to_string(grid.rows()) +
                                           " grid rows are not a multiple of " +
                                           std::to_string(rows_per_block));
  }
}

}  // namespace detail

namespace reference {

ColorGrid sample_grid(const Image& image, const GridGeometry& g) {
  check_geometry(image, g);
  ColorGrid grid(g.rows, g.cols);
  std::vector<std::uint8_t> scratch;
  for (std::size_t r = 0; r < g.rows; ++r) {
    for (std::size_t c = 0; c < g.cols; ++c) {
      grid.at(r, c) = detail::median_of_cell(image, g, r, c, scratch);
    }
  }
  return grid;
}

std::vector<BlockVote> classify_blocks(const ColorGrid& grid, std::span<const Rgb> classes,
                                       std::size_t rows_per_block) {
  detail::check_blocks(grid, classes, rows_per_block);
  std::vector<BlockVote> votes;
  std::vector<std::size_t> counts;
  for (std::size_t first = 0; first < grid.rows(); first += rows_per_block) {
    votes.push_back(detail::vote_block(grid, classes, first, rows_per_block, counts));
  }
  return votes;
}

}  // namespace reference

}  // namespace loom
