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

// Inner loops of the scroll decoder.
//
// Two implementations share these signatures: loom::reference is the plain
// serial version kept as the oracle for tests, loom::parallel splits cells and
// row blocks across OpenMP threads. Both must return identical results for
// identical inputs; test_kernels.cpp checks that on random inputs and
// bench_kernels compares their speed.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "loom/color.hpp"
#include "loom/draft.hpp"
#include "loom/ppm.hpp"

namespace loom {

// Position of a rectified grid inside an image, in pixels.
struct GridGeometry {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t origin_x = 0;
  std::size_t origin_y = 0;
  std::size_t cell_w = 0;
  std::size_t cell_h = 0;
};

// Throws Error(GeometryError) when the grid is empty, a cell has zero size, or
// the grid leaves the image.
void check_geometry(const Image& image, const GridGeometry& g);

// Half-open pixel range [begin, begin + length) of the centered inner 50%
// of a cell extent: length = max(1, ceil(extent / 2)).
struct InnerSpan {
  std::size_t begin = 0;
  std::size_t length = 0;
};
InnerSpan inner_span(std::size_t cell_start, std::size_t extent);

// Index of the nearest class color by squared distance; ties go to the lowest
// index. classes must be nonempty.
std::size_t nearest_class(Rgb color, std::span<const Rgb> classes);

// Majority vote over one block of cells.
struct BlockVote {
  std::size_t class_index = 0;
  std::size_t votes = 0;
  std::size_t cells = 0;

  friend bool operator==(const BlockVote&, const BlockVote&) = default;
};

namespace reference {

// Cell (i, j) is the per-channel lower median of the inner region.
ColorGrid sample_grid(const Image& image, const GridGeometry& g);

// One vote per consecutive run of rows_per_block grid rows. Each cell votes
// for its nearest class; the block takes the most voted class, lowest index
// on ties. grid.rows() must be a multiple of rows_per_block.
std::vector<BlockVote> classify_blocks(const ColorGrid& grid, std::span<const Rgb> classes,
                                       std::size_t rows_per_block);

}  // namespace reference

namespace parallel {

ColorGrid sample_grid(const Image& image, const GridGeometry& g);

std::vector<BlockVote> classify_blocks(const ColorGrid& grid, std::span<const Rgb> classes,
                                       std::size_t rows_per_block);

// Worker count the parallel kernels will use (1 without OpenMP).
int max_threads();

}  // namespace parallel

}  // namespace loom
