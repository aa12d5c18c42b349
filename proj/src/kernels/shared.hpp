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

// Per-cell and per-block bodies shared by the serial and OpenMP kernels, so
// the two differ only in how the loops are scheduled.

#pragma once

#include <cstdint>
#include <vector>

#include "loom/kernels.hpp"

namespace loom::detail {

Rgb median_of_cell(const Image& image, const GridGeometry& g, std::size_t row, std::size_t col,
                   std::vector<std::uint8_t>& scratch);

BlockVote vote_block(const ColorGrid& grid, std::span<const Rgb> classes, std::size_t first_row,
                     std::size_t rows, std::vector<std::size_t>& counts);

void check_blocks(const ColorGrid& grid, std::span<const Rgb> classes, std::size_t rows_per_block);

}  // namespace loom::detail
