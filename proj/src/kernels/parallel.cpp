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

#include <cstdint>
#include <vector>

#ifdef LOOM_HAVE_OPENMP
#include <omp.h>
#define LOOM_OMP(directive) _Pragma(#directive)
#else
#define LOOM_OMP(directive)
#endif

#include "kernels/shared.hpp"
#include "loom/kernels.hpp"

namespace loom::parallel {

int max_threads() {
#ifdef LOOM_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

ColorGrid sample_grid(const Image& image, const GridGeometry& g) {
  check_geometry(image, g);
  ColorGrid grid(g.rows, g.cols);
  const auto cells = static_cast<std::int64_t>(g.rows * g.cols);

  LOOM_OMP(omp parallel)
  {
    std::vector<std::uint8_t> scratch;
    LOOM_OMP(omp for schedule(static))
    for (std::int64_t i = 0; i < cells; ++i) {
      const auto r = static_cast<std::size_t>(i) / g.cols;
      const auto c = static_cast<std::size_t>(i) % g.cols;
      grid.at(r, c) = detail::median_of_cell(image, g, r, c, scratch);
    }
  }
  return grid;
}

std::vector<BlockVote> classify_blocks(const ColorGrid& grid, std::span<const Rgb> classes,
                                       std::size_t rows_per_block) {
  detail::check_blocks(grid, classes, rows_per_block);
  const std::size_t block_count = grid.rows() / rows_per_block;
  std::vector<BlockVote> votes(block_count);
  const auto n = static_cast<std::int64_t>(block_count);

  LOOM_OMP(omp parallel)
  {
    std::vector<std::size_t> counts;
    LOOM_OMP(omp for schedule(static))
    for (std::int64_t b = 0; b < n; ++b) {
      const auto block = static_cast<std::size_t>(b);
      votes[block] =
          detail::vote_block(grid, classes, block * rows_per_block, rows_per_block, counts);
    }
  }
  return votes;
}

}  // namespace loom::parallel
