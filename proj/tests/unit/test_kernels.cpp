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

#include <doctest.h>

#include "fixtures.hpp"
#include "loom/errors.hpp"
#include "loom/kernels.hpp"

using namespace loom;
using namespace loom::testing;

namespace {

Rgb random_rgb(Rng& rng) {
  return {static_cast<std::uint8_t>(uniform(rng, 0, 255)), static_cast<std::uint8_t>(uniform(rng, 0, 255)),
          static_cast<std::uint8_t>(uniform(rng, 0, 255))};
}

}  // namespace

TEST_CASE("inner_span") {
  auto s = inner_span(0, 10);
  CHECK(s.begin == 2);
  CHECK(s.length == 5);
  s = inner_span(30, 1);
  CHECK(s.begin == 30);
  CHECK(s.length == 1);
  s = inner_span(5, 3);
  CHECK(s.begin == 5);
  CHECK(s.length == 2);
  s = inner_span(0, 7);
  CHECK(s.begin == 1);
  CHECK(s.length == 4);
}

TEST_CASE("nearest_class tie goes to the lower index") {
  const std::vector<Rgb> classes = {{200, 0, 0}, {0, 0, 200}};
  CHECK(nearest_class({100, 0, 100}, classes) == 0);
  CHECK(nearest_class({101, 0, 100}, classes) == 0);
  CHECK(nearest_class({99, 0, 100}, classes) == 1);
  const std::vector<Rgb> swapped = {{0, 0, 200}, {200, 0, 0}};
  CHECK(nearest_class({100, 0, 100}, swapped) == 0);
}

TEST_CASE("uniform image samples to its color") {
  const Image image(60, 40, {10, 20, 30});
  const GridGeometry g{3, 5, 5, 4, 10, 12};
  for (const auto& grid : {reference::sample_grid(image, g), parallel::sample_grid(image, g)}) {
    REQUIRE(grid.rows() == 3);
    REQUIRE(grid.cols() == 5);
    for (const auto& c : grid.cells()) CHECK(c == Rgb{10, 20, 30});
  }
}

TEST_CASE("outer-margin speckle does not reach the sample") {
  Rng rng(17);
  const std::size_t rows = 6, cols = 8, w = 12, h = 10;
  ColorGrid painted(rows, cols);
  Image image(cols * w, rows * h);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      painted.at(r, c) = random_rgb(rng);
      const auto sx = inner_span(c * w, w);
      const auto sy = inner_span(r * h, h);
      for (std::size_t y = r * h; y < (r + 1) * h; ++y) {
        for (std::size_t x = c * w; x < (c + 1) * w; ++x) {
          const bool inner = x >= sx.begin && x < sx.begin + sx.length && y >= sy.begin &&
                             y < sy.begin + sy.length;
          image.at(x, y) = inner ? painted.at(r, c) : random_rgb(rng);
        }
      }
    }
  }
  const GridGeometry g{rows, cols, 0, 0, w, h};
  CHECK(reference::sample_grid(image, g) == painted);
  CHECK(parallel::sample_grid(image, g) == painted);
}

TEST_CASE("lower median of an even inner region") {
  // 2x2 cell: inner region is 1x1 at its top-left; 4x4 cell: inner 2x2.
  Image image(4, 4, {0, 0, 0});
  image.at(1, 1) = {10, 200, 5};
  image.at(2, 1) = {20, 100, 6};
  image.at(1, 2) = {30, 50, 7};
  image.at(2, 2) = {40, 25, 8};
  const auto grid = reference::sample_grid(image, {1, 1, 0, 0, 4, 4});
  CHECK(grid.at(0, 0) == Rgb{20, 50, 6});
  CHECK(parallel::sample_grid(image, {1, 1, 0, 0, 4, 4}) == grid);
}

TEST_CASE("check_geometry") {
  const Image image(40, 30);
  CHECK_NOTHROW(check_geometry(image, {3, 4, 0, 0, 10, 10}));
  for (const GridGeometry& bad : {GridGeometry{4, 4, 0, 0, 10, 10}, GridGeometry{3, 4, 1, 0, 10, 10},
                                  GridGeometry{0, 4, 0, 0, 10, 10}, GridGeometry{3, 4, 0, 0, 0, 10},
                                  GridGeometry{3, 0, 0, 0, 10, 10}}) {
    try {
      check_geometry(image, bad);
      FAIL("expected GeometryError");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::GeometryError);
    }
  }
  CHECK_THROWS_AS(reference::sample_grid(image, {4, 4, 0, 0, 10, 10}), Error);
  CHECK_THROWS_AS(parallel::sample_grid(image, {4, 4, 0, 0, 10, 10}), Error);
}

TEST_CASE("parallel kernels match the reference") {
  Rng rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = uniform(rng, 1, 30), cols = uniform(rng, 1, 20);
    const std::size_t w = uniform(rng, 1, 9), h = uniform(rng, 1, 9);
    const std::size_t ox = uniform(rng, 0, 5), oy = uniform(rng, 0, 5);
    Image image(ox + cols * w + uniform(rng, 0, 4), oy + rows * h + uniform(rng, 0, 4));
    for (auto& p : image.pixels()) p = random_rgb(rng);
    const GridGeometry g{rows, cols, ox, oy, w, h};
    const auto grid = reference::sample_grid(image, g);
    REQUIRE(parallel::sample_grid(image, g) == grid);

    std::vector<Rgb> classes(uniform(rng, 1, 7));
    for (auto& c : classes) c = random_rgb(rng);
    for (std::size_t per = 1; per <= rows; ++per) {
      if (rows % per != 0) continue;
      REQUIRE(parallel::classify_blocks(grid, classes, per) ==
              reference::classify_blocks(grid, classes, per));
    }
  }
  CHECK(parallel::max_threads() >= 1);
}

TEST_CASE("classify_blocks votes") {
  const std::vector<Rgb> classes = {{255, 0, 0}, {0, 255, 0}, {0, 0, 255}};
  ColorGrid grid(2, 3, {250, 0, 0});
  grid.at(0, 0) = {0, 250, 0};
  grid.at(1, 0) = {0, 250, 0};
  grid.at(1, 1) = {0, 250, 0};
  auto votes = reference::classify_blocks(grid, classes, 1);
  REQUIRE(votes.size() == 2);
  CHECK(votes[0] == BlockVote{0, 2, 3});
  CHECK(votes[1] == BlockVote{1, 2, 3});
  // 3 red, 3 green over both rows: tie goes to red.
  votes = reference::classify_blocks(grid, classes, 2);
  REQUIRE(votes.size() == 1);
  CHECK(votes[0] == BlockVote{0, 3, 6});

  CHECK_THROWS_AS(reference::classify_blocks(grid, classes, 4), Error);
  CHECK_THROWS_AS(reference::classify_blocks(grid, {}, 1), Error);
  CHECK_THROWS_AS(parallel::classify_blocks(grid, classes, 0), Error);
}
