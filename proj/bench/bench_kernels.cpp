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

// Reference vs OpenMP decoder kernels on a synthetic chart image.

#include <random>

#include <benchmark/benchmark.h>

#include "loom/kernels.hpp"

namespace {

constexpr loom::Rgb kClasses[] = {{220, 50, 47}, {240, 200, 60}, {38, 100, 200}, {128, 128, 128}};

struct Fixture {
  loom::GridGeometry geometry;
  loom::Image image;
  loom::ColorGrid grid;
};

Fixture make_fixture(std::size_t rows, std::size_t cols, std::size_t cell_px) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(0, 3);
  std::uniform_int_distribution<int> noise(-20, 20);
  loom::ColorGrid grid(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const loom::Rgb c = kClasses[pick(rng)];
    for (std::size_t j = 0; j < cols; ++j) grid.at(r, j) = c;
  }
  loom::Image image(cols * cell_px, rows * cell_px);
  auto clamp = [](int v) { return static_cast<std::uint8_t>(v < 0 ? 0 : v > 255 ? 255 : v); };
  for (std::size_t y = 0; y < image.height(); ++y) {
    for (std::size_t x = 0; x < image.width(); ++x) {
      const auto c = grid.at(y / cell_px, x / cell_px);
      image.at(x, y) = {clamp(c.r + noise(rng)), clamp(c.g + noise(rng)), clamp(c.b + noise(rng))};
    }
  }
  return {{rows, cols, 0, 0, cell_px, cell_px}, std::move(image), std::move(grid)};
}

const Fixture& fixture() {
  static const Fixture f = make_fixture(512, 48, 12);
  return f;
}

void BM_SampleReference(benchmark::State& state) {
  const auto& f = fixture();
  for (auto _ : state) benchmark::DoNotOptimize(loom::reference::sample_grid(f.image, f.geometry));
}

void BM_SampleParallel(benchmark::State& state) {
  const auto& f = fixture();
  for (auto _ : state) benchmark::DoNotOptimize(loom::parallel::sample_grid(f.image, f.geometry));
}

void BM_ClassifyReference(benchmark::State& state) {
  const auto& f = fixture();
  for (auto _ : state) {
    benchmark::DoNotOptimize(loom::reference::classify_blocks(f.grid, kClasses, 2));
  }
}

void BM_ClassifyParallel(benchmark::State& state) {
  const auto& f = fixture();
  for (auto _ : state) {
    benchmark::DoNotOptimize(loom::parallel::classify_blocks(f.grid, kClasses, 2));
  }
  state.counters["threads"] = loom::parallel::max_threads();
}

}  // namespace

BENCHMARK(BM_SampleReference);
BENCHMARK(BM_SampleParallel);
BENCHMARK(BM_ClassifyReference);
BENCHMARK(BM_ClassifyParallel);

BENCHMARK_MAIN();
