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

#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "loom/color.hpp"
#include "loom/draft.hpp"

namespace loom {

class Image {
 public:
  Image() = default;
  Image(std::size_t width, std::size_t height, Rgb fill = {});

  std::size_t width() const { return width_; }
  std::size_t height() const { return height_; }

  Rgb& at(std::size_t x, std::size_t y) { return pixels_[y * width_ + x]; }
  const Rgb& at(std::size_t x, std::size_t y) const { return pixels_[y * width_ + x]; }

  std::span<Rgb> pixels() { return pixels_; }
  std::span<const Rgb> pixels() const { return pixels_; }

  friend bool operator==(const Image&, const Image&) = default;

 private:
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<Rgb> pixels_;
};

enum class PpmFormat { Ascii /* P3 */, Binary /* P6 */ };

// Reads P3 or P6 with maxval 1..255; samples below 255 are rescaled to 0..255.
// Header comments ('#' to end of line) are skipped. Throws
// Error(UnreadableImage) on anything else.
Image read_ppm(std::string_view bytes);
Image read_ppm_file(const std::filesystem::path& path);

std::string write_ppm(const Image& image, PpmFormat format = PpmFormat::Binary);

// Scales each grid cell to a cell_px by cell_px block. Throws
// Error(InvalidArgument) when cell_px is 0.
Image rasterize(const ColorGrid& grid, std::size_t cell_px);

}  // namespace loom
