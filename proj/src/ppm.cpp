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

#include "loom/ppm.hpp"

#include <cctype>
#include <limits>

#include "loom/errors.hpp"
#include "loom/io.hpp"

namespace loom {

namespace {

[[noreturn]] void unreadable(const std::string& why) {
  throw Error(ErrorCode::UnreadableImage, "PPM: " + why);
}

class PnmScanner {
 public:
  explicit PnmScanner(std::string_view bytes) : bytes_(bytes) {}

  // Skips whitespace and comments, then reads an unsigned decimal.
  std::size_t number(const char* what) {
    skip_space();
    if (pos_ >= bytes_.size() || !std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
      unreadable(std::string("expected ") + what);
    }
    std::size_t v = 0;
    while (pos_ < bytes_.size() && std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
      const auto digit = static_cast<std::size_t>(bytes_[pos_] - '0');
      if (v > (std::numeric_limits<std::size_t>::max() - digit) / 10) unreadable("number overflow");
      v = v * 10 + digit;
      ++pos_;
    }
    return v;
  }

  // The single whitespace byte between the header and a binary raster.
  void header_terminator() {
    if (pos_ >= bytes_.size() || !std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
      unreadable("missing whitespace after header");
    }
    ++pos_;
  }

  std::string_view rest() const { return bytes_.substr(pos_); }

 private:
  void skip_space() {
    while (pos_ < bytes_.size()) {
      const char c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view bytes_;
  std::size_t pos_ = 0;
};

std::uint8_t rescale(std::size_t sample, std::size_t maxval) {
  if (sample > maxval) unreadable("sample exceeds maxval");
  if (maxval == 255) return static_cast<std::uint8_t>(sample);
  return static_cast<std::uint8_t>((sample * 255 + maxval / 2) / maxval);
}

}  // namespace

Image::Image(std::size_t width, std::size_t height, Rgb fill)
    : width_(width), height_(height), pixels_(width * height, fill) {}

Image read_ppm(std::string_view bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '3' && bytes[1] != '6')) {
    unreadable("not a P3/P6 file");
  }
  const bool binary = bytes[1] == '6';
  PnmScanner scan(bytes.substr(2));
  const std::size_t width = scan.number("width");
  const std::size_t height = scan.number("height");
  const std::size_t maxval = scan.number("maxval");
  if (maxval < 1 || maxval > 255) unreadable("maxval must be 1..255");
  if (width != 0 && height > std::numeric_limits<std::size_t>::max() / width / 3) {
    unreadable("image dimensions too large");
  }

  const std::size_t samples = width * height * 3;
  std::vector<std::uint8_t> data;
  data.reserve(samples);
  if (binary) {
    scan.header_terminator();
    const auto raster = scan.rest();
    if (raster.size() < samples) unreadable("truncated raster");
    for (std::size_t i = 0; i < samples; ++i) {
      data.push_back(rescale(static_cast<unsigned char>(raster[i]), maxval));
    }
  } else {
    for (std::size_t i = 0; i < samples; ++i) data.push_back(rescale(scan.number("sample"), maxval));
  }

  Image image(width, height);
  auto pixels = image.pixels();
  for (std::size_t i = 0; i < pixels.size(); ++i) {
    pixels[i] = {data[3 * i], data[3 * i + 1], data[3 * i + 2]};
  }
  return image;
}

Image read_ppm_file(const std::filesystem::path& path) {
  std::string bytes;
  try {
    bytes = read_text_file(path);
  } catch (const Error& e) {
    throw Error(ErrorCode::UnreadableImage, e.what());
  }
  return read_ppm(bytes);
}

std::string write_ppm(const Image& image, PpmFormat format) {
  std::string out = (format == PpmFormat::Binary ? "P6\n" : "P3\n") + std::to_string(image.width()) +
                    " " + std::to_string(image.height()) + "\n255\n";
  if (format == PpmFormat::Binary) {
    out.reserve(out.size() + image.pixels().size() * 3);
    for (const Rgb& p : image.pixels()) {
      out += static_cast<char>(p.r);
      out += static_cast<char>(p.g);
      out += static_cast<char>(p.b);
    }
  } else {
    std::size_t x = 0;
    for (const Rgb& p : image.pixels()) {
      out += std::to_string(p.r) + " " + std::to_string(p.g) + " " + std::to_string(p.b);
      out += (++x % image.width() == 0) ? '\n' : ' ';
    }
  }
  return out;
}

Image rasterize(const ColorGrid& grid, std::size_t cell_px) {
  if (cell_px == 0) throw Error(ErrorCode::InvalidArgument, "cell_px must be positive");
  Image image(grid.cols() * cell_px, grid.rows() * cell_px);
  for (std::size_t y = 0; y < image.height(); ++y) {
    for (std::size_t x = 0; x < image.width(); ++x) {
      image.at(x, y) = grid.at(y / cell_px, x / cell_px);
    }
  }
  return image;
}

}  // namespace loom
