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
#include "loom/ppm.hpp"

using namespace loom;
using namespace loom::testing;

namespace {

ErrorCode code_of(std::string_view bytes) {
  try {
    read_ppm(bytes);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("P3 and P6 round-trip") {
  Rng rng(3);
  Image image(7, 5);
  for (auto& p : image.pixels()) {
    p = {static_cast<std::uint8_t>(uniform(rng, 0, 255)), static_cast<std::uint8_t>(uniform(rng, 0, 255)),
         static_cast<std::uint8_t>(uniform(rng, 0, 255))};
  }
  CHECK(read_ppm(write_ppm(image, PpmFormat::Binary)) == image);
  CHECK(read_ppm(write_ppm(image, PpmFormat::Ascii)) == image);
  CHECK(write_ppm(image).rfind("P6\n7 5\n255\n", 0) == 0);
}

TEST_CASE("header comments and maxval rescaling") {
  const auto image = read_ppm("P3\n# made by hand\n2 1 # size\n15\n15 0 0   0 15 7\n");
  REQUIRE(image.width() == 2);
  CHECK(image.at(0, 0) == Rgb{255, 0, 0});
  CHECK(image.at(1, 0) == Rgb{0, 255, 119});
}

TEST_CASE("unreadable images") {
  CHECK(code_of("") == ErrorCode::UnreadableImage);
  CHECK(code_of("P5\n1 1\n255\n\x01") == ErrorCode::UnreadableImage);
  CHECK(code_of("P3\n1 1\n255\n1 2\n") == ErrorCode::UnreadableImage);
  CHECK(code_of("P3\n1 1\n255\n1 2 256\n") == ErrorCode::UnreadableImage);
  CHECK(code_of("P3\n1 1\n0\n0 0 0\n") == ErrorCode::UnreadableImage);
  CHECK(code_of("P3\n1 1\n65535\n0 0 0\n") == ErrorCode::UnreadableImage);
  CHECK(code_of("P6\n2 2\n255\nabc") == ErrorCode::UnreadableImage);
  CHECK(code_of("P3\n-1 1\n255\n") == ErrorCode::UnreadableImage);
  TempDir dir;
  CHECK_THROWS_AS(read_ppm_file(dir / "none.ppm"), Error);
}

TEST_CASE("rasterize") {
  ColorGrid grid(2, 3);
  grid.at(1, 2) = {9, 8, 7};
  const auto image = rasterize(grid, 4);
  CHECK(image.width() == 12);
  CHECK(image.height() == 8);
  CHECK(image.at(11, 7) == Rgb{9, 8, 7});
  CHECK(image.at(8, 4) == Rgb{9, 8, 7});
  CHECK(image.at(7, 4) == Rgb{0, 0, 0});
  CHECK_THROWS_AS(rasterize(grid, 0), Error);
}
