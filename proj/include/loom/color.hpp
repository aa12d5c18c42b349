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

#include <cstdint>
#include <string>

namespace loom {

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  friend constexpr bool operator==(const Rgb&, const Rgb&) = default;
};

// Exact integer distance; all comparisons are done on this value.
constexpr int squared_distance(Rgb a, Rgb b) {
  const int dr = int{a.r} - int{b.r};
  const int dg = int{a.g} - int{b.g};
  const int db = int{a.b} - int{b.b};
  return dr * dr + dg * dg + db * db;
}

double distance(Rgb a, Rgb b);

// "#rrggbb", lowercase.
std::string to_hex(Rgb c);

// A named yarn roll.
struct YarnColor {
  std::string name;
  Rgb rgb;

  friend bool operator==(const YarnColor&, const YarnColor&) = default;
};

}  // namespace loom
