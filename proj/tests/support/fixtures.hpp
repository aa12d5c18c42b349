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

// Shared test inputs: the two-participant desk session, a 28 x 8 session and
// random session generators.

#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "loom/draft.hpp"
#include "loom/model.hpp"

namespace loom::testing {

using Rng = std::mt19937_64;

Questionnaire desk_questionnaire();
Palette desk_palette();
// A = [0,1,2], B = [2,2,0]
std::vector<ParticipantRecord> desk_records();

// 8 questions of 5 options each, 5-color palette.
Questionnaire ward_questionnaire();
Palette ward_palette();
std::vector<ParticipantRecord> ward_records(std::uint64_t seed = 28);

YarnColor crimson();
YarnColor gold();
YarnColor azure();
YarnColor stone();

struct RandomSession {
  Questionnaire questionnaire;
  Palette palette;
  std::vector<ParticipantRecord> records;
};

int uniform(Rng& rng, int lo, int hi);  // inclusive

Questionnaire random_questionnaire(Rng& rng, int questions, int max_options);
// Rejection-samples option colors and a boundary so that every pair is at
// least min_distance apart.
Palette random_palette(Rng& rng, std::size_t options, double min_distance = kDefaultMinDistance);
std::vector<ParticipantRecord> random_records(Rng& rng, const Questionnaire& q, int participants);

// P in [0,max_p], Q in [1,max_q], options per question in [2,max_options].
RandomSession random_session(Rng& rng, int max_p = 40, int max_q = 12, int max_options = 6);

// floor((dmin / 2) / sqrt(3)) - 1 for the palette's minimum pairwise distance.
int noise_bound(const Palette& palette);

// Adds an independent uniform integer in [-e, e] to every channel, clamped.
ColorGrid perturb(const ColorGrid& grid, int e, Rng& rng);

std::vector<std::vector<int>> answers_of(const std::vector<ParticipantRecord>& records);

std::filesystem::path fixture_path(const std::string& name);

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& prefix = "loom-test");
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

}  // namespace loom::testing
