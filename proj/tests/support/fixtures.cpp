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

#include "fixtures.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

#include "loom/errors.hpp"

namespace loom::testing {

YarnColor crimson() { return {"Crimson", {220, 50, 47}}; }
YarnColor gold() { return {"Gold", {240, 200, 60}}; }
YarnColor azure() { return {"Azure", {38, 100, 200}}; }
YarnColor stone() { return {"Stone", {128, 128, 128}}; }

Questionnaire desk_questionnaire() {
  const std::vector<std::string> mood = {"calm", "restless", "tired"};
  return {"desk",
          "Desk check-in",
          {make_question("q1", "How do you feel today?", mood),
           make_question("q2", "How was your sleep?", {"good", "fair", "poor"}),
           make_question("q3", "How was the food?", {"good", "fair", "poor"})}};
}

Palette desk_palette() { return {{crimson(), gold(), azure()}, stone()}; }

std::vector<ParticipantRecord> desk_records() { return {{"A", {0, 1, 2}}, {"B", {2, 2, 0}}}; }

Questionnaire ward_questionnaire() {
  const std::vector<std::string> scale = {"never", "rarely", "sometimes", "often", "always"};
  Questionnaire q{"ward", "Ward questionnaire", {}};
  for (int i = 1; i <= 8; ++i) {
    q.questions.push_back(make_question("q" + std::to_string(i), "Question " + std::to_string(i), scale));
  }
  return q;
}

Palette ward_palette() {
  return {{{"Crimson", {220, 50, 47}},
           {"Gold", {240, 200, 60}},
           {"Azure", {38, 100, 200}},
           {"Forest", {30, 130, 60}},
           {"Plum", {120, 40, 140}}},
          {"Stone", {160, 160, 160}}};
}

std::vector<ParticipantRecord> ward_records(std::uint64_t seed) {
  Rng rng(seed);
  return random_records(rng, ward_questionnaire(), 28);
}

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Questionnaire random_questionnaire(Rng& rng, int questions, int max_options) {
  Questionnaire q{"rand", "Random questionnaire", {}};
  for (int i = 0; i < questions; ++i) {
    const int n = uniform(rng, 2, max_options);
    std::vector<std::string> labels;
    for (int k = 0; k < n; ++k) labels.push_back("o" + std::to_string(k));
    q.questions.push_back(make_question("q" + std::to_string(i + 1), "Prompt " + std::to_string(i + 1), labels));
  }
  return q;
}

Palette random_palette(Rng& rng, std::size_t options, double min_distance) {
  const int min_sq = static_cast<int>(std::ceil(min_distance * min_distance));
  for (;;) {
    std::vector<Rgb> colors;
    int attempts = 0;
    while (colors.size() < options + 1 && attempts < 10000) {
      ++attempts;
      const Rgb c{static_cast<std::uint8_t>(uniform(rng, 0, 255)),
                  static_cast<std::uint8_t>(uniform(rng, 0, 255)),
                  static_cast<std::uint8_t>(uniform(rng, 0, 255))};
      const bool far = std::all_of(colors.begin(), colors.end(),
                                   [&](Rgb o) { return squared_distance(c, o) >= min_sq; });
      if (far) colors.push_back(c);
    }
    if (colors.size() < options + 1) continue;
    Palette p;
    for (std::size_t k = 0; k < options; ++k) p.option_colors.push_back({"Y" + std::to_string(k), colors[k]});
    p.boundary = {"Boundary", colors[options]};
    return p;
  }
}

std::vector<ParticipantRecord> random_records(Rng& rng, const Questionnaire& q, int participants) {
  std::vector<ParticipantRecord> out;
  for (int p = 0; p < participants; ++p) {
    ParticipantRecord r{"p" + std::to_string(p + 1), {}};
    for (const auto& question : q.questions) {
      r.answers.push_back(uniform(rng, 0, static_cast<int>(question.options.size()) - 1));
    }
    out.push_back(std::move(r));
  }
  return out;
}

RandomSession random_session(Rng& rng, int max_p, int max_q, int max_options) {
  RandomSession s;
  s.questionnaire = random_questionnaire(rng, uniform(rng, 1, max_q), max_options);
  s.palette = random_palette(rng, s.questionnaire.max_option_count());
  s.records = random_records(rng, s.questionnaire, uniform(rng, 0, max_p));
  return s;
}

int noise_bound(const Palette& palette) {
  return static_cast<int>(std::floor(min_pairwise_distance(palette) / 2.0 / std::sqrt(3.0))) - 1;
}

ColorGrid perturb(const ColorGrid& grid, int e, Rng& rng) {
  ColorGrid out = grid;
  auto jitter = [&](std::uint8_t v) {
    return static_cast<std::uint8_t>(std::clamp(v + uniform(rng, -e, e), 0, 255));
  };
  for (std::size_t r = 0; r < out.rows(); ++r) {
    for (auto& c : out.row(r)) c = {jitter(c.r), jitter(c.g), jitter(c.b)};
  }
  return out;
}

std::vector<std::vector<int>> answers_of(const std::vector<ParticipantRecord>& records) {
  std::vector<std::vector<int>> out;
  for (const auto& r : records) out.push_back(r.answers);
  return out;
}

std::filesystem::path fixture_path(const std::string& name) {
  return std::filesystem::path(LOOM_FIXTURE_DIR) / name;
}

TempDir::TempDir(const std::string& prefix) {
  static std::atomic<unsigned> counter{0};
  std::random_device rd;
  for (;;) {
    auto candidate = std::filesystem::temp_directory_path() /
                     (prefix + "-" + std::to_string(rd()) + "-" + std::to_string(counter++));
    if (std::filesystem::create_directory(candidate)) {
      path_ = candidate;
      return;
    }
  }
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

}  // namespace loom::testing
