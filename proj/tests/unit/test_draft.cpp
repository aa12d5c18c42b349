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

#include <regex>

#include "fixtures.hpp"
#include "loom/draft.hpp"

using namespace loom;
using namespace loom::testing;

namespace {

std::vector<std::string> names(const WeavingDraft& d) {
  std::vector<std::string> out;
  for (const auto& p : d.picks) out.push_back(p.color.name);
  return out;
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("encode_session desk example") {
  const auto records = desk_records();
  const auto d = encode_session(desk_questionnaire(), desk_palette(), records);
  CHECK(names(d) == std::vector<std::string>{"Crimson", "Gold", "Azure", "Stone", "Azure", "Azure", "Crimson"});
  CHECK(d.picks[3].is_boundary());
  CHECK(d.boundary_pick_count() == 1);
  CHECK(d.warp_ends == 24);
  CHECK(d.picks[4].role == PickRole{DataPick{1, 0}});
}

TEST_CASE("encode_session edge cases") {
  CHECK(encode_session(desk_questionnaire(), desk_palette(), {}).picks.empty());

  const auto ward = ward_records();
  const auto d = encode_session(ward_questionnaire(), ward_palette(), ward);
  CHECK(d.picks.size() == 251);
  CHECK(d.boundary_pick_count() == 27);

  try {
    encode_session(ward_questionnaire(), desk_palette(), ward);
    FAIL("expected PaletteTooSmall");
  } catch (const ValidationFailure& e) {
    CHECK(e.code() == ErrorCode::PaletteTooSmall);
  }
  const std::vector<ParticipantRecord> bad = {{"A", {0, 1, 9}}};
  try {
    encode_session(desk_questionnaire(), desk_palette(), bad);
    FAIL("expected ValidationFailure");
  } catch (const ValidationFailure& e) {
    CHECK(e.code() == ErrorCode::ValidationFailed);
    CHECK(std::holds_alternative<OptionOutOfRange>(e.errors().at(0)));
  }
  const auto records = desk_records();
  try {
    encode_session(desk_questionnaire(), desk_palette(), records, {0, 1, 1});
    FAIL("expected InvalidArgument");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidArgument);
  }
}

TEST_CASE("pick-count law, order preservation, determinism") {
  Rng rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    const int P = uniform(rng, 0, 100);
    const auto q = random_questionnaire(rng, uniform(rng, 1, 20), 6);
    const auto palette = random_palette(rng, q.max_option_count());
    const auto records = random_records(rng, q, P);
    const EncodeConfig config{uniform(rng, 1, 40), uniform(rng, 1, 3), uniform(rng, 1, 3)};
    const auto d = encode_session(q, palette, records, config);
    const std::size_t Q = q.question_count();
    const std::size_t expected = P * Q * config.picks_per_answer +
                                 (P > 0 ? P - 1 : 0) * static_cast<std::size_t>(config.boundary_picks);
    REQUIRE(d.picks.size() == expected);

    std::vector<std::pair<std::size_t, std::size_t>> order;
    for (const auto& pick : d.picks) {
      if (const auto* data = std::get_if<DataPick>(&pick.role)) {
        order.emplace_back(data->participant_index, data->question_index);
        CHECK(pick.color == palette.option_colors[records[data->participant_index].answers[data->question_index]]);
      } else {
        CHECK(pick.color == palette.boundary);
      }
    }
    std::size_t i = 0;
    for (std::size_t p = 0; p < static_cast<std::size_t>(P); ++p) {
      for (std::size_t k = 0; k < Q; ++k) {
        for (int rep = 0; rep < config.picks_per_answer; ++rep) {
          REQUIRE(order.at(i++) == std::make_pair(p, k));
        }
      }
    }
    CHECK(i == order.size());
    const auto again = encode_session(q, palette, records, config);
    CHECK(again.picks == d.picks);
  }
}

TEST_CASE("valid records always encode") {
  Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = random_session(rng);
    for (const auto& r : s.records) REQUIRE(validate_record(s.questionnaire, r).empty());
    CHECK_NOTHROW(encode_session(s.questionnaire, s.palette, s.records));
  }
}

TEST_CASE("encode_partial") {
  const std::vector<PartialRecord> none;
  CHECK(encode_partial(desk_palette(), none).picks.empty());

  const std::vector<PartialRecord> half = {{{0, 1, 2}}, {{2, std::nullopt, std::nullopt}}};
  CHECK(names(encode_partial(desk_palette(), half)) ==
        std::vector<std::string>{"Crimson", "Gold", "Azure", "Stone", "Azure"});

  const std::vector<PartialRecord> full = {{{0, 1, 2}}, {{2, 2, 0}}};
  const auto records = desk_records();
  CHECK(encode_partial(desk_palette(), full).picks ==
        encode_session(desk_questionnaire(), desk_palette(), records).picks);
}

TEST_CASE("render_chart") {
  const auto records = desk_records();
  const auto d = encode_session(desk_questionnaire(), desk_palette(), records);
  const auto chart = render_chart(d);
  REQUIRE(chart.rows() == 7);
  REQUIRE(chart.cols() == 24);
  for (std::size_t r = 0; r < 7; ++r) {
    for (const auto& c : chart.row(r)) CHECK(c == d.picks[r].color.rgb);
  }

  const auto tall = render_chart(d, {3});
  REQUIRE(tall.rows() == 21);
  for (std::size_t r = 0; r < 21; ++r) CHECK(tall.at(r, 5) == d.picks[r / 3].color.rgb);

  const auto empty = render_chart(encode_session(desk_questionnaire(), desk_palette(), {}));
  CHECK(empty.rows() == 0);
  CHECK(empty.cols() == 24);
}

TEST_CASE("chart rows follow picks") {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = random_session(rng);
    const auto d = encode_session(s.questionnaire, s.palette, s.records);
    const auto chart = render_chart(d);
    REQUIRE(chart.rows() == d.picks.size());
    for (std::size_t r = 0; r < chart.rows(); ++r) {
      for (const auto& c : chart.row(r)) REQUIRE(c == d.picks[r].color.rgb);
    }
  }
}

TEST_CASE("export_svg") {
  const auto one = export_svg(ColorGrid(1, 1, {255, 0, 0}), 10);
  CHECK(one.rfind("<?xml", 0) == 0);
  CHECK(one.find("width=\"10\" height=\"10\"") != std::string::npos);
  CHECK(count(one, "<rect") == 1);
  CHECK(one.find("fill=\"#ff0000\"") != std::string::npos);

  const auto none = export_svg(ColorGrid(0, 0), 10);
  CHECK(count(none, "<rect") == 0);
  CHECK(none.find("</svg>") != std::string::npos);

  const auto records = desk_records();
  const auto desk = export_svg(render_chart(encode_session(desk_questionnaire(), desk_palette(), records)), 10);
  CHECK(count(desk, "<rect") == 168);
  CHECK(std::regex_search(desk, std::regex(R"(viewBox="0 0 240 70")")));
}
