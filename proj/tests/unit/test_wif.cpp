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

#include <sstream>

#include "fixtures.hpp"
#include "loom/wif.hpp"

using namespace loom;
using namespace loom::testing;

namespace {

WeavingDraft desk_draft() {
  const auto records = desk_records();
  return encode_session(desk_questionnaire(), desk_palette(), records);
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<Rgb> colors(const WeavingDraft& d) {
  std::vector<Rgb> out;
  for (const auto& p : d.picks) out.push_back(p.color.rgb);
  return out;
}

ErrorCode code_of(const std::string& text) {
  try {
    parse_wif(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::ParseError;
}

std::string remove_line(const std::string& text, const std::string& line) {
  const auto pos = text.find("\n" + line + "\n");
  REQUIRE(pos != std::string::npos);
  return text.substr(0, pos + 1) + text.substr(pos + line.size() + 2);
}

std::string replace(std::string text, const std::string& from, const std::string& to) {
  const auto pos = text.find(from);
  REQUIRE(pos != std::string::npos);
  return text.replace(pos, from.size(), to);
}

const std::vector<std::string> kRequiredOrder = {"WIF",  "COLOR TABLE", "WARP",  "WEFT",
                                                 "WEFT COLORS", "THREADING", "TIEUP", "TREADLING"};

}  // namespace

TEST_CASE("emit desk draft") {
  const auto text = emit_wif(desk_draft(), desk_palette());
  const auto lines = lines_of(text);
  REQUIRE(lines.size() > 2);
  CHECK(lines[0] == "[WIF]");
  CHECK(lines[1] == "Version=1.1");

  const auto doc = WifDocument::parse(text);
  CHECK(WifDocument::find_entry(doc.require("COLOR PALETTE"), "Entries")->value == "5");
  CHECK(doc.require("COLOR TABLE").entries.size() == 5);
  CHECK(WifDocument::find_entry(doc.require("WEFT"), "Threads")->value == "7");
  CHECK(text.find("\r") == std::string::npos);

  const auto& threading = doc.require("THREADING").entries;
  REQUIRE(threading.size() == 24);
  for (std::size_t i = 0; i < 24; ++i) {
    CHECK(threading[i].key == std::to_string(i + 1));
    CHECK(threading[i].value == (i % 2 == 0 ? "1" : "2"));
  }
  CHECK(wif_color_table(desk_palette()).size() == 5);
}

TEST_CASE("emit is deterministic apart from the date") {
  WifMetadata meta;
  meta.date = "2026-10-16";
  const auto a = emit_wif(desk_draft(), desk_palette(), meta);
  CHECK(a == emit_wif(desk_draft(), desk_palette(), meta));
  CHECK(a.find("Date=2026-10-16\n") != std::string::npos);
  CHECK(replace(a, "Date=2026-10-16", "Date=1970-01-01") == emit_wif(desk_draft(), desk_palette()));
}

TEST_CASE("parse(emit(desk))") {
  const auto parsed = parse_wif(emit_wif(desk_draft(), desk_palette()));
  CHECK(parsed.draft.warp_ends == 24);
  CHECK(colors(parsed.draft) == colors(desk_draft()));
  CHECK(parsed.warp.rgb == default_warp_color().rgb);
  CHECK(std::holds_alternative<UnknownPick>(parsed.draft.picks[0].role));
}

TEST_CASE("random drafts round-trip") {
  Rng rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = random_session(rng);
    const EncodeConfig config{uniform(rng, 1, 60), 1, 1};
    const auto d = encode_session(s.questionnaire, s.palette, s.records, config);
    const auto text = emit_wif(d, s.palette);
    const auto parsed = parse_wif(text);
    REQUIRE(parsed.draft.warp_ends == d.warp_ends);
    REQUIRE(colors(parsed.draft) == colors(d));

    std::size_t next = 0;
    const auto doc = WifDocument::parse(text);
    for (const auto& section : doc.sections()) {
      if (next < kRequiredOrder.size() && section.name == kRequiredOrder[next]) ++next;
    }
    CHECK(next == kRequiredOrder.size());
  }
}

TEST_CASE("parser grammar") {
  auto text = emit_wif(desk_draft(), desk_palette());
  SUBCASE("comments, blank lines, CRLF and case") {
    std::string messy = "; exported\r\n";
    for (const auto& line : lines_of(text)) {
      std::string l = line;
      if (l == "[WEFT]") l = "[weft]";
      if (l.rfind("Threads=", 0) == 0) l = "threads = " + l.substr(8);
      messy += l + "\r\n\r\n; note\r\n";
    }
    CHECK(colors(parse_wif(messy).draft) == colors(desk_draft()));
  }
  SUBCASE("missing WEFT") {
    const auto start = text.find("[WEFT]\n");
    const auto end = text.find("\n\n", start);
    const auto cut = text.substr(0, start) + text.substr(end + 2);
    try {
      parse_wif(cut);
      FAIL("expected MissingSection");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::MissingSection);
      CHECK(std::string(e.what()).find("WEFT") != std::string::npos);
    }
  }
  SUBCASE("Threads=7 with 6 WEFT COLORS lines") {
    CHECK(code_of(remove_line(text, "7=1")) == ErrorCode::InconsistentCount);
  }
  SUBCASE("color index outside the table") {
    CHECK(code_of(replace(text, "\n1=1\n2=2\n3=3\n4=4", "\n1=9\n2=2\n3=3\n4=4")) ==
          ErrorCode::ColorIndexOutOfRange);
  }
  SUBCASE("structure beyond plain weave") {
    CHECK(code_of(replace(text, "[TIEUP]\n1=1\n2=2", "[TIEUP]\n1=1\n2=1")) ==
          ErrorCode::UnsupportedStructure);
  }
  SUBCASE("malformed lines") {
    CHECK(code_of("stray\n" + text) == ErrorCode::MalformedLine);
    CHECK(code_of(replace(text, "Version=1.1", "Version 1.1")) == ErrorCode::MalformedLine);
    CHECK(code_of(replace(text, "[WARP]", "[WARP")) == ErrorCode::MalformedLine);
  }
  SUBCASE("CONTENTS booleans") {
    auto alt = replace(text, "COLOR TABLE=yes", "COLOR TABLE=On");
    alt = replace(alt, "WARP=yes", "WARP=true");
    alt = replace(alt, "WEFT=yes", "WEFT=1");
    CHECK(colors(parse_wif(alt).draft) == colors(desk_draft()));
    CHECK_THROWS_AS(parse_wif(replace(text, "TIEUP=yes", "TIEUP=maybe")), Error);
  }
  SUBCASE("Range scaling") {
    auto scaled = replace(text, "Range=0,255", "Range=0,65535");
    scaled = replace(scaled, "1=220,50,47", "1=56540,12850,12079");
    CHECK(parse_wif(scaled).color_table[0] == Rgb{220, 50, 47});
  }
}
