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

// WIF 1.1 (Weaving Information File) reader and writer, restricted to the
// subset needed for a two-shaft plain weave with per-pick weft colors.
//
// The text model is INI-like: `[SECTION]` headers, `key=value` lines, `;`
// comments and blank lines. Section and key lookups are case-insensitive;
// the emitter writes canonical upper-case section names.
//
// Pick roles (data vs boundary) have no WIF representation. Parsed picks are
// all UnknownPick; the session log is the authoritative record of roles.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "loom/draft.hpp"

namespace loom {

class WifDocument {
 public:
  struct Entry {
    std::string key;
    std::string value;
    std::size_t line = 0;
  };
  struct Section {
    std::string name;
    std::vector<Entry> entries;
    std::size_t line = 0;
  };

  // Throws Error(MalformedLine) for text outside a section, lines without
  // '=', empty keys, and duplicate sections or keys.
  static WifDocument parse(std::string_view text);

  const std::vector<Section>& sections() const { return sections_; }

  const Section* find(std::string_view name) const;
  // Throws Error(MissingSection) naming the section.
  const Section& require(std::string_view name) const;

  static const Entry* find_entry(const Section& section, std::string_view key);

  Section& add_section(std::string name);

 private:
  std::vector<Section> sections_;
};

struct WifMetadata {
  std::string source_program = "loom";
  std::string source_version = "1.0";
  std::string developers = "loom@localhost";
  // Written verbatim to the Date line; the codec never reads the clock.
  std::string date = "1970-01-01";
};

std::string emit_wif(const WeavingDraft& draft, const Palette& palette,
                     const WifMetadata& metadata = {});

struct ParsedWif {
  WeavingDraft draft;
  std::vector<Rgb> color_table;  // 0-based here, 1-based in the file
  YarnColor warp;
};

ParsedWif parse_wif(std::string_view text);

// Colors written to [COLOR TABLE]: option colors, boundary, warp, with exact
// RGB duplicates removed (first occurrence wins).
std::vector<Rgb> wif_color_table(const Palette& palette);

}  // namespace loom
