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

#include "loom/wif.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <map>

namespace loom {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::toupper(static_cast<unsigned char>(x)) ==
                  std::toupper(static_cast<unsigned char>(y));
         });
}

[[noreturn]] void malformed(std::size_t line, const std::string& why) {
  throw Error(ErrorCode::MalformedLine, "line " + std::to_string(line) + ": " + why);
}

std::optional<long> to_long(std::string_view s) {
  s = trim(s);
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

long entry_int(const WifDocument::Entry& e) {
  auto v = to_long(e.value);
  if (!v) malformed(e.line, "\"" + e.value + "\" is not an integer");
  return *v;
}

long key_int(const WifDocument::Entry& e) {
  auto v = to_long(e.key);
  if (!v || *v < 1) malformed(e.line, "\"" + e.key + "\" is not a positive integer key");
  return *v;
}

std::vector<long> int_list(const WifDocument::Entry& e) {
  std::vector<long> out;
  std::string_view rest = e.value;
  while (true) {
    const auto comma = rest.find(',');
    auto v = to_long(rest.substr(0, comma));
    if (!v) malformed(e.line, "\"" + e.value + "\" is not a list of integers");
    out.push_back(*v);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

bool parse_bool(std::string_view raw) {
  static constexpr std::array<std::string_view, 4> kTrue = {"yes", "true", "on", "1"};
  static constexpr std::array<std::string_view, 4> kFalse = {"no", "false", "off", "0"};
  const auto v = trim(raw);
  for (auto t : kTrue) {
    if (iequals(v, t)) return true;
  }
  for (auto f : kFalse) {
    if (iequals(v, f)) return false;
  }
  throw Error(ErrorCode::MalformedLine, "\"" + std::string(raw) + "\" is not a boolean");
}

// Keyed section of the form 1=..., 2=..., ...; returns values indexed from
// key 1. Throws InconsistentCount unless the keys are exactly 1..expected.
std::vector<const WifDocument::Entry*> indexed_entries(const WifDocument::Section& section,
                                                       std::size_t expected) {
  std::vector<const WifDocument::Entry*> by_index(expected, nullptr);
  for (const auto& e : section.entries) {
    const long k = key_int(e);
    if (static_cast<std::size_t>(k) > expected) {
      throw Error(ErrorCode::InconsistentCount,
                  "[" + section.name + "] has entry " + std::to_string(k) + " but only " +
                      std::to_string(expected) + " expected");
    }
    by_index[static_cast<std::size_t>(k) - 1] = &e;
  }
  if (section.entries.size() != expected) {
    throw Error(ErrorCode::InconsistentCount,
                "[" + section.name + "] has " + std::to_string(section.entries.size()) +
                    " entries, expected " + std::to_string(expected));
  }
  return by_index;
}

void unsupported(const std::string& why) {
  throw Error(ErrorCode::UnsupportedStructure, why + " (only 2-shaft plain weave is supported)");
}

// Each entry must be a single value in {1, 2}, alternating between neighbours.
void check_alternating(const WifDocument::Section& section,
                       const std::vector<const WifDocument::Entry*>& entries) {
  long previous = 0;
  for (const auto* e : entries) {
    const auto values = int_list(*e);
    if (values.size() != 1 || (values[0] != 1 && values[0] != 2)) {
      unsupported("[" + section.name + "] entry " + e->key + "=" + e->value);
    }
    if (values[0] == previous) {
      unsupported("[" + section.name + "] entry " + e->key + " repeats its neighbour");
    }
    previous = values[0];
  }
}

long positive_threads(const WifDocument::Section& section) {
  const auto* e = WifDocument::find_entry(section, "Threads");
  if (!e) throw Error(ErrorCode::MissingSection, "[" + section.name + "] lacks Threads");
  const long n = entry_int(*e);
  if (n < 0) malformed(e->line, "Threads must be non-negative");
  return n;
}

}  // namespace

WifDocument WifDocument::parse(std::string_view text) {
  WifDocument doc;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.remove_prefix(3);

    line = trim(line);
    if (line.empty() || line.front() == ';') {
      if (end == text.size()) break;
      continue;
    }
    if (line.front() == '[') {
      if (line.back() != ']') malformed(line_no, "unterminated section header");
      std::string name(trim(line.substr(1, line.size() - 2)));
      if (name.empty()) malformed(line_no, "empty section name");
      if (doc.find(name)) malformed(line_no, "duplicate section [" + name + "]");
      doc.add_section(std::move(name)).line = line_no;
    } else {
      if (doc.sections_.empty()) malformed(line_no, "entry outside of any section");
      const auto eq = line.find('=');
      if (eq == std::string_view::npos) malformed(line_no, "expected key=value");
      std::string key(trim(line.substr(0, eq)));
      if (key.empty()) malformed(line_no, "empty key");
      auto& section = doc.sections_.back();
      if (find_entry(section, key)) {
        malformed(line_no, "duplicate key \"" + key + "\" in [" + section.name + "]");
      }
      section.entries.push_back({std::move(key), std::string(trim(line.substr(eq + 1))), line_no});
    }
    if (end == text.size()) break;
  }
  return doc;
}

const WifDocument::Section* WifDocument::find(std::string_view name) const {
  for (const auto& s : sections_) {
    if (iequals(s.name, name)) return &s;
  }
  return nullptr;
}

const WifDocument::Section& WifDocument::require(std::string_view name) const {
  if (const auto* s = find(name)) return *s;
  throw Error(ErrorCode::MissingSection, std::string(name));
}

const WifDocument::Entry* WifDocument::find_entry(const Section& section, std::string_view key) {
  for (const auto& e : section.entries) {
    if (iequals(e.key, key)) return &e;
  }
  return nullptr;
}

WifDocument::Section& WifDocument::add_section(std::string name) {
  sections_.push_back({std::move(name), {}, 0});
  return sections_.back();
}

std::vector<Rgb> wif_color_table(const Palette& palette) {
  std::vector<Rgb> table;
  auto add = [&](Rgb c) {
    if (std::find(table.begin(), table.end(), c) == table.end()) table.push_back(c);
  };
  for (const auto& c : palette.option_colors) add(c.rgb);
  add(palette.boundary.rgb);
  add(palette.warp.rgb);
  return table;
}

std::string emit_wif(const WeavingDraft& draft, const Palette& palette,
                     const WifMetadata& metadata) {
  std::vector<Rgb> table = wif_color_table(palette);
  // Drafts normally only use palette colors; anything else is appended.
  auto index_of = [&](Rgb c) {
    auto it = std::find(table.begin(), table.end(), c);
    if (it == table.end()) {
      table.push_back(c);
      return table.size();
    }
    return static_cast<std::size_t>(it - table.begin()) + 1;
  };
  const std::size_t warp_index = index_of(draft.warp_color.rgb);
  std::vector<std::size_t> weft_indices;
  weft_indices.reserve(draft.picks.size());
  for (const auto& pick : draft.picks) weft_indices.push_back(index_of(pick.color.rgb));

  std::string out;
  auto line = [&out](const std::string& s) {
    out += s;
    out += '\n';
  };
  auto kv = [&line](const std::string& k, const std::string& v) { line(k + "=" + v); };

  line("[WIF]");
  kv("Version", "1.1");
  kv("Date", metadata.date);
  kv("Developers", metadata.developers);
  kv("Source Program", metadata.source_program);
  kv("Source Version", metadata.source_version);
  line("");

  static constexpr std::array<const char*, 9> kSections = {
      "COLOR PALETTE", "COLOR TABLE", "WEAVING", "WARP",     "WEFT",
      "WEFT COLORS",   "THREADING",   "TIEUP",   "TREADLING"};
  line("[CONTENTS]");
  for (const char* s : kSections) kv(s, "yes");
  line("");

  line("[COLOR PALETTE]");
  kv("Entries", std::to_string(table.size()));
  kv("Range", "0,255");
  line("");

  line("[COLOR TABLE]");
  for (std::size_t i = 0; i < table.size(); ++i) {
    kv(std::to_string(i + 1), std::to_string(table[i].r) + "," + std::to_string(table[i].g) +
                                  "," + std::to_string(table[i].b));
  }
  line("");

  line("[WEAVING]");
  kv("Shafts", "2");
  kv("Treadles", "2");
  kv("Rising Shed", "yes");
  line("");

  line("[WARP]");
  kv("Threads", std::to_string(draft.warp_ends));
  kv("Color", std::to_string(warp_index));
  line("");

  line("[WEFT]");
  kv("Threads", std::to_string(draft.picks.size()));
  line("");

  line("[WEFT COLORS]");
  for (std::size_t i = 0; i < weft_indices.size(); ++i) {
    kv(std::to_string(i + 1), std::to_string(weft_indices[i]));
  }
  line("");

  line("[THREADING]");
  for (int end = 1; end <= draft.warp_ends; ++end) {
    kv(std::to_string(end), end % 2 == 1 ? "1" : "2");
  }
  line("");

  line("[TIEUP]");
  kv("1", "1");
  kv("2", "2");
  line("");

  line("[TREADLING]");
  for (std::size_t pick = 1; pick <= draft.picks.size(); ++pick) {
    kv(std::to_string(pick), pick % 2 == 1 ? "1" : "2");
  }
  return out;
}

ParsedWif parse_wif(std::string_view text) {
  const WifDocument doc = WifDocument::parse(text);

  for (const char* name : {"WIF", "COLOR TABLE", "WARP", "WEFT", "WEFT COLORS", "THREADING",
                           "TIEUP", "TREADLING"}) {
    doc.require(name);
  }
  if (const auto* contents = doc.find("CONTENTS")) {
    for (const auto& e : contents->entries) {
      try {
        parse_bool(e.value);
      } catch (const Error&) {
        malformed(e.line, "\"" + e.value + "\" is not a boolean");
      }
    }
  }
  if (const auto* weaving = doc.find("WEAVING")) {
    if (const auto* shafts = WifDocument::find_entry(*weaving, "Shafts")) {
      if (entry_int(*shafts) != 2) unsupported("Shafts=" + shafts->value);
    }
  }

  // Color table, scaled from the declared range to 0..255.
  long range_lo = 0;
  long range_hi = 255;
  std::optional<long> declared_entries;
  if (const auto* pal = doc.find("COLOR PALETTE")) {
    if (const auto* range = WifDocument::find_entry(*pal, "Range")) {
      const auto bounds = int_list(*range);
      if (bounds.size() != 2 || bounds[1] <= bounds[0]) malformed(range->line, "bad Range");
      range_lo = bounds[0];
      range_hi = bounds[1];
    }
    if (const auto* entries = WifDocument::find_entry(*pal, "Entries")) {
      declared_entries = entry_int(*entries);
    }
  }
  const auto& table_section = doc.require("COLOR TABLE");
  const std::size_t table_size = table_section.entries.size();
  if (declared_entries && *declared_entries != static_cast<long>(table_size)) {
    throw Error(ErrorCode::InconsistentCount,
                "[COLOR PALETTE] Entries=" + std::to_string(*declared_entries) +
                    " but [COLOR TABLE] has " + std::to_string(table_size));
  }
  ParsedWif result;
  for (const auto* e : indexed_entries(table_section, table_size)) {
    const auto channels = int_list(*e);
    if (channels.size() != 3) malformed(e->line, "color needs 3 channels");
    std::array<std::uint8_t, 3> rgb{};
    for (std::size_t c = 0; c < 3; ++c) {
      if (channels[c] < range_lo || channels[c] > range_hi) {
        malformed(e->line, "channel outside declared Range");
      }
      const long span = range_hi - range_lo;
      rgb[c] = static_cast<std::uint8_t>(((channels[c] - range_lo) * 255 + span / 2) / span);
    }
    result.color_table.push_back({rgb[0], rgb[1], rgb[2]});
  }

  auto lookup = [&](const WifDocument::Entry& e) -> YarnColor {
    const long idx = entry_int(e);
    if (idx < 1 || static_cast<std::size_t>(idx) > result.color_table.size()) {
      throw Error(ErrorCode::ColorIndexOutOfRange,
                  "line " + std::to_string(e.line) + ": color index " + std::to_string(idx) +
                      " not in [COLOR TABLE] (" + std::to_string(result.color_table.size()) +
                      " entries)");
    }
    return {"Color " + std::to_string(idx), result.color_table[static_cast<std::size_t>(idx) - 1]};
  };

  const auto& warp = doc.require("WARP");
  const long warp_threads = positive_threads(warp);
  if (warp_threads < 1) throw Error(ErrorCode::InconsistentCount, "[WARP] Threads must be >= 1");
  result.draft.warp_ends = static_cast<int>(warp_threads);
  if (const auto* c = WifDocument::find_entry(warp, "Color")) {
    result.warp = lookup(*c);
  } else {
    result.warp = default_warp_color();
  }
  result.draft.warp_color = result.warp;

  const auto& weft = doc.require("WEFT");
  const auto weft_threads = static_cast<std::size_t>(positive_threads(weft));
  const auto& weft_colors = doc.require("WEFT COLORS");
  for (const auto* e : indexed_entries(weft_colors, weft_threads)) {
    result.draft.picks.push_back({lookup(*e), UnknownPick{}});
  }

  const auto& threading = doc.require("THREADING");
  check_alternating(threading,
                    indexed_entries(threading, static_cast<std::size_t>(warp_threads)));

  const auto& tieup = doc.require("TIEUP");
  if (tieup.entries.size() != 2) unsupported("[TIEUP] must tie exactly 2 treadles");
  std::map<long, long> ties;
  for (const auto* e : indexed_entries(tieup, 2)) {
    const auto shafts = int_list(*e);
    if (shafts.size() != 1 || (shafts[0] != 1 && shafts[0] != 2)) {
      unsupported("[TIEUP] " + e->key + "=" + e->value);
    }
    ties[key_int(*e)] = shafts[0];
  }
  if (ties[1] == ties[2]) unsupported("[TIEUP] both treadles lift the same shaft");

  const auto& treadling = doc.require("TREADLING");
  check_alternating(treadling, indexed_entries(treadling, weft_threads));

  return result;
}

}  // namespace loom
