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

#include "loom/session_store.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <mutex>
#include <random>
#include <sstream>

#include "loom/io.hpp"
#include "loom/session_json.hpp"

namespace loom {

namespace {

std::string random_session_id() {
  static thread_local std::mt19937_64 rng{std::random_device{}()};
  static constexpr char kHex[] = "0123456789abcdef";
  std::string id;
  for (int i = 0; i < 12; ++i) id += kHex[rng() & 0xf];
  return id;
}

void append_line(const std::filesystem::path& file, const std::string& line) {
  std::ofstream out(file, std::ios::binary | std::ios::app);
  out << line << '\n';
  out.flush();
  if (!out) throw Error(ErrorCode::IoError, "cannot append to " + file.string());
}

}  // namespace

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

SessionStore::SessionStore(std::filesystem::path data_dir, Clock clock, IdSource ids)
    : data_dir_(std::move(data_dir)),
      clock_(std::move(clock)),
      ids_(ids ? std::move(ids) : IdSource(random_session_id)) {
  std::error_code ec;
  std::filesystem::create_directories(data_dir_, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot create " + data_dir_.string() + ": " + ec.message());
}

std::filesystem::path SessionStore::log_path(const std::string& session_id) const {
  return data_dir_ / (session_id + ".jsonl");
}

std::size_t SessionStore::load_existing() {
  std::unique_lock lock(registry_mutex_);
  std::size_t loaded = 0;
  for (const auto& entry : std::filesystem::directory_iterator(data_dir_)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".jsonl") continue;
    const std::string id = entry.path().stem().string();
    if (sessions_.count(id)) continue;

    std::vector<SessionEvent> log;
    std::istringstream lines(read_text_file(entry.path()));
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(lines, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      try {
        log.push_back(session_event_from_json(nlohmann::json::parse(line)));
      } catch (const std::exception& e) {
        throw Error(ErrorCode::CorruptLog, entry.path().string() + " line " +
                                               std::to_string(line_no) + ": " + e.what());
      }
    }
    auto slot = std::make_unique<Slot>();
    slot->state = replay(log);
    if (slot->state->id != id) {
      throw Error(ErrorCode::CorruptLog,
                  entry.path().string() + ": log belongs to session " + slot->state->id);
    }
    slot->log = std::move(log);
    slot->file = entry.path();
    sessions_.emplace(id, std::move(slot));
    ++loaded;
  }
  return loaded;
}

SessionStore::Slot& SessionStore::slot(const std::string& session_id) const {
  std::shared_lock lock(registry_mutex_);
  auto it = sessions_.find(session_id);
  if (it == sessions_.end()) throw Error(ErrorCode::NotFound, "no session " + session_id);
  return *it->second;
}

SessionState SessionStore::append(Slot& s, const EventFactory& make) {
  std::unique_lock lock(s.mutex);
  SessionEvent e{s.state->last_sequence + 1, clock_(), make(*s.state)};
  std::optional<SessionState> next = s.state;
  apply_event_in_place(next, e);
  append_line(s.file, to_json(e).dump());
  s.state = std::move(next);
  s.log.push_back(std::move(e));
  return *s.state;
}

std::string SessionStore::create(const Questionnaire& q, const Palette& palette, SessionMode mode,
                                 const SessionConfig& config) {
  auto slot = std::make_unique<Slot>();
  std::string id;
  {
    std::unique_lock lock(registry_mutex_);
    do {
      id = ids_();
    } while (sessions_.count(id) || std::filesystem::exists(log_path(id)));
    slot->file = log_path(id);
    // Validate before anything touches the registry or the disk.
    SessionEvent created{1, clock_(), event::Created{id, q, palette, mode, config}};
    std::optional<SessionState> state;
    apply_event_in_place(state, created);
    append_line(slot->file, to_json(created).dump());
    slot->state = std::move(state);
    slot->log.push_back(std::move(created));
    sessions_.emplace(id, std::move(slot));
  }
  return id;
}

std::string SessionStore::add_participant(const std::string& session_id, const std::string& label) {
  std::string pid;
  append(slot(session_id), [&](const SessionState& state) {
    pid = "p" + std::to_string(state.participants.size() + 1);
    return event::ParticipantAdded{pid, label};
  });
  return pid;
}

void SessionStore::record_answer(const std::string& session_id, const std::string& participant_id,
                                 std::size_t question_index, int option_index) {
  append(slot(session_id), [&](const SessionState&) {
    return event::AnswerRecorded{participant_id, question_index, option_index};
  });
}

void SessionStore::record_freeform_pick(const std::string& session_id,
                                        const std::string& participant_id,
                                        const std::string& color_name) {
  append(slot(session_id), [&](const SessionState&) {
    return event::FreeformPickRecorded{participant_id, color_name};
  });
}

void SessionStore::close(const std::string& session_id) {
  append(slot(session_id), [](const SessionState&) { return event::Closed{}; });
}

SessionState SessionStore::snapshot(const std::string& session_id) const {
  const Slot& s = slot(session_id);
  std::shared_lock lock(s.mutex);
  return *s.state;
}

std::vector<SessionEvent> SessionStore::events(const std::string& session_id) const {
  const Slot& s = slot(session_id);
  std::shared_lock lock(s.mutex);
  return s.log;
}

std::vector<std::string> SessionStore::session_ids() const {
  std::shared_lock lock(registry_mutex_);
  std::vector<std::string> ids;
  for (const auto& [id, _] : sessions_) ids.push_back(id);
  return ids;
}

}  // namespace loom
