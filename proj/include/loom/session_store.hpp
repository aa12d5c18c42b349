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

// Persistent home of live sessions.
//
// Each session is an append-only JSONL file `<data_dir>/<session id>.jsonl`,
// one SessionEvent per line. A mutation folds the new event into a copy of
// the state, appends it to the file, and only then publishes the new state,
// so the in-memory state always equals replay() of the file.
//
// Mutations of one session are serialized by its own lock; reads share it.
// Different sessions never contend beyond the brief registry lookup.

#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "loom/session.hpp"

namespace loom {

// Current UTC time as "YYYY-MM-DDTHH:MM:SSZ".
std::string utc_timestamp();

class SessionStore {
 public:
  using Clock = std::function<std::string()>;
  using IdSource = std::function<std::string()>;

  explicit SessionStore(std::filesystem::path data_dir, Clock clock = utc_timestamp,
                        IdSource ids = {});

  SessionStore(const SessionStore&) = delete;
  SessionStore& operator=(const SessionStore&) = delete;

  // Replays every *.jsonl log under data_dir. Throws Error(CorruptLog).
  std::size_t load_existing();

  std::string create(const Questionnaire& q, const Palette& palette, SessionMode mode,
                     const SessionConfig& config = {});
  std::string add_participant(const std::string& session_id, const std::string& label);
  void record_answer(const std::string& session_id, const std::string& participant_id,
                     std::size_t question_index, int option_index);
  void record_freeform_pick(const std::string& session_id, const std::string& participant_id,
                            const std::string& color_name);
  void close(const std::string& session_id);

  // Throw Error(NotFound) for an unknown session id.
  SessionState snapshot(const std::string& session_id) const;
  std::vector<SessionEvent> events(const std::string& session_id) const;

  std::vector<std::string> session_ids() const;
  std::filesystem::path log_path(const std::string& session_id) const;

 private:
  struct Slot {
    mutable std::shared_mutex mutex;
    std::optional<SessionState> state;
    std::vector<SessionEvent> log;
    std::filesystem::path file;
  };

  using EventFactory = std::function<EventKind(const SessionState&)>;

  Slot& slot(const std::string& session_id) const;
  // Builds the next event from the current state under the session's write
  // lock; returns the state after it was applied and persisted.
  SessionState append(Slot& slot, const EventFactory& make);

  std::filesystem::path data_dir_;
  Clock clock_;
  IdSource ids_;
  mutable std::shared_mutex registry_mutex_;
  std::map<std::string, std::unique_ptr<Slot>> sessions_;
};

}  // namespace loom
