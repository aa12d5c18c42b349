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

// Live weaving sessions as an event-sourced state machine.
//
// A session is the left fold of its event log: Created first, then
// participants, answers (Data mode) or freeform yarn picks (Freeform mode),
// and optionally Closed. Every read (next picks, preview, report) is derived
// from the folded state, never stored.
//
// Answers are immutable: recording the same question twice for a participant
// is rejected, since woven picks cannot be taken out again. A re-weave is a
// new participant.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "loom/draft.hpp"
#include "loom/errors.hpp"
#include "loom/model.hpp"
#include "loom/report.hpp"

namespace loom {

enum class SessionMode { Freeform, Data };

std::string_view to_string(SessionMode mode);
SessionMode session_mode_from_string(std::string_view text);  // throws InvalidArgument

struct SessionConfig {
  EncodeConfig encode;
  int rows_per_pick = 1;
  double min_distance = kDefaultMinDistance;

  friend bool operator==(const SessionConfig& a, const SessionConfig& b) {
    return a.encode.warp_ends == b.encode.warp_ends &&
           a.encode.picks_per_answer == b.encode.picks_per_answer &&
           a.encode.boundary_picks == b.encode.boundary_picks &&
           a.rows_per_pick == b.rows_per_pick && a.min_distance == b.min_distance;
  }
};

namespace event {

struct Created {
  std::string session_id;
  Questionnaire questionnaire;
  Palette palette;
  SessionMode mode = SessionMode::Data;
  SessionConfig config;
};
struct ParticipantAdded {
  std::string participant_id;
  std::string label;
};
struct AnswerRecorded {
  std::string participant_id;
  std::size_t question_index = 0;
  int option_index = 0;
};
struct FreeformPickRecorded {
  std::string participant_id;
  std::string color_name;
};
struct Closed {};

}  // namespace event

using EventKind = std::variant<event::Created, event::ParticipantAdded, event::AnswerRecorded,
                               event::FreeformPickRecorded, event::Closed>;

struct SessionEvent {
  std::uint64_t sequence = 0;
  std::string timestamp;
  EventKind kind;
};

struct Participant {
  std::string id;
  std::string label;
  std::vector<std::optional<int>> answers;  // Data mode: one slot per question

  std::size_t answered() const;
  bool complete() const;
};

struct FreeformPick {
  std::string participant_id;
  YarnColor color;
};

struct SessionState {
  std::string id;
  Questionnaire questionnaire;
  Palette palette;
  SessionMode mode = SessionMode::Data;
  SessionConfig config;
  std::vector<Participant> participants;  // insertion order is weave order
  std::vector<FreeformPick> freeform_picks;
  bool closed = false;
  std::uint64_t last_sequence = 0;

  const Participant* find_participant(std::string_view id) const;
  // First participant with an unanswered question (Data mode).
  std::optional<std::size_t> current_participant() const;
};

bool operator==(const Participant& a, const Participant& b);
bool operator==(const FreeformPick& a, const FreeformPick& b);
bool operator==(const SessionState& a, const SessionState& b);

// Raised for a rejected event; the state passed in is left untouched.
class Rejection : public Error {
 public:
  using Error::Error;
};

// Applies e to state (nullopt before Created) and returns the new state.
// Throws Rejection with one of: OutOfSequence, SessionClosed, UnknownParticipant,
// DuplicateParticipant, DuplicateAnswer, ModeMismatch, InvalidAnswer,
// UnknownColor, ValidationFailed (bad Created payload).
SessionState apply_event(const std::optional<SessionState>& state, const SessionEvent& e);

// Same rules, mutating in place. Strong guarantee: on Rejection nothing changed.
void apply_event_in_place(std::optional<SessionState>& state, const SessionEvent& e);

// Throws Error(CorruptLog) naming the offending sequence number and the reason
// ("gap", "empty log", or the rejection message).
SessionState replay(std::span<const SessionEvent> events);

enum class PickPurpose { Answer, Boundary };

struct PickInstruction {
  std::string yarn;
  Rgb rgb;
  int count = 1;
  PickPurpose purpose = PickPurpose::Answer;
  std::string question_prompt;  // Answer only
  std::size_t question_index = 0;

  friend bool operator==(const PickInstruction&, const PickInstruction&) = default;
};

// Picks for the participant at the loom, in question order, then the
// boundary run once they are complete and someone follows. The participant
// at the loom is the first incomplete one if they have started; otherwise the
// one before them (who just finished). Empty when closed. Throws
// Error(ModeMismatch) in Freeform mode.
std::vector<PickInstruction> next_picks(const SessionState& state);

// Draft of what has been woven so far. Data mode: every recorded answer plus
// a boundary after each complete participant who is not last. Freeform mode:
// the freeform picks in log order.
WeavingDraft woven_draft(const SessionState& state);

// render_chart of woven_draft with the session's rows_per_pick.
ColorGrid preview(const SessionState& state);

// Throws Error(ModeMismatch) in Freeform mode.
Report session_report(const SessionState& state);

}  // namespace loom
