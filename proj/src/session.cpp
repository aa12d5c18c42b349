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

#include "loom/session.hpp"

#include <algorithm>

namespace loom {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

[[noreturn]] void reject(ErrorCode code, const std::string& detail) {
  throw Rejection(code, detail);
}

Participant* find_mutable(SessionState& state, std::string_view id) {
  for (auto& p : state.participants) {
    if (p.id == id) return &p;
  }
  return nullptr;
}

const YarnColor* find_yarn(const Palette& palette, std::string_view name) {
  for (const auto& c : palette.option_colors) {
    if (c.name == name) return &c;
  }
  if (palette.boundary.name == name) return &palette.boundary;
  return nullptr;
}

void require_mode(const SessionState& state, SessionMode mode, const char* what) {
  if (state.mode != mode) {
    reject(ErrorCode::ModeMismatch, std::string(what) + " is not allowed in " +
                                        std::string(to_string(state.mode)) + " mode");
  }
}

SessionState create(const event::Created& c, std::uint64_t sequence) {
  std::vector<ValidationError> errors = validate_questionnaire(c.questionnaire);
  auto palette_errors = validate_palette(c.palette, c.config.min_distance);
  errors.insert(errors.end(), palette_errors.begin(), palette_errors.end());
  auto coverage = validate_palette_coverage(c.palette, c.questionnaire);
  errors.insert(errors.end(), coverage.begin(), coverage.end());
  if (!errors.empty()) {
    std::string detail;
    for (const auto& e : errors) detail += (detail.empty() ? "" : "; ") + describe(e);
    reject(ErrorCode::ValidationFailed, detail);
  }
  if (c.config.encode.warp_ends < 1 || c.config.encode.picks_per_answer < 1 ||
      c.config.encode.boundary_picks < 1 || c.config.rows_per_pick < 1) {
    reject(ErrorCode::InvalidArgument, "session config values must be positive");
  }
  if (c.session_id.empty()) reject(ErrorCode::InvalidArgument, "session id must not be empty");

  SessionState state;
  state.id = c.session_id;
  state.questionnaire = c.questionnaire;
  state.palette = c.palette;
  state.mode = c.mode;
  state.config = c.config;
  state.last_sequence = sequence;
  return state;
}

}  // namespace

std::string_view to_string(SessionMode mode) {
  return mode == SessionMode::Data ? "data" : "freeform";
}

SessionMode session_mode_from_string(std::string_view text) {
  if (text == "data") return SessionMode::Data;
  if (text == "freeform") return SessionMode::Freeform;
  throw Error(ErrorCode::InvalidArgument,
              "mode must be \"data\" or \"freeform\", got \"" + std::string(text) + "\"");
}

std::size_t Participant::answered() const {
  return static_cast<std::size_t>(
      std::count_if(answers.begin(), answers.end(), [](const auto& a) { return a.has_value(); }));
}

bool Participant::complete() const { return answered() == answers.size(); }

const Participant* SessionState::find_participant(std::string_view pid) const {
  for (const auto& p : participants) {
    if (p.id == pid) return &p;
  }
  return nullptr;
}

std::optional<std::size_t> SessionState::current_participant() const {
  for (std::size_t i = 0; i < participants.size(); ++i) {
    if (!participants[i].complete()) return i;
  }
  return std::nullopt;
}

bool operator==(const Participant& a, const Participant& b) {
  return a.id == b.id && a.label == b.label && a.answers == b.answers;
}

bool operator==(const FreeformPick& a, const FreeformPick& b) {
  return a.participant_id == b.participant_id && a.color == b.color;
}

bool operator==(const SessionState& a, const SessionState& b) {
  return a.id == b.id && a.questionnaire == b.questionnaire && a.palette == b.palette &&
         a.mode == b.mode && a.config == b.config && a.participants == b.participants &&
         a.freeform_picks == b.freeform_picks && a.closed == b.closed &&
         a.last_sequence == b.last_sequence;
}

void apply_event_in_place(std::optional<SessionState>& state, const SessionEvent& e) {
  const std::uint64_t expected = state ? state->last_sequence + 1 : 1;
  if (e.sequence != expected) {
    reject(ErrorCode::OutOfSequence, "event " + std::to_string(e.sequence) + " received, " +
                                         std::to_string(expected) + " expected");
  }

  if (const auto* created = std::get_if<event::Created>(&e.kind)) {
    if (state) reject(ErrorCode::InvalidArgument, "session already created");
    state = create(*created, e.sequence);
    return;
  }
  if (!state) reject(ErrorCode::InvalidArgument, "first event must be Created");
  SessionState& s = *state;
  if (s.closed) reject(ErrorCode::SessionClosed, "session " + s.id + " is closed");

  // Every branch validates fully before its first write.
  std::visit(
      Overloaded{
          [](const event::Created&) {},
          [&](const event::ParticipantAdded& p) {
            if (p.participant_id.empty()) {
              reject(ErrorCode::InvalidArgument, "participant id must not be empty");
            }
            if (s.find_participant(p.participant_id)) {
              reject(ErrorCode::DuplicateParticipant, "participant " + p.participant_id +
                                                          " already exists");
            }
            Participant participant{p.participant_id, p.label, {}};
            if (s.mode == SessionMode::Data) {
              participant.answers.resize(s.questionnaire.question_count());
            }
            s.participants.push_back(std::move(participant));
          },
          [&](const event::AnswerRecorded& a) {
            require_mode(s, SessionMode::Data, "recording an answer");
            Participant* p = find_mutable(s, a.participant_id);
            if (!p) reject(ErrorCode::UnknownParticipant, "no participant " + a.participant_id);
            if (a.question_index >= s.questionnaire.question_count()) {
              reject(ErrorCode::InvalidAnswer,
                     "question index " + std::to_string(a.question_index) + " out of range");
            }
            const auto& question = s.questionnaire.questions[a.question_index];
            if (a.option_index < 0 ||
                static_cast<std::size_t>(a.option_index) >= question.options.size()) {
              reject(ErrorCode::InvalidAnswer,
                     describe(OptionOutOfRange{a.question_index, a.option_index}));
            }
            if (p->answers[a.question_index]) {
              reject(ErrorCode::DuplicateAnswer, "participant " + a.participant_id +
                                                     " already answered " + question.id);
            }
            p->answers[a.question_index] = a.option_index;
          },
          [&](const event::FreeformPickRecorded& f) {
            require_mode(s, SessionMode::Freeform, "a freeform pick");
            if (!s.find_participant(f.participant_id)) {
              reject(ErrorCode::UnknownParticipant, "no participant " + f.participant_id);
            }
            const YarnColor* yarn = find_yarn(s.palette, f.color_name);
            if (!yarn) reject(ErrorCode::UnknownColor, "no yarn named " + f.color_name);
            s.freeform_picks.push_back({f.participant_id, *yarn});
          },
          [&](const event::Closed&) { s.closed = true; },
      },
      e.kind);
  s.last_sequence = e.sequence;
}

SessionState apply_event(const std::optional<SessionState>& state, const SessionEvent& e) {
  std::optional<SessionState> next = state;
  apply_event_in_place(next, e);
  return std::move(*next);
}

SessionState replay(std::span<const SessionEvent> events) {
  if (events.empty()) throw Error(ErrorCode::CorruptLog, "empty log");
  std::optional<SessionState> state;
  std::uint64_t previous = 0;
  for (const auto& e : events) {
    if (e.sequence != previous + 1) {
      throw Error(ErrorCode::CorruptLog, "CorruptLog(" + std::to_string(e.sequence) + ", gap)");
    }
    try {
      apply_event_in_place(state, e);
    } catch (const Rejection& r) {
      throw Error(ErrorCode::CorruptLog, "CorruptLog(" + std::to_string(e.sequence) + ", " +
                                             std::string(to_string(r.code())) + ": " + r.what() +
                                             ")");
    }
    previous = e.sequence;
  }
  return std::move(*state);
}

std::vector<PickInstruction> next_picks(const SessionState& state) {
  if (state.mode != SessionMode::Data) {
    throw Error(ErrorCode::ModeMismatch, "next picks are only defined in data mode");
  }
  if (state.closed || state.participants.empty()) return {};

  const auto current = state.current_participant();
  std::size_t at_loom = 0;
  if (current && state.participants[*current].answered() > 0) {
    at_loom = *current;
  } else if (current && *current > 0) {
    at_loom = *current - 1;
  } else if (!current) {
    at_loom = state.participants.size() - 1;
  } else {
    return {};  // the first participant has not answered yet
  }

  const Participant& p = state.participants[at_loom];
  std::vector<PickInstruction> picks;
  for (std::size_t i = 0; i < p.answers.size(); ++i) {
    if (!p.answers[i]) continue;
    const auto& yarn = state.palette.option_colors[static_cast<std::size_t>(*p.answers[i])];
    picks.push_back({yarn.name, yarn.rgb, state.config.encode.picks_per_answer,
                     PickPurpose::Answer, state.questionnaire.questions[i].prompt, i});
  }
  if (p.complete() && at_loom + 1 < state.participants.size()) {
    picks.push_back({state.palette.boundary.name, state.palette.boundary.rgb,
                     state.config.encode.boundary_picks, PickPurpose::Boundary, {}, 0});
  }
  return picks;
}

WeavingDraft woven_draft(const SessionState& state) {
  if (state.mode == SessionMode::Data) {
    std::vector<PartialRecord> partial;
    partial.reserve(state.participants.size());
    for (const auto& p : state.participants) partial.push_back({p.answers});
    return encode_partial(state.palette, partial, state.config.encode);
  }
  WeavingDraft draft = encode_partial(state.palette, {}, state.config.encode);
  for (const auto& pick : state.freeform_picks) draft.picks.push_back({pick.color, UnknownPick{}});
  return draft;
}

ColorGrid preview(const SessionState& state) {
  return render_chart(woven_draft(state), ChartConfig{state.config.rows_per_pick});
}

Report session_report(const SessionState& state) {
  if (state.mode != SessionMode::Data) {
    throw Error(ErrorCode::ModeMismatch, "freeform sessions have no report");
  }
  Report report = empty_report(state.questionnaire);
  report.participants_total = state.participants.size();
  for (const auto& p : state.participants) {
    for (std::size_t i = 0; i < p.answers.size(); ++i) {
      if (p.answers[i]) tally(report, i, *p.answers[i]);
    }
  }
  return report;
}

}  // namespace loom
