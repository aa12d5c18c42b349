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

#include "loom/errors.hpp"

namespace loom {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ValidationFailed: return "ValidationFailed";
    case ErrorCode::PaletteTooSmall: return "PaletteTooSmall";
    case ErrorCode::MissingSection: return "MissingSection";
    case ErrorCode::MalformedLine: return "MalformedLine";
    case ErrorCode::InconsistentCount: return "InconsistentCount";
    case ErrorCode::ColorIndexOutOfRange: return "ColorIndexOutOfRange";
    case ErrorCode::UnsupportedStructure: return "UnsupportedStructure";
    case ErrorCode::GeometryError: return "GeometryError";
    case ErrorCode::UnreadableImage: return "UnreadableImage";
    case ErrorCode::ShapeError: return "ShapeError";
    case ErrorCode::UnknownParticipant: return "UnknownParticipant";
    case ErrorCode::DuplicateParticipant: return "DuplicateParticipant";
    case ErrorCode::DuplicateAnswer: return "DuplicateAnswer";
    case ErrorCode::SessionClosed: return "SessionClosed";
    case ErrorCode::ModeMismatch: return "ModeMismatch";
    case ErrorCode::InvalidAnswer: return "InvalidAnswer";
    case ErrorCode::UnknownColor: return "UnknownColor";
    case ErrorCode::OutOfSequence: return "OutOfSequence";
    case ErrorCode::CorruptLog: return "CorruptLog";
    case ErrorCode::NotFound: return "NotFound";
  }
  return "Unknown";
}

}  // namespace loom
