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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace loom {

enum class ErrorCode {
  // input files
  ParseError,
  IoError,
  InvalidArgument,
  // core model / encoder
  ValidationFailed,
  PaletteTooSmall,
  // WIF
  MissingSection,
  MalformedLine,
  InconsistentCount,
  ColorIndexOutOfRange,
  UnsupportedStructure,
  // decoder
  GeometryError,
  UnreadableImage,
  ShapeError,
  // session
  UnknownParticipant,
  DuplicateParticipant,
  DuplicateAnswer,
  SessionClosed,
  ModeMismatch,
  InvalidAnswer,
  UnknownColor,
  OutOfSequence,
  CorruptLog,
  NotFound,
};

std::string_view to_string(ErrorCode code);

// Base exception for every hard failure in the library. Soft problems
// (validation lists, decode diagnostics) are returned as values instead.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace loom
