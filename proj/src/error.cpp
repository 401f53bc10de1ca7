// Copyright 2026 The graphpe Authors
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

#include "graphpe/error.hpp"

namespace graphpe {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::kIndexOutOfRange: return "IndexOutOfRange";
    case Errc::kDuplicateEdge: return "DuplicateEdge";
    case Errc::kSelfLoop: return "SelfLoop";
    case Errc::kCapacityExceeded: return "CapacityExceeded";
    case Errc::kDirectedUnsupported: return "DirectedUnsupported";
    case Errc::kNotSymmetric: return "NotSymmetric";
    case Errc::kNoConvergence: return "NoConvergence";
    case Errc::kSingular: return "Singular";
    case Errc::kNotEnoughEigenvectors: return "NotEnoughEigenvectors";
    case Errc::kConfigError: return "ConfigError";
    case Errc::kSizeMismatch: return "SizeMismatch";
    case Errc::kShapeMismatch: return "ShapeMismatch";
    case Errc::kEdgeSetMismatch: return "EdgeSetMismatch";
    case Errc::kAlphabetTooLarge: return "AlphabetTooLarge";
    case Errc::kParseError: return "ParseError";
    case Errc::kIoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message),
      code_(code) {}

ParseError::ParseError(const std::string& message, std::size_t line,
                       std::size_t byte_offset)
    : Error(Errc::kParseError,
            (line > 0 ? "line " + std::to_string(line) + ", " : std::string()) +
                "byte " + std::to_string(byte_offset) + ": " + message),
      line_(line),
      byte_offset_(byte_offset) {}

void fail(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace graphpe
