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

#ifndef GRAPHPE_ERROR_HPP_
#define GRAPHPE_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace graphpe {

enum class Errc {
  kIndexOutOfRange,
  kDuplicateEdge,
  kSelfLoop,
  kCapacityExceeded,
  kDirectedUnsupported,
  kNotSymmetric,
  kNoConvergence,
  kSingular,
  kNotEnoughEigenvectors,
  kConfigError,
  kSizeMismatch,
  kShapeMismatch,
  kEdgeSetMismatch,
  kAlphabetTooLarge,
  kParseError,
  kIoError,
};

std::string_view errc_name(Errc code);

// All domain failures are reported through this exception; `code()` is the
// stable identifier, the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

class ParseError : public Error {
 public:
  // `line` is 1-based; 0 means the position is a byte offset only.
  ParseError(const std::string& message, std::size_t line,
             std::size_t byte_offset);

  std::size_t line() const noexcept { return line_; }
  std::size_t byte_offset() const noexcept { return byte_offset_; }

 private:
  std::size_t line_;
  std::size_t byte_offset_;
};

[[noreturn]] void fail(Errc code, const std::string& message);

}  // namespace graphpe

#endif  // GRAPHPE_ERROR_HPP_
