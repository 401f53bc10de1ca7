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

#ifndef GRAPHPE_CLI_HPP_
#define GRAPHPE_CLI_HPP_

#include <ostream>
#include <span>
#include <string>

namespace graphpe {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

// `args` is the full argument vector, program name first.
int cli_main(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace graphpe

#endif  // GRAPHPE_CLI_HPP_
