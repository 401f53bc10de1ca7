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

#ifndef GRAPHPE_ALLOC_TRACKER_HPP_
#define GRAPHPE_ALLOC_TRACKER_HPP_

#include <cstddef>

// Counters maintained by the replacement global operator new/delete linked
// into the library. All counts are in bytes of requested storage.
namespace graphpe::alloc {

std::size_t current_bytes() noexcept;
std::size_t peak_bytes() noexcept;
// Restarts the high-water mark at the current usage.
void reset_peak() noexcept;

}  // namespace graphpe::alloc

#endif  // GRAPHPE_ALLOC_TRACKER_HPP_
