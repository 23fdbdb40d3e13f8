// Copyright 2026 The permchan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>

namespace permchan {

/// Resource limits shared by every enumeration routine. Operations take a
/// Bounds argument defaulted to these values; the CLI can override them.
struct Bounds {
  /// Largest group generate_group will saturate.
  std::size_t max_group_order = 1'000'000;
  /// Largest d^n for which strings or state vectors are enumerated.
  std::uint64_t max_states = std::uint64_t{1} << 20;
  /// Largest group for which a character table is computed.
  std::size_t max_character_table_order = 5040;
  /// Largest d^n for which an isotypic projector is materialized.
  std::uint64_t max_projector_dimension = 4096;
};

/// Returns d^n, or throws BoundExceeded when it exceeds \p limit.
std::uint64_t checked_state_count(std::size_t n, std::size_t d, std::uint64_t limit);

}  // namespace permchan
