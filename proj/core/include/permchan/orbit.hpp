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
#include <optional>
#include <vector>

#include "permchan/bounds.hpp"
#include "permchan/colored_string.hpp"
#include "permchan/group.hpp"

namespace permchan {

/// An orbit of length-n strings under a group action.
///
/// Members are stored as base-d indices in increasing (= lexicographic)
/// order; the representative is the first member.
struct Orbit {
  std::size_t n = 0;
  std::size_t d = 0;
  std::vector<std::uint64_t> member_indices;
  std::size_t stabilizer_order = 0;
  /// |G| / size, only set when the group is cyclic.
  std::optional<std::size_t> period_factor;

  std::size_t size() const { return member_indices.size(); }
  ColoredString representative() const { return ColoredString::from_index(member_indices.front(), n, d); }
  ColoredString member(std::size_t i) const { return ColoredString::from_index(member_indices[i], n, d); }
  std::vector<ColoredString> members() const;
};

/// All orbits of G on {0..d-1}^n together with an index -> orbit lookup.
struct OrbitPartition {
  std::size_t n = 0;
  std::size_t d = 0;
  /// Sorted by representative.
  std::vector<Orbit> orbits;
  /// orbit_of[x.index()] is the position of x's orbit in orbits.
  std::vector<std::uint32_t> orbit_of;

  std::size_t orbit_index(const ColoredString& x) const;
};

/// Throws BoundExceeded when d^n > bounds.max_states, InvalidArgument for d == 0.
OrbitPartition orbit_partition(const PermutationGroup& group, std::size_t d, const Bounds& bounds = {});

/// The orbits alone, sorted by lexicographically minimal representative.
std::vector<Orbit> orbits(const PermutationGroup& group, std::size_t d, const Bounds& bounds = {});

/// Orbit of a single string, without enumerating the full space.
Orbit orbit_of(const PermutationGroup& group, const ColoredString& x);

}  // namespace permchan
