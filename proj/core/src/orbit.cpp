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

#include "permchan/orbit.hpp"

#include <algorithm>
#include <limits>

#include "permchan/error.hpp"

namespace permchan {

namespace {

constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();

Orbit build_orbit(const PermutationGroup& group, const StringSpace& space, std::uint64_t start) {
  Orbit orbit;
  orbit.n = space.length();
  orbit.d = space.alphabet();
  std::size_t fixing = 0;
  for (const auto& sigma : group.elements()) {
    std::uint64_t image = space.act(sigma, start);
    if (image == start) ++fixing;
    orbit.member_indices.push_back(image);
  }
  std::sort(orbit.member_indices.begin(), orbit.member_indices.end());
  orbit.member_indices.erase(std::unique(orbit.member_indices.begin(), orbit.member_indices.end()),
                             orbit.member_indices.end());
  orbit.stabilizer_order = fixing;
  if (group.kind() == GroupKind::cyclic) orbit.period_factor = group.order() / orbit.size();
  return orbit;
}

}  // namespace

std::vector<ColoredString> Orbit::members() const {
  std::vector<ColoredString> out;
  out.reserve(member_indices.size());
  for (std::uint64_t idx : member_indices) out.push_back(ColoredString::from_index(idx, n, d));
  return out;
}

std::size_t OrbitPartition::orbit_index(const ColoredString& x) const {
  if (x.length() != n || x.alphabet() != d) throw InvalidArgument("string shape does not match the partition");
  return orbit_of[x.index()];
}

OrbitPartition orbit_partition(const PermutationGroup& group, std::size_t d, const Bounds& bounds) {
  const std::uint64_t total = checked_state_count(group.degree(), d, bounds.max_states);
  StringSpace space(group.degree(), d);
  OrbitPartition partition;
  partition.n = group.degree();
  partition.d = d;
  partition.orbit_of.assign(total, kUnvisited);
  // Scanning in increasing index order meets each orbit first at its
  // lexicographic minimum, so the orbits come out sorted by representative.
  for (std::uint64_t x = 0; x < total; ++x) {
    if (partition.orbit_of[x] != kUnvisited) continue;
    Orbit orbit = build_orbit(group, space, x);
    const auto id = static_cast<std::uint32_t>(partition.orbits.size());
    for (std::uint64_t member : orbit.member_indices) partition.orbit_of[member] = id;
    partition.orbits.push_back(std::move(orbit));
  }
  return partition;
}

std::vector<Orbit> orbits(const PermutationGroup& group, std::size_t d, const Bounds& bounds) {
  return std::move(orbit_partition(group, d, bounds).orbits);
}

Orbit orbit_of(const PermutationGroup& group, const ColoredString& x) {
  if (group.degree() != x.length()) throw InvalidArgument("string length does not match group degree");
  StringSpace space(x.length(), x.alphabet());
  return build_orbit(group, space, x.index());
}

}  // namespace permchan
