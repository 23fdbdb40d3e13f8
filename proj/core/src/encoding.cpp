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

#include "permchan/encoding.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "permchan/counting.hpp"
#include "permchan/error.hpp"

namespace permchan {

std::vector<ColoredString> fkm_representatives(std::size_t n, std::size_t d, const Bounds& bounds) {
  if (n == 0) throw InvalidArgument("n must be at least 1");
  const BigInt expected = count_cyclic(n, d).classical;
  if (expected > bounds.max_states) {
    throw BoundExceeded("necklace count " + expected.str() + " exceeds the bound " + std::to_string(bounds.max_states));
  }
  std::vector<ColoredString> out;
  out.reserve(static_cast<std::size_t>(expected));
  std::vector<ColoredString::Symbol> a(n, 0);
  out.emplace_back(a, d);
  const auto top = static_cast<ColoredString::Symbol>(d - 1);
  while (true) {
    // Successor of the prenecklace a: bump the last non-maximal symbol and
    // repeat the prefix a[0..i] periodically.
    std::size_t i = n;
    while (i > 0 && a[i - 1] == top) --i;
    if (i == 0) break;
    --i;
    ++a[i];
    for (std::size_t j = i + 1; j < n; ++j) a[j] = a[j - i - 1];
    if (n % (i + 1) == 0) out.emplace_back(a, d);
  }
  return out;
}

std::size_t irrep_label(const Orbit& orbit, std::size_t k) {
  if (!orbit.period_factor) throw InvalidArgument("orbit was not computed under a cyclic group");
  if (k >= orbit.size()) {
    throw InvalidArgument("Fourier index " + std::to_string(k) + " out of range for an orbit of size " +
                          std::to_string(orbit.size()));
  }
  return *orbit.period_factor * k;
}

std::vector<FourierState> orbit_fourier_basis(const Orbit& orbit, std::size_t n, std::size_t d,
                                              std::size_t orbit_index) {
  if (!orbit.period_factor) throw InvalidArgument("Fourier bases are only defined for cyclic orbits");
  if (orbit.n != n || orbit.d != d) throw InvalidArgument("orbit shape does not match (n, d)");
  const StringSpace space(n, d);
  const std::size_t size = orbit.size();
  const Permutation shift = cyclic_shift(n);
  // Walk the orbit from its representative: walk[l] = r^l x_j.
  std::vector<std::uint64_t> walk(size);
  walk[0] = orbit.member_indices.front();
  for (std::size_t l = 1; l < size; ++l) walk[l] = space.act(shift, walk[l - 1]);

  const double norm = 1.0 / std::sqrt(static_cast<double>(size));
  std::vector<FourierState> basis;
  basis.reserve(size);
  for (std::size_t k = 0; k < size; ++k) {
    FourierState fs;
    fs.state = StateVector(n, d);
    for (std::size_t l = 0; l < size; ++l) {
      const auto exponent = -static_cast<std::int64_t>((k * l) % size);
      fs.state.set(walk[l], norm * root_of_unity(exponent, static_cast<std::int64_t>(size)));
    }
    fs.orbit_index = orbit_index;
    fs.fourier_index = k;
    fs.irrep_label = irrep_label(orbit, k);
    basis.push_back(std::move(fs));
  }
  return basis;
}

std::vector<std::size_t> MessageBasis::sector(std::size_t mu) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].irrep == mu) out.push_back(i);
  }
  return out;
}

std::string MessageBasis::to_json() const {
  nlohmann::json doc;
  doc["n"] = n;
  doc["d"] = d;
  doc["group"] = std::string(to_string(group.kind()));
  doc["multiplicities"] = multiplicities;
  nlohmann::json states = nlohmann::json::array();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    states.push_back({{"message", i},
                      {"mu", e.irrep},
                      {"alpha", e.alpha},
                      {"orbit", e.orbit_index},
                      {"fourier_index", e.fourier_index},
                      {"amplitudes", nlohmann::json::parse(e.state.to_json())}});
  }
  doc["states"] = std::move(states);
  return doc.dump(2);
}

MessageBasis message_basis_cyclic(std::size_t n, std::size_t d, const Bounds& bounds) {
  MessageBasis basis{make_named_group(GroupKind::cyclic, n, bounds), n, d, {}, {}, {}};
  const OrbitPartition partition = orbit_partition(basis.group, d, bounds);
  std::vector<std::vector<FourierState>> sectors(n);
  for (std::size_t j = 0; j < partition.orbits.size(); ++j) {
    for (auto& fs : orbit_fourier_basis(partition.orbits[j], n, d, j)) sectors[fs.irrep_label].push_back(std::move(fs));
  }
  basis.multiplicities.resize(n);
  basis.entries_by_string.resize(partition.orbit_of.size());
  for (std::size_t mu = 0; mu < n; ++mu) {
    basis.multiplicities[mu] = sectors[mu].size();
    for (std::size_t alpha = 0; alpha < sectors[mu].size(); ++alpha) {
      auto& fs = sectors[mu][alpha];
      const auto id = static_cast<std::uint32_t>(basis.entries.size());
      for (const auto& [index, value] : fs.state.amplitudes()) basis.entries_by_string[index].push_back(id);
      basis.entries.push_back({mu, alpha, fs.orbit_index, fs.fourier_index, std::move(fs.state)});
    }
  }
  return basis;
}

const StateVector& encode_message(const MessageBasis& basis, std::size_t message_index) {
  if (message_index >= basis.entries.size()) {
    throw InvalidArgument("message index " + std::to_string(message_index) + " out of range for " +
                          std::to_string(basis.entries.size()) + " messages");
  }
  return basis.entries[message_index].state;
}

}  // namespace permchan
