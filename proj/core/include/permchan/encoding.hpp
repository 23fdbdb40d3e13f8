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
#include <string>
#include <vector>

#include "permchan/bounds.hpp"
#include "permchan/colored_string.hpp"
#include "permchan/group.hpp"
#include "permchan/orbit.hpp"
#include "permchan/state_vector.hpp"

namespace permchan {

/// Lexicographically minimal necklace representatives of length n over d
/// symbols, in increasing order, via the iterative FKM (prenecklace)
/// successor rule. Throws BoundExceeded when the necklace count exceeds
/// bounds.max_states.
std::vector<ColoredString> fkm_representatives(std::size_t n, std::size_t d, const Bounds& bounds = {});

/// One Fourier state of a cyclic orbit. With the representative x_j and
/// orbit size n_j,
///   |u_j^k> = n_j^{-1/2} sum_l exp(-2 pi i k l / n_j) U(r^l)|x_j>,
/// so U(r)|u_j^k> = exp(2 pi i k / n_j)|u_j^k> = omega_n^mu |u_j^k> with
/// mu = p_j k.
struct FourierState {
  StateVector state;
  std::size_t orbit_index = 0;
  std::size_t fourier_index = 0;
  std::size_t irrep_label = 0;
};

/// mu = p_j k for an orbit of the cyclic group. Throws InvalidArgument if the
/// orbit carries no period factor or k >= n_j.
std::size_t irrep_label(const Orbit& orbit, std::size_t k);

/// The n_j Fourier states of one orbit of C_n. Throws InvalidArgument if the
/// orbit was not computed under a cyclic group.
std::vector<FourierState> orbit_fourier_basis(const Orbit& orbit, std::size_t n, std::size_t d,
                                              std::size_t orbit_index = 0);

struct MessageEntry {
  std::size_t irrep = 0;
  std::size_t alpha = 0;
  std::size_t orbit_index = 0;
  std::size_t fourier_index = 0;
  StateVector state;
};

/// The zero-error message basis {|u^mu_alpha>} for C_n.
///
/// Entries are ordered by ascending mu, then by ascending orbit
/// representative; alpha counts entries within a sector.
struct MessageBasis {
  PermutationGroup group;
  std::size_t n = 0;
  std::size_t d = 0;
  std::vector<MessageEntry> entries;
  /// multiplicities[mu] = m_mu, mu = 0..n-1.
  std::vector<std::size_t> multiplicities;
  /// entries_by_string[x] lists the entries whose support contains x.
  std::vector<std::vector<std::uint32_t>> entries_by_string;

  std::size_t size() const { return entries.size(); }
  /// Positions in entries of sector mu, in alpha order.
  std::vector<std::size_t> sector(std::size_t mu) const;
  /// JSON document with n, d, multiplicities and every entry's amplitudes.
  std::string to_json() const;
};

/// Throws BoundExceeded when d^n > bounds.max_states.
MessageBasis message_basis_cyclic(std::size_t n, std::size_t d, const Bounds& bounds = {});

/// The entry at \p message_index in canonical order. Throws InvalidArgument
/// when out of range.
const StateVector& encode_message(const MessageBasis& basis, std::size_t message_index);

}  // namespace permchan
