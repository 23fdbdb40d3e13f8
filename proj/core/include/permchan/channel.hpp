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
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "permchan/colored_string.hpp"
#include "permchan/encoding.hpp"
#include "permchan/group.hpp"
#include "permchan/orbit.hpp"
#include "permchan/state_vector.hpp"

namespace permchan {

struct ExhaustiveSelection {};
/// Trial t draws its element from a generator seeded with (seed, t).
struct UniformRandomSelection {
  std::uint64_t seed = 0;
};
struct FixedSelection {
  Permutation sigma;
};

using ElementSelection = std::variant<ExhaustiveSelection, UniformRandomSelection, FixedSelection>;

/// A permutation channel: the group it scrambles with and how the unknown
/// element is picked.
struct ChannelSpec {
  PermutationGroup group;
  ElementSelection selection = ExhaustiveSelection{};
};

/// Throws InvalidArgument if a fixed element is not in the group.
void validate(const ChannelSpec& spec);

/// Group elements (by index) the channel applies on trial \p trial: all of
/// them for exhaustive selection, one otherwise.
std::vector<std::size_t> selected_elements(const ChannelSpec& spec, std::uint64_t trial = 0);

struct ClassicalTransmission {
  ColoredString output;
  Permutation sigma;
};

struct QuantumTransmission {
  StateVector output;
  Permutation sigma;
};

std::vector<ClassicalTransmission> apply_channel_classical(const ChannelSpec& spec, const ColoredString& x,
                                                           std::uint64_t trial = 0);
std::vector<QuantumTransmission> apply_channel_quantum(const ChannelSpec& spec, const StateVector& psi,
                                                       std::uint64_t trial = 0);

/// Index of the orbit containing y, in canonical-representative order.
std::size_t decode_classical(const OrbitPartition& partition, const ColoredString& y);

struct QuantumDecode {
  std::size_t irrep = 0;
  std::size_t alpha = 0;
  std::size_t entry = 0;
  double probability = 0.0;
};

/// Squared overlaps closer than this are treated as a tie.
inline constexpr double kDecodeTieTolerance = 1e-6;

/// Projective measurement in the message basis; returns the most likely
/// entry. Throws AmbiguousDecode when the top two overlaps tie.
QuantumDecode decode_quantum(const MessageBasis& basis, const StateVector& psi);

struct DecodeFailure {
  std::size_t message = 0;
  Permutation sigma;
};

struct ZeroErrorReport {
  std::size_t messages_tested = 0;
  std::size_t group_elements_tested = 0;
  std::size_t trials = 0;
  std::vector<DecodeFailure> failures;
  /// Largest squared overlap with any entry other than the transmitted one.
  double max_offdiag_overlap = 0.0;

  bool certified() const { return failures.empty(); }
  /// {"messages", "elements", "failures", "max_offdiag_overlap"}.
  std::string to_json() const;
};

/// Sends every message through the channel and decodes it. With \p exhaustive
/// every group element is applied to every message; otherwise one element per
/// message is drawn with \p seed. Throws InvalidArgument if the group does
/// not match the basis.
ZeroErrorReport verify_zero_error(const PermutationGroup& group, const MessageBasis& basis, bool exhaustive = true,
                                  std::uint64_t seed = 0);

/// W_ab = X^a Z^b with X|j> = |j+1 mod m>, Z|j> = exp(2 pi i j / m)|j>.
struct WeylOperator {
  std::size_t a = 0;
  std::size_t b = 0;
  Eigen::MatrixXcd matrix;
};

/// All m^2 clock-shift operators, ordered by (a, b).
std::vector<WeylOperator> weyl_operators(std::size_t m);

/// Entangled message-ancilla states of one sector: |Phi_mu> and its m^2
/// Weyl-rotated partners (W_ab (x) I)|Phi_mu>, stored densely with index
/// x * m + ancilla.
struct DenseCodingInstance {
  std::size_t irrep = 0;
  std::size_t multiplicity = 0;
  std::uint64_t message_dimension = 0;
  std::vector<Eigen::VectorXcd> entangled_states;
  std::vector<std::pair<std::size_t, std::size_t>> weyl_index;
};

/// Throws InvalidArgument when mu is not a populated sector of \p basis.
DenseCodingInstance dense_coding_instance(const MessageBasis& basis, std::size_t mu);

struct DenseCodingResult {
  std::size_t a = 0;
  std::size_t b = 0;
  double probability = 0.0;
};

/// Encodes (a, b) with W_ab on the message side, scrambles with U(sigma) (x) I
/// and measures in the instance's basis.
DenseCodingResult dense_coding_roundtrip(const MessageBasis& basis, const DenseCodingInstance& instance,
                                         std::size_t a, std::size_t b, const Permutation& sigma);

/// Builds the cyclic basis and instance, then round-trips once.
DenseCodingResult dense_coding_roundtrip(std::size_t n, std::size_t d, std::size_t mu, std::size_t a, std::size_t b,
                                         const Permutation& sigma);

/// Largest entry of |<u_alpha|U(sigma)|u_beta> - omega_n^{mu k} delta| over a
/// sector, where sigma = r^k. Zero (to rounding) for a correct cyclic basis.
double sector_phase_residual(const MessageBasis& basis, std::size_t mu, const Permutation& sigma);

}  // namespace permchan
