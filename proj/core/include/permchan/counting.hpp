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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permchan/group.hpp"
#include "permchan/numeric.hpp"

namespace permchan {

/// How a count was obtained.
enum class CountMethod {
  burnside,
  polya_ancilla,
  totally_orthogonal,
  cyclic_closed_form,
  dihedral_closed_form,
  symmetric_closed_form,
  oracle,
};

std::string_view to_string(CountMethod method);

/// Message counts for one (group, d). N_q may be undefined when the group is
/// neither handled by a closed form nor certified totally orthogonal and the
/// character-table oracle was not run.
struct CountReport {
  std::size_t n = 0;
  std::size_t d = 0;
  BigInt classical;
  std::optional<BigInt> quantum;
  BigInt ancilla;
  CountMethod classical_method = CountMethod::burnside;
  std::optional<CountMethod> quantum_method;
  CountMethod ancilla_method = CountMethod::polya_ancilla;
  /// Why quantum is absent, when it is.
  std::string quantum_undefined_reason;

  bool quantum_defined() const { return quantum.has_value(); }
};

/// A partition of n as (part length, multiplicity), lengths strictly decreasing.
struct Partition {
  std::vector<std::pair<std::size_t, std::size_t>> parts;
  std::size_t n = 0;
};

/// All partitions of n, generated by decreasing-part recursion.
std::vector<Partition> partitions(std::size_t n);

/// |C_lambda| = n! / prod_j m_j! lambda_j^{m_j}.
BigInt symmetric_class_size(const Partition& lambda);

/// (1/|G|) sum_sigma d^{c(sigma)}.
BigInt count_classical_burnside(const PermutationGroup& group, std::size_t d);

/// (1/|G|) sum_sigma d^{2 c(sigma)}; equals count_classical_burnside(G, d^2).
BigInt count_ancilla_polya(const PermutationGroup& group, std::size_t d);

/// (1/|G|) sum_sigma d^{c(sigma^2)}, valid when every irrep of G is real.
/// With \p certify the character table is computed and NotTotallyOrthogonal
/// is thrown if any Frobenius-Schur indicator differs from +1.
BigInt count_quantum_totally_orthogonal(const PermutationGroup& group, std::size_t d, bool certify);

/// Necklace counts: N_c, N_q = d^n, N_a via gcd cycle counts.
CountReport count_cyclic(std::size_t n, std::size_t d);

/// Bracelet counts. n < 3 falls back to the generic sums on the generated
/// group.
CountReport count_dihedral(std::size_t n, std::size_t d);

/// Stars-and-bars N_c, N_a; N_q from series coefficient extraction.
CountReport count_symmetric(std::size_t n, std::size_t d);

enum class QuantumCountPolicy {
  /// Closed forms and certified total orthogonality only.
  formulas_only,
  /// Fall back to the character-table oracle when no formula applies.
  allow_oracle,
};

/// Counts for an arbitrary group: Burnside and Polya sums for N_c and N_a;
/// N_q by total orthogonality when certified, otherwise by the oracle if
/// permitted and the group is within bounds.
CountReport count_group(const PermutationGroup& group, std::size_t d,
                        QuantumCountPolicy policy = QuantumCountPolicy::allow_oracle, const Bounds& bounds = {});

/// Z_{S_n}(a_1, ..., a_n) summed over partitions of n. \p a needs at least n
/// entries.
Rational cycle_index_symmetric(std::size_t n, std::span<const Rational> a);

/// [x^n] (1-x)^{-d(d+1)/2} (1+x)^{-d(d-1)/2}.
BigInt series_coefficient_nq(std::size_t n, std::size_t d);

/// The tabulated leading-order laws.
enum class AsymptoticKind {
  cyclic_Nc,
  cyclic_Na,
  dihedral_Nc,
  dihedral_Nq,
  dihedral_Na,
  symmetric_Nc,
  symmetric_Nq,
  symmetric_Na,
};

std::string_view to_string(AsymptoticKind kind);
/// Throws InvalidArgument for an unknown name.
AsymptoticKind parse_asymptotic_kind(std::string_view text);

struct AsymptoticEstimate {
  BigFloat leading_value;
  AsymptoticKind formula;
};

AsymptoticEstimate asymptotic_estimate(AsymptoticKind kind, std::size_t n, std::size_t d);

/// The exact count the estimate approximates, from the closed forms.
BigInt exact_count(AsymptoticKind kind, std::size_t n, std::size_t d);

}  // namespace permchan
