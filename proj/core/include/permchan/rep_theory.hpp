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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/SparseCore>

#include "permchan/bounds.hpp"
#include "permchan/group.hpp"
#include "permchan/numeric.hpp"

namespace permchan {

using Complex = std::complex<double>;

struct Irrep {
  std::string label;
  std::size_t dimension = 0;
  /// One value per conjugacy class, in the table's class order.
  std::vector<Complex> characters;
};

/// Numerical character table of a finite permutation group.
///
/// Abelian groups are handled exactly by extending characters one generator
/// at a time; for a cyclic group generated by r the irreps come out in the
/// order chi_j(r) = exp(2 pi i j / n). Nonabelian groups use the class
/// algebra: the vectors w_C = |C| chi(g_C) / chi(1) are the common
/// eigenvectors of the class-multiplication matrices, found from one random
/// real combination of them (retried on degenerate spectra).
class CharacterTable {
 public:
  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  const std::vector<Irrep>& irreps() const { return irreps_; }
  std::size_t group_order() const { return group_order_; }

  /// Class index of group.elements()[element_index].
  std::size_t class_of(std::size_t element_index) const { return class_of_[element_index]; }
  /// chi_mu of the element at \p element_index.
  Complex character(std::size_t irrep, std::size_t element_index) const {
    return irreps_[irrep].characters[class_of_[element_index]];
  }

 private:
  friend CharacterTable character_table(const PermutationGroup&, const Bounds&);

  std::vector<ConjugacyClass> classes_;
  std::vector<Irrep> irreps_;
  std::size_t group_order_ = 0;
  std::vector<std::size_t> class_of_;
};

/// Throws BoundExceeded past bounds.max_character_table_order and
/// NumericalError if the table fails its orthogonality checks after retries.
CharacterTable character_table(const PermutationGroup& group, const Bounds& bounds = {});

struct FSIndicators {
  /// +1 real, 0 complex, -1 quaternionic.
  std::vector<int> values;
  std::vector<double> raw;
};

/// nu_mu = (1/|G|) sum_sigma chi_mu(sigma^2), rounded; throws NumericalError
/// when a raw value is further than 1e-9 from {-1, 0, 1}.
FSIndicators frobenius_schur_indicators(const PermutationGroup& group, const CharacterTable& table);

bool is_totally_orthogonal(const PermutationGroup& group, const Bounds& bounds = {});

struct MultiplicityVector {
  /// m_mu per irrep, in table order.
  std::vector<std::uint64_t> multiplicities;
  /// per_orbit[j][mu] = m_{j,mu}, when requested.
  std::optional<std::vector<std::vector<std::uint64_t>>> per_orbit;
};

/// Multiplicities of each irrep in the permutation representation on
/// (C^d)^{(x) n}, whose character is d^{c(sigma)}. Throws NumericalError
/// when a value is further than 1e-6 from an integer.
MultiplicityVector ambient_multiplicities(const PermutationGroup& group, const CharacterTable& table, std::size_t d,
                                          bool per_orbit_breakdown = false, const Bounds& bounds = {});

/// sum_mu m_mu.
BigInt nq_oracle(const MultiplicityVector& m);
/// sum_mu m_mu^2.
BigInt na_oracle(const MultiplicityVector& m);

/// Convenience: table + multiplicities + sum.
BigInt nq_oracle(const PermutationGroup& group, std::size_t d, const Bounds& bounds = {});
BigInt na_oracle(const PermutationGroup& group, std::size_t d, const Bounds& bounds = {});

using SparseMatrix = Eigen::SparseMatrix<Complex>;

/// P_mu = (dim_mu / |G|) sum_sigma conj(chi_mu(sigma)) U(sigma) on the d^n
/// dimensional space, with U(sigma)|x> = |sigma x>. Throws BoundExceeded past
/// bounds.max_projector_dimension.
SparseMatrix isotypic_projector(const PermutationGroup& group, const CharacterTable& table, std::size_t d,
                                std::size_t irrep, const Bounds& bounds = {});

}  // namespace permchan
