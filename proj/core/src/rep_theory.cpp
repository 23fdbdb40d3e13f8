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

#include "permchan/rep_theory.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "permchan/colored_string.hpp"
#include "permchan/error.hpp"

namespace permchan {

namespace {

constexpr double kOrthogonalityTolerance = 1e-9;
constexpr double kIndicatorTolerance = 1e-9;
constexpr double kMultiplicityTolerance = 1e-6;
constexpr int kMaxEigenAttempts = 16;

/// A point of Q/Z, i.e. the phase exp(2 pi i num/den).
struct Phase {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Phase make(std::int64_t num, std::int64_t den) {
    num %= den;
    if (num < 0) num += den;
    const std::int64_t g = std::gcd(num, den);
    return {num / g, den / g};
  }
  friend Phase operator+(Phase a, Phase b) {
    const std::int64_t l = std::lcm(a.den, b.den);
    return make(a.num * (l / a.den) + b.num * (l / b.den), l);
  }
  Phase times(std::int64_t k) const { return make(num * k, den); }

  Complex value() const {
    // Quarter turns are returned exactly so that e.g. C_4 has characters
    // exactly {1, i, -1, -i}.
    if ((4 * num) % den == 0) {
      switch ((4 * num) / den) {
        case 0:
          return {1.0, 0.0};
        case 1:
          return {0.0, 1.0};
        case 2:
          return {-1.0, 0.0};
        case 3:
          return {0.0, -1.0};
      }
    }
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
    return {std::cos(angle), std::sin(angle)};
  }
};

/// Linear characters of an abelian group, built by adjoining one generator at
/// a time. If g^m is the first power of g inside the current subgroup H, a
/// character chi of H extends to <H, g> in exactly m ways, chi(g) being the
/// m-th roots of chi(g^m).
std::vector<std::vector<Complex>> abelian_characters(const PermutationGroup& group) {
  constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);
  const std::size_t order = group.order();
  std::vector<std::size_t> subgroup{*group.index_of(Permutation::identity(group.degree()))};
  std::vector<std::size_t> position(order, kAbsent);
  position[subgroup[0]] = 0;
  std::vector<std::vector<Phase>> characters{{Phase{}}};

  for (const auto& g : group.generators()) {
    if (position[*group.index_of(g)] != kAbsent) continue;
    std::vector<std::size_t> powers{*group.index_of(Permutation::identity(group.degree()))};
    Permutation power = g;
    while (position[*group.index_of(power)] == kAbsent) {
      powers.push_back(*group.index_of(power));
      power = g * power;
    }
    const auto m = static_cast<std::int64_t>(powers.size());
    const std::size_t landing = position[*group.index_of(power)];

    std::vector<std::size_t> extended;
    extended.reserve(subgroup.size() * powers.size());
    for (std::size_t e = 0; e < powers.size(); ++e) {
      for (std::size_t h : subgroup) extended.push_back(*group.index_of(group.element(h) * group.element(powers[e])));
    }
    std::vector<std::vector<Phase>> next;
    for (const auto& chi : characters) {
      for (std::int64_t s = 0; s < m; ++s) {
        // m * phase(g) = phase(g^m) + s.
        const Phase base = chi[landing];
        const Phase at_g = Phase::make(base.num + s * base.den, base.den * m);
        std::vector<Phase> values;
        values.reserve(extended.size());
        for (std::size_t e = 0; e < powers.size(); ++e) {
          const Phase shift = at_g.times(static_cast<std::int64_t>(e));
          for (std::size_t h = 0; h < subgroup.size(); ++h) values.push_back(chi[h] + shift);
        }
        next.push_back(std::move(values));
      }
    }
    subgroup = std::move(extended);
    for (std::size_t i = 0; i < subgroup.size(); ++i) position[subgroup[i]] = i;
    characters = std::move(next);
  }
  if (subgroup.size() != order) throw NumericalError("generators do not span the abelian group");

  std::vector<std::vector<Complex>> out;
  out.reserve(characters.size());
  for (const auto& chi : characters) {
    std::vector<Complex> by_element(order);
    for (std::size_t i = 0; i < order; ++i) by_element[i] = chi[position[i]].value();
    out.push_back(std::move(by_element));
  }
  return out;
}

/// Class-algebra structure constants: result[j](k, l) is the number of
/// x in C_j with x^{-1} z in C_k, for a fixed z in C_l. The vector
/// w_l = |C_l| chi(C_l) / chi(1) satisfies A_j w = w_j w for every j.
std::vector<Eigen::MatrixXd> class_matrices(const PermutationGroup& group, const std::vector<ConjugacyClass>& classes,
                                            const std::vector<std::size_t>& class_of) {
  const std::size_t k = classes.size();
  std::vector<Eigen::MatrixXd> matrices(k, Eigen::MatrixXd::Zero(k, k));
  std::vector<Permutation> inverses;
  inverses.reserve(group.order());
  for (const auto& x : group.elements()) inverses.push_back(x.inverse());
  for (std::size_t l = 0; l < k; ++l) {
    const Permutation& z = classes[l].representative;
    for (std::size_t x = 0; x < group.order(); ++x) {
      const std::size_t y = *group.index_of(inverses[x] * z);
      matrices[class_of[x]](static_cast<Eigen::Index>(class_of[y]), static_cast<Eigen::Index>(l)) += 1.0;
    }
  }
  return matrices;
}

std::vector<std::vector<Complex>> nonabelian_characters(const PermutationGroup& group,
                                                        const std::vector<ConjugacyClass>& classes,
                                                        const std::vector<std::size_t>& class_of) {
  const auto k = static_cast<Eigen::Index>(classes.size());
  const auto matrices = class_matrices(group, classes, class_of);
  std::mt19937_64 rng(0x5eed);
  std::uniform_real_distribution<double> coefficient(0.5, 1.5);

  for (int attempt = 0; attempt < kMaxEigenAttempts; ++attempt) {
    Eigen::MatrixXd combined = Eigen::MatrixXd::Zero(k, k);
    for (const auto& m : matrices) combined += coefficient(rng) * m;
    Eigen::EigenSolver<Eigen::MatrixXd> solver(combined);
    if (solver.info() != Eigen::Success) continue;
    const Eigen::VectorXcd eigenvalues = solver.eigenvalues();
    const double scale = std::max(1.0, eigenvalues.cwiseAbs().maxCoeff());
    bool separated = true;
    for (Eigen::Index i = 0; i < k && separated; ++i) {
      for (Eigen::Index j = i + 1; j < k; ++j) {
        if (std::abs(eigenvalues[i] - eigenvalues[j]) < 1e-6 * scale) {
          separated = false;
          break;
        }
      }
    }
    if (!separated) continue;

    const Eigen::MatrixXcd vectors = solver.eigenvectors();
    std::vector<std::vector<Complex>> result;
    bool ok = true;
    for (Eigen::Index col = 0; col < k && ok; ++col) {
      Eigen::VectorXcd w = vectors.col(col);
      if (std::abs(w[0]) < 1e-12) {
        ok = false;
        break;
      }
      w /= w[0];  // the identity class has w = 1
      for (Eigen::Index j = 0; j < k; ++j) {
        const Eigen::VectorXcd residual = matrices[static_cast<std::size_t>(j)].cast<Complex>() * w - w[j] * w;
        if (residual.norm() > 1e-7 * std::max(1.0, w.norm() * std::abs(w[j]))) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
      // sum_C |C| |chi(C)|^2 = |G| fixes chi(1).
      double weighted = 0.0;
      for (Eigen::Index c = 0; c < k; ++c) weighted += std::norm(w[c]) / static_cast<double>(classes[c].size);
      const double dimension = std::sqrt(static_cast<double>(group.order()) / weighted);
      std::vector<Complex> chi(static_cast<std::size_t>(k));
      for (Eigen::Index c = 0; c < k; ++c) chi[c] = dimension * w[c] / static_cast<double>(classes[c].size);
      result.push_back(std::move(chi));
    }
    if (ok) return result;
  }
  throw NumericalError("class-algebra eigenvectors did not separate after " + std::to_string(kMaxEigenAttempts) +
                       " attempts");
}

Complex snap(Complex z) {
  auto clean = [](double v) {
    const double r = std::round(v);
    return std::abs(v - r) < 1e-12 ? r : v;
  };
  return {clean(z.real()), clean(z.imag())};
}

void validate_table(const CharacterTable& table) {
  const auto& classes = table.classes();
  const auto& irreps = table.irreps();
  if (irreps.size() != classes.size()) throw NumericalError("number of irreps differs from number of classes");
  std::size_t dimension_squares = 0;
  for (const auto& irrep : irreps) dimension_squares += irrep.dimension * irrep.dimension;
  if (dimension_squares != table.group_order()) throw NumericalError("irrep dimensions do not satisfy sum dim^2 = |G|");
  for (std::size_t mu = 0; mu < irreps.size(); ++mu) {
    for (std::size_t nu = mu; nu < irreps.size(); ++nu) {
      Complex inner = 0.0;
      for (std::size_t c = 0; c < classes.size(); ++c) {
        inner += static_cast<double>(classes[c].size) * irreps[mu].characters[c] * std::conj(irreps[nu].characters[c]);
      }
      inner /= static_cast<double>(table.group_order());
      const double expected = mu == nu ? 1.0 : 0.0;
      if (std::abs(inner - expected) > kOrthogonalityTolerance) {
        throw NumericalError("character rows " + std::to_string(mu) + " and " + std::to_string(nu) +
                             " violate orthogonality");
      }
    }
  }
}

bool irrep_precedes(const Irrep& a, const Irrep& b) {
  if (a.dimension != b.dimension) return a.dimension < b.dimension;
  for (std::size_t c = 0; c < a.characters.size(); ++c) {
    const double ar = std::round(a.characters[c].real() * 1e6);
    const double br = std::round(b.characters[c].real() * 1e6);
    if (ar != br) return ar > br;
    const double ai = std::round(a.characters[c].imag() * 1e6);
    const double bi = std::round(b.characters[c].imag() * 1e6);
    if (ai != bi) return ai > bi;
  }
  return false;
}

}  // namespace

CharacterTable character_table(const PermutationGroup& group, const Bounds& bounds) {
  if (group.order() > bounds.max_character_table_order) {
    throw BoundExceeded("group order " + std::to_string(group.order()) + " exceeds the character-table bound " +
                        std::to_string(bounds.max_character_table_order));
  }
  CharacterTable table;
  table.group_order_ = group.order();
  table.classes_ = conjugacy_classes(group);
  table.class_of_.assign(group.order(), 0);
  for (std::size_t c = 0; c < table.classes_.size(); ++c) {
    for (std::size_t idx : table.classes_[c].member_indices) table.class_of_[idx] = c;
  }

  if (group.is_abelian()) {
    // Every class is a singleton and, scanning elements in order, class c
    // holds element c.
    const auto by_element = abelian_characters(group);
    for (std::size_t mu = 0; mu < by_element.size(); ++mu) {
      Irrep irrep;
      irrep.label = "chi_" + std::to_string(mu);
      irrep.dimension = 1;
      irrep.characters.resize(table.classes_.size());
      for (std::size_t c = 0; c < table.classes_.size(); ++c) {
        irrep.characters[c] = by_element[mu][table.classes_[c].member_indices.front()];
      }
      table.irreps_.push_back(std::move(irrep));
    }
  } else {
    for (auto& chi : nonabelian_characters(group, table.classes_, table.class_of_)) {
      Irrep irrep;
      const double dim = chi.front().real();
      if (std::abs(dim - std::round(dim)) > kMultiplicityTolerance) {
        throw NumericalError("irrep dimension " + std::to_string(dim) + " is not an integer");
      }
      irrep.dimension = static_cast<std::size_t>(std::llround(dim));
      for (auto& value : chi) value = snap(value);
      irrep.characters = std::move(chi);
      table.irreps_.push_back(std::move(irrep));
    }
    std::sort(table.irreps_.begin(), table.irreps_.end(), irrep_precedes);
    for (std::size_t mu = 0; mu < table.irreps_.size(); ++mu) table.irreps_[mu].label = "chi_" + std::to_string(mu);
  }
  validate_table(table);
  return table;
}

FSIndicators frobenius_schur_indicators(const PermutationGroup& group, const CharacterTable& table) {
  if (table.group_order() != group.order()) throw InvalidArgument("character table does not belong to this group");
  std::vector<std::size_t> square_class(group.order());
  for (std::size_t i = 0; i < group.order(); ++i) {
    square_class[i] = table.class_of(*group.index_of(group.element(i) * group.element(i)));
  }
  FSIndicators fs;
  for (const auto& irrep : table.irreps()) {
    Complex sum = 0.0;
    for (std::size_t i = 0; i < group.order(); ++i) sum += irrep.characters[square_class[i]];
    sum /= static_cast<double>(group.order());
    const double rounded = std::round(sum.real());
    if (std::abs(sum - Complex(rounded, 0.0)) > kIndicatorTolerance || std::abs(rounded) > 1.0) {
      throw NumericalError("Frobenius-Schur indicator of " + irrep.label + " is " + std::to_string(sum.real()) +
                           "; not within tolerance of -1, 0 or 1");
    }
    fs.values.push_back(static_cast<int>(rounded));
    fs.raw.push_back(sum.real());
  }
  return fs;
}

bool is_totally_orthogonal(const PermutationGroup& group, const Bounds& bounds) {
  const CharacterTable table = character_table(group, bounds);
  const FSIndicators fs = frobenius_schur_indicators(group, table);
  return std::all_of(fs.values.begin(), fs.values.end(), [](int v) { return v == 1; });
}

MultiplicityVector ambient_multiplicities(const PermutationGroup& group, const CharacterTable& table, std::size_t d,
                                          bool per_orbit_breakdown, const Bounds& bounds) {
  const std::uint64_t dimension = checked_state_count(group.degree(), d, bounds.max_states);
  const auto& classes = table.classes();
  auto round_multiplicity = [](Complex value, const std::string& what) -> std::uint64_t {
    const double rounded = std::round(value.real());
    if (std::abs(value - Complex(rounded, 0.0)) > kMultiplicityTolerance || rounded < 0.0) {
      throw NumericalError(what + " = " + std::to_string(value.real()) + " is not a nonnegative integer");
    }
    return static_cast<std::uint64_t>(rounded);
  };

  MultiplicityVector result;
  for (const auto& irrep : table.irreps()) {
    Complex sum = 0.0;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      const double fixed = std::pow(static_cast<double>(d), static_cast<double>(cycle_count(classes[c].representative)));
      sum += static_cast<double>(classes[c].size) * fixed * std::conj(irrep.characters[c]);
    }
    result.multiplicities.push_back(
        round_multiplicity(sum / static_cast<double>(group.order()), "multiplicity of " + irrep.label));
  }
  std::uint64_t total = 0;
  for (std::size_t mu = 0; mu < result.multiplicities.size(); ++mu) {
    total += result.multiplicities[mu] * table.irreps()[mu].dimension;
  }
  if (total != dimension) throw NumericalError("multiplicities do not satisfy sum m_mu dim_mu = d^n");

  if (per_orbit_breakdown) {
    StringSpace space(group.degree(), d);
    std::vector<bool> seen(dimension, false);
    std::vector<std::vector<std::uint64_t>> per_orbit;
    for (std::uint64_t start = 0; start < dimension; ++start) {
      if (seen[start]) continue;
      std::vector<std::uint64_t> members;
      for (const auto& sigma : group.elements()) members.push_back(space.act(sigma, start));
      std::sort(members.begin(), members.end());
      members.erase(std::unique(members.begin(), members.end()), members.end());
      for (auto x : members) seen[x] = true;
      // Character of the permutation representation on one orbit.
      std::vector<double> fixed(group.order(), 0.0);
      for (std::size_t i = 0; i < group.order(); ++i) {
        for (auto x : members) {
          if (space.act(group.element(i), x) == x) fixed[i] += 1.0;
        }
      }
      std::vector<std::uint64_t> row;
      for (std::size_t mu = 0; mu < table.irreps().size(); ++mu) {
        Complex sum = 0.0;
        for (std::size_t i = 0; i < group.order(); ++i) sum += fixed[i] * std::conj(table.character(mu, i));
        row.push_back(round_multiplicity(sum / static_cast<double>(group.order()), "orbit multiplicity"));
      }
      per_orbit.push_back(std::move(row));
    }
    result.per_orbit = std::move(per_orbit);
  }
  return result;
}

BigInt nq_oracle(const MultiplicityVector& m) {
  BigInt sum = 0;
  for (auto value : m.multiplicities) sum += value;
  return sum;
}

BigInt na_oracle(const MultiplicityVector& m) {
  BigInt sum = 0;
  for (auto value : m.multiplicities) sum += BigInt(value) * value;
  return sum;
}

BigInt nq_oracle(const PermutationGroup& group, std::size_t d, const Bounds& bounds) {
  return nq_oracle(ambient_multiplicities(group, character_table(group, bounds), d, false, bounds));
}

BigInt na_oracle(const PermutationGroup& group, std::size_t d, const Bounds& bounds) {
  return na_oracle(ambient_multiplicities(group, character_table(group, bounds), d, false, bounds));
}

SparseMatrix isotypic_projector(const PermutationGroup& group, const CharacterTable& table, std::size_t d,
                                std::size_t irrep, const Bounds& bounds) {
  if (irrep >= table.irreps().size()) throw InvalidArgument("irrep index out of range");
  const std::uint64_t dimension = checked_state_count(group.degree(), d, bounds.max_projector_dimension);
  StringSpace space(group.degree(), d);
  const double scale = static_cast<double>(table.irreps()[irrep].dimension) / static_cast<double>(group.order());
  std::vector<Eigen::Triplet<Complex>> triplets;
  triplets.reserve(static_cast<std::size_t>(dimension) * group.order());
  for (std::size_t i = 0; i < group.order(); ++i) {
    const Complex coefficient = scale * std::conj(table.character(irrep, i));
    if (std::abs(coefficient) == 0.0) continue;
    for (std::uint64_t x = 0; x < dimension; ++x) {
      triplets.emplace_back(static_cast<int>(space.act(group.element(i), x)), static_cast<int>(x), coefficient);
    }
  }
  SparseMatrix projector(static_cast<Eigen::Index>(dimension), static_cast<Eigen::Index>(dimension));
  projector.setFromTriplets(triplets.begin(), triplets.end());
  projector.prune(Complex(0.0, 0.0), 1e-14);
  return projector;
}

}  // namespace permchan
