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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "permchan/counting.hpp"
#include "permchan/error.hpp"
#include "permchan/rep_theory.hpp"

using namespace permchan;

namespace {

std::vector<oracle::Images> plain_elements(const PermutationGroup& group) {
  std::vector<oracle::Images> out;
  for (const auto& g : group.elements()) out.emplace_back(g.images().begin(), g.images().end());
  return out;
}

/// Library characters as functions on group elements.
std::vector<oracle::Character> element_characters(const PermutationGroup& group, const CharacterTable& table) {
  std::vector<oracle::Character> out;
  for (std::size_t mu = 0; mu < table.irreps().size(); ++mu) {
    oracle::Character chi;
    for (std::size_t g = 0; g < group.order(); ++g) chi.push_back(table.character(mu, g));
    out.push_back(chi);
  }
  return out;
}

/// Library characters re-indexed onto the oracle's element order.
std::vector<oracle::Character> reindexed(const PermutationGroup& group, const CharacterTable& table,
                                         const std::vector<oracle::Images>& order) {
  std::vector<oracle::Character> out;
  for (std::size_t mu = 0; mu < table.irreps().size(); ++mu) {
    oracle::Character chi;
    for (const auto& images : order) chi.push_back(table.character(mu, *group.index_of(Permutation(images))));
    out.push_back(chi);
  }
  return out;
}

bool same_character(const oracle::Character& a, const oracle::Character& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > 1e-9) return false;
  }
  return true;
}

/// Every reference character appears exactly once in \p got.
void expect_same_table(const std::vector<oracle::Character>& got, const std::vector<oracle::Character>& want) {
  ASSERT_EQ(got.size(), want.size());
  for (const auto& chi : want) {
    const auto hits = std::count_if(got.begin(), got.end(), [&](const auto& c) { return same_character(c, chi); });
    EXPECT_EQ(hits, 1);
  }
}

}  // namespace

TEST(CharacterTable, OrthogonalityAndDimensions) {
  for (auto kind : {GroupKind::cyclic, GroupKind::dihedral, GroupKind::symmetric}) {
    for (std::size_t n = 1; n <= 5; ++n) {
      const auto group = make_named_group(kind, n);
      const auto table = character_table(group);
      std::size_t dims = 0;
      for (const auto& irrep : table.irreps()) dims += irrep.dimension * irrep.dimension;
      EXPECT_EQ(dims, group.order());
      EXPECT_EQ(table.irreps().size(), table.classes().size());
      const auto chars = element_characters(group, table);
      for (std::size_t a = 0; a < chars.size(); ++a) {
        for (std::size_t b = 0; b < chars.size(); ++b) {
          Complex inner = 0.0;
          for (std::size_t g = 0; g < group.order(); ++g) inner += std::conj(chars[a][g]) * chars[b][g];
          inner /= double(group.order());
          EXPECT_NEAR(std::abs(inner - Complex(a == b ? 1.0 : 0.0)), 0.0, 1e-9);
        }
      }
    }
  }
}

TEST(CharacterTable, MatchesTextbookTables) {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto group = make_named_group(GroupKind::cyclic, n);
    const auto order = oracle::cyclic_elements(n);
    expect_same_table(reindexed(group, character_table(group), order), oracle::cyclic_characters(n));
  }
  for (std::size_t n = 3; n <= 8; ++n) {
    const auto group = make_named_group(GroupKind::dihedral, n);
    const auto order = oracle::dihedral_elements(n);
    expect_same_table(reindexed(group, character_table(group), order), oracle::dihedral_characters(n));
  }
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto group = make_named_group(GroupKind::symmetric, n);
    const auto order = oracle::symmetric_elements(n);
    expect_same_table(reindexed(group, character_table(group), order), oracle::symmetric_characters(n));
  }
}

TEST(CharacterTable, CyclicFourIsExact) {
  const auto group = make_named_group(GroupKind::cyclic, 4);
  const auto table = character_table(group);
  const auto r = *group.index_of(cyclic_shift(4));
  std::vector<Complex> on_generator;
  for (std::size_t mu = 0; mu < 4; ++mu) on_generator.push_back(table.character(mu, r));
  EXPECT_EQ(on_generator, (std::vector<Complex>{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}));
}

TEST(CharacterTable, BoundIsEnforced) {
  Bounds small;
  small.max_character_table_order = 100;
  EXPECT_THROW(character_table(make_named_group(GroupKind::symmetric, 5), small), BoundExceeded);
}

TEST(Indicators, KnownValues) {
  const auto c4 = make_named_group(GroupKind::cyclic, 4);
  EXPECT_EQ(frobenius_schur_indicators(c4, character_table(c4)).values, (std::vector<int>{1, 0, 1, 0}));
  EXPECT_FALSE(is_totally_orthogonal(c4));
  EXPECT_TRUE(is_totally_orthogonal(make_named_group(GroupKind::cyclic, 2)));
  for (std::size_t n = 3; n <= 7; ++n) {
    EXPECT_TRUE(is_totally_orthogonal(make_named_group(GroupKind::dihedral, n)));
    EXPECT_FALSE(is_totally_orthogonal(make_named_group(GroupKind::cyclic, n)));
  }
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_TRUE(is_totally_orthogonal(make_named_group(GroupKind::symmetric, n)));
  // The quaternion group has a quaternionic irrep.
  const auto q8 = generate_group({Permutation::from_cycles(8, {{0, 1, 2, 3}, {4, 5, 6, 7}}),
                                  Permutation::from_cycles(8, {{0, 4, 2, 6}, {1, 7, 3, 5}})});
  ASSERT_EQ(q8.order(), 8u);
  const auto fs = frobenius_schur_indicators(q8, character_table(q8));
  EXPECT_EQ(std::count(fs.values.begin(), fs.values.end(), -1), 1);
  EXPECT_EQ(fs.values, oracle::indicators(plain_elements(q8), element_characters(q8, character_table(q8))));
}

TEST(Multiplicities, AgreeWithTextbookCharacters) {
  for (std::size_t d = 1; d <= 3; ++d) {
    for (std::size_t n = 3; n <= 6; ++n) {
      const auto group = make_named_group(GroupKind::dihedral, n);
      auto want = oracle::multiplicities(oracle::dihedral_elements(n), oracle::dihedral_characters(n), d);
      auto got = ambient_multiplicities(group, character_table(group), d).multiplicities;
      std::sort(want.begin(), want.end());
      std::sort(got.begin(), got.end());
      EXPECT_EQ(got, want);
    }
    for (std::size_t n = 2; n <= 5; ++n) {
      const auto group = make_named_group(GroupKind::symmetric, n);
      auto want = oracle::multiplicities(oracle::symmetric_elements(n), oracle::symmetric_characters(n), d);
      auto got = ambient_multiplicities(group, character_table(group), d).multiplicities;
      std::sort(want.begin(), want.end());
      std::sort(got.begin(), got.end());
      EXPECT_EQ(got, want);
    }
  }
}

TEST(Multiplicities, WorkedExample) {
  const auto group = make_named_group(GroupKind::cyclic, 4);
  const auto m = ambient_multiplicities(group, character_table(group), 2, true);
  EXPECT_EQ(m.multiplicities, (std::vector<std::uint64_t>{6, 3, 4, 3}));
  EXPECT_EQ(nq_oracle(m), 16);
  EXPECT_EQ(na_oracle(m), 70);
  ASSERT_TRUE(m.per_orbit.has_value());
  EXPECT_EQ(m.per_orbit->size(), 6u);
  EXPECT_EQ((*m.per_orbit)[3], (std::vector<std::uint64_t>{1, 0, 1, 0}));
}

TEST(Multiplicities, OracleIdentities) {
  for (auto kind : {GroupKind::cyclic, GroupKind::dihedral, GroupKind::symmetric}) {
    for (std::size_t n = 1; n <= 5; ++n) {
      const auto group = make_named_group(kind, n);
      const auto table = character_table(group);
      for (std::size_t d = 1; d <= 3; ++d) {
        const auto m = ambient_multiplicities(group, table, d);
        std::uint64_t dim = 0;
        for (std::size_t mu = 0; mu < m.multiplicities.size(); ++mu) dim += m.multiplicities[mu] * table.irreps()[mu].dimension;
        EXPECT_EQ(BigInt(dim), big_pow(d, n));
        EXPECT_EQ(na_oracle(m), count_ancilla_polya(group, d));
        if (kind == GroupKind::cyclic) EXPECT_EQ(nq_oracle(m), big_pow(d, n));
        if (is_totally_orthogonal(group)) EXPECT_EQ(nq_oracle(m), count_quantum_totally_orthogonal(group, d, true));
      }
    }
  }
}

TEST(Projector, IsIdempotentWithTraceDimTimesMultiplicity) {
  const auto group = make_named_group(GroupKind::dihedral, 4);
  const auto table = character_table(group);
  const auto m = ambient_multiplicities(group, table, 2);
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(16, 16);
  for (std::size_t mu = 0; mu < table.irreps().size(); ++mu) {
    const Eigen::MatrixXcd p = Eigen::MatrixXcd(isotypic_projector(group, table, 2, mu));
    EXPECT_LT((p * p - p).norm(), 1e-9);
    EXPECT_LT((p.adjoint() - p).norm(), 1e-9);
    EXPECT_NEAR(p.trace().real(), double(m.multiplicities[mu] * table.irreps()[mu].dimension), 1e-9);
    sum += p;
  }
  EXPECT_LT((sum - Eigen::MatrixXcd::Identity(16, 16)).norm(), 1e-9);
}
