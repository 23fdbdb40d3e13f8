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

#include <sstream>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "permchan/error.hpp"
#include "permchan/group.hpp"

using namespace permchan;

TEST(Group, GeneratedFromShiftIsCyclic) {
  const auto group = generate_group({Permutation::from_cycles(4, {{0, 1, 2, 3}})});
  EXPECT_EQ(group.order(), 4u);
  EXPECT_TRUE(group.is_abelian());
}

TEST(Group, TrivialAndEmptyGenerators) {
  EXPECT_EQ(generate_group({Permutation::identity(3)}).order(), 1u);
  EXPECT_EQ(generate_group(3, {}).order(), 1u);
  EXPECT_THROW(generate_group(std::vector<Permutation>{}), InvalidArgument);
  EXPECT_THROW(generate_group({Permutation::identity(3), Permutation::identity(4)}), InvalidArgument);
}

TEST(Group, NamedOrders) {
  for (std::size_t n = 1; n <= 7; ++n) {
    EXPECT_EQ(make_named_group(GroupKind::cyclic, n).order(), n);
    EXPECT_EQ(make_named_group(GroupKind::dihedral, n).order(), oracle::dihedral_elements(n).size());
    EXPECT_EQ(make_named_group(GroupKind::symmetric, n).order(), oracle::symmetric_elements(n).size());
  }
  EXPECT_EQ(make_named_group(GroupKind::dihedral, 5).order(), 10u);
  EXPECT_FALSE(make_named_group(GroupKind::dihedral, 4).is_abelian());
  EXPECT_THROW(make_named_group(GroupKind::cyclic, 0), InvalidArgument);
  EXPECT_THROW(make_named_group(GroupKind::custom, 3), InvalidArgument);
}

TEST(Group, ElementsMatchReferenceSets) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (auto [kind, reference] : {std::pair{GroupKind::cyclic, oracle::cyclic_elements(n)},
                                   std::pair{GroupKind::dihedral, oracle::dihedral_elements(n)}}) {
      const auto group = make_named_group(kind, n);
      for (const auto& images : reference) EXPECT_TRUE(group.contains(Permutation(images)));
    }
  }
}

TEST(Group, ClosureAndIndex) {
  const auto group = make_named_group(GroupKind::dihedral, 6);
  for (const auto& a : group.elements()) {
    EXPECT_TRUE(group.contains(a.inverse()));
    for (const auto& b : group.elements()) EXPECT_TRUE(group.contains(a * b));
  }
  for (std::size_t i = 0; i < group.order(); ++i) EXPECT_EQ(group.index_of(group.element(i)), i);
  EXPECT_FALSE(group.index_of(Permutation::from_cycles(6, {{0, 1}})).has_value());
}

TEST(Group, BoundIsEnforced) {
  Bounds small;
  small.max_group_order = 100;
  EXPECT_THROW(make_named_group(GroupKind::symmetric, 6, small), BoundExceeded);
}

TEST(Group, ConjugacyClassesOfD4) {
  const auto classes = conjugacy_classes(make_named_group(GroupKind::dihedral, 4));
  std::vector<std::size_t> sizes;
  for (const auto& c : classes) sizes.push_back(c.size);
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 1, 2, 2, 2}));
}

TEST(Group, ClassesPartitionTheGroup) {
  for (auto kind : {GroupKind::cyclic, GroupKind::dihedral, GroupKind::symmetric}) {
    const auto group = make_named_group(kind, 5);
    std::size_t total = 0;
    for (const auto& c : conjugacy_classes(group)) {
      total += c.size;
      for (const auto& g : group.elements()) {
        const auto conjugate = g * c.representative * g.inverse();
        EXPECT_NE(std::find(c.members.begin(), c.members.end(), conjugate), c.members.end());
      }
    }
    EXPECT_EQ(total, group.order());
  }
}

TEST(Group, SquareRootCountsMatchBruteForce) {
  const auto group = make_named_group(GroupKind::symmetric, 4);
  const auto plain = oracle::symmetric_elements(4);
  for (const auto& sigma : group.elements()) {
    std::vector<std::uint32_t> images(sigma.images().begin(), sigma.images().end());
    EXPECT_EQ(square_root_count(group, sigma), oracle::square_roots(plain, images));
  }
}

TEST(Group, ReadsGeneratorFiles) {
  std::istringstream in("# ring\n1 2 3 0\n\n0 3 2 1\n");
  const auto generators = read_generators(in);
  ASSERT_EQ(generators.size(), 2u);
  EXPECT_EQ(generate_group(generators).order(), 8u);
  std::istringstream bad("1 1 0\n");
  EXPECT_THROW(read_generators(bad), InvalidArgument);
  std::istringstream mixed("1 0\n0 2 1\n");
  EXPECT_THROW(generate_group(read_generators(mixed)), InvalidArgument);
}
