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

#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "permchan/colored_string.hpp"
#include "permchan/error.hpp"
#include "permchan/permutation.hpp"

using namespace permchan;

namespace {

Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Permutation::Point> images(n);
  std::iota(images.begin(), images.end(), 0u);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(images);
}

}  // namespace

TEST(Permutation, RejectsNonBijections) {
  EXPECT_THROW(Permutation({0, 0, 1}), InvalidArgument);
  EXPECT_THROW(Permutation({0, 3, 1}), InvalidArgument);
  EXPECT_NO_THROW(Permutation(std::vector<Permutation::Point>{}));
}

TEST(Permutation, CompositionAppliesRightFactorFirst) {
  const auto r = Permutation::from_cycles(4, {{0, 1, 2, 3}});
  const auto s = Permutation({0, 3, 2, 1});
  const auto rs = r * s;
  for (Permutation::Point i = 0; i < 4; ++i) EXPECT_EQ(rs(i), r(s(i)));
  // srs = r^-1
  EXPECT_EQ(s * r * s, r.inverse());
}

TEST(Permutation, PowersAndInverse) {
  const auto r = Permutation::from_cycles(5, {{0, 1, 2, 3, 4}});
  EXPECT_TRUE(r.pow(5).is_identity());
  EXPECT_EQ(r.pow(-1), r.inverse());
  EXPECT_EQ(r.pow(7), r.pow(2));
  EXPECT_TRUE(r.pow(0).is_identity());
}

TEST(Permutation, CycleDecomposition) {
  const auto sigma = Permutation::from_cycles(6, {{0, 2}, {1, 3, 4}});
  const auto dec = cycle_decomposition(sigma);
  EXPECT_EQ(dec.total_cycles, 3u);
  EXPECT_EQ(cycle_count(sigma), 3u);
  const std::vector<std::pair<std::size_t, std::size_t>> type{{3, 1}, {2, 1}, {1, 1}};
  EXPECT_EQ(cycle_type(sigma), type);
  EXPECT_EQ(sigma.to_cycle_string(), "(0,2)(1,3,4)");
  EXPECT_EQ(Permutation::identity(3).to_cycle_string(), "()");
  EXPECT_EQ(cycle_count(Permutation::identity(7)), 7u);
}

TEST(Permutation, RandomizedAlgebra) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 9;
    const auto a = random_permutation(n, rng);
    const auto b = random_permutation(n, rng);
    const auto c = random_permutation(n, rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_TRUE((a * a.inverse()).is_identity());
    EXPECT_EQ(cycle_count(a * b), cycle_count(b * a));
    std::vector<std::uint32_t> plain(a.images().begin(), a.images().end());
    EXPECT_EQ(cycle_count(a), oracle::cycles(plain));
  }
}

TEST(ColoredString, ParseIndexRoundTrip) {
  const auto x = ColoredString::parse("0011", 2);
  EXPECT_EQ(x.index(), 3u);
  EXPECT_EQ(ColoredString::from_index(3, 4, 2), x);
  EXPECT_EQ(ColoredString::from_index(5, 3, 3).to_string(), "012");
  EXPECT_THROW(ColoredString::parse("0021", 2), InvalidArgument);
  EXPECT_THROW(ColoredString({0}, 0), InvalidArgument);
  for (std::uint64_t i = 0; i < 81; ++i) EXPECT_EQ(ColoredString::from_index(i, 4, 3).index(), i);
}

TEST(ColoredString, IndexOrderIsLexicographic) {
  for (std::uint64_t i = 0; i + 1 < 64; ++i) {
    EXPECT_LT(ColoredString::from_index(i, 3, 4), ColoredString::from_index(i + 1, 3, 4));
  }
}

TEST(ColoredString, ShiftMovesSymbolsRight) {
  const auto r = Permutation::from_cycles(4, {{0, 1, 2, 3}});
  EXPECT_EQ(act_on_string(r, ColoredString::parse("0001", 2)).to_string(), "1000");
  EXPECT_EQ(act_on_string(r, ColoredString::parse("0011", 2)).to_string(), "1001");
}

TEST(ColoredString, ActionIsLeftAction) {
  std::mt19937_64 rng(11);
  const StringSpace space(5, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_permutation(5, rng);
    const auto b = random_permutation(5, rng);
    const auto x = ColoredString::from_index(rng() % space.size(), 5, 3);
    EXPECT_EQ(act_on_string(a * b, x), act_on_string(a, act_on_string(b, x)));
    EXPECT_EQ(space.act(a, x.index()), act_on_string(a, x).index());
  }
}
