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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace permchan {

/// A bijection of {0, ..., n-1} stored in one-line notation: images()[i] is
/// sigma(i).
///
/// Composition convention: (tau * sigma)(i) = tau(sigma(i)), i.e. sigma is
/// applied first. Together with the string action in act_on_string this
/// makes the action a left action: (tau * sigma) . x = tau . (sigma . x).
class Permutation {
 public:
  using Point = std::uint32_t;

  Permutation() = default;

  /// Throws InvalidArgument unless \p images is a bijection of {0..n-1}.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t n);

  /// Builds a permutation of degree \p n from disjoint cycles, e.g.
  /// {{0, 1, 2, 3}} is the shift i -> i+1 mod 4. Omitted points are fixed.
  static Permutation from_cycles(std::size_t n, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point i) const { return images_[i]; }
  std::span<const Point> images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;

  /// sigma^k for any integer k (negative powers use the inverse).
  Permutation pow(std::int64_t k) const;

  /// Space separated one-line notation, "1 2 3 0".
  std::string to_string() const;
  /// Cycle notation with fixed points omitted, "(0,1,2,3)"; "()" for identity.
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

/// tau * sigma, sigma applied first. Throws InvalidArgument on degree mismatch.
Permutation compose(const Permutation& tau, const Permutation& sigma);
Permutation operator*(const Permutation& tau, const Permutation& sigma);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// Disjoint-cycle decomposition. Fixed points appear as 1-cycles so that
/// total_cycles is the number of cycles c(sigma).
struct CycleDecomposition {
  std::vector<std::vector<Permutation::Point>> cycles;
  /// cycle length k -> number of k-cycles.
  std::map<std::size_t, std::size_t> cycle_counts;
  std::size_t total_cycles = 0;
};

/// Cycles are listed in order of their smallest point, each starting there.
CycleDecomposition cycle_decomposition(const Permutation& sigma);

/// c(sigma) without materializing the cycles.
std::size_t cycle_count(const Permutation& sigma);

/// Cycle type as a list of (length, multiplicity) with strictly decreasing
/// lengths.
std::vector<std::pair<std::size_t, std::size_t>> cycle_type(const Permutation& sigma);

}  // namespace permchan
