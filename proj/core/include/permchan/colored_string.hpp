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
#include <string_view>
#include <vector>

#include "permchan/permutation.hpp"

namespace permchan {

/// A length-n string over the alphabet {0, ..., d-1}.
///
/// Strings map to base-d integers with position 0 as the most significant
/// digit, so integer order and lexicographic order coincide.
class ColoredString {
 public:
  using Symbol = std::uint32_t;

  ColoredString() = default;
  /// Throws InvalidArgument if any symbol is >= d or d == 0.
  ColoredString(std::vector<Symbol> symbols, std::size_t d);

  /// Parses "0011". Symbols 0-9 then a-z; d <= 36 for this notation.
  static ColoredString parse(std::string_view text, std::size_t d);
  static ColoredString from_index(std::uint64_t index, std::size_t n, std::size_t d);

  std::size_t length() const { return symbols_.size(); }
  std::size_t alphabet() const { return alphabet_; }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  const std::vector<Symbol>& symbols() const { return symbols_; }

  std::uint64_t index() const;
  /// "0011"; for d > 36 symbols are written as comma separated decimals.
  std::string to_string() const;

  friend bool operator==(const ColoredString&, const ColoredString&) = default;
  friend auto operator<=>(const ColoredString&, const ColoredString&) = default;

 private:
  std::vector<Symbol> symbols_;
  std::size_t alphabet_ = 0;
};

/// sigma . x with (sigma . x)[i] = x[sigma^{-1}(i)]: the symbol at position
/// j moves to position sigma(j).
ColoredString act_on_string(const Permutation& sigma, const ColoredString& x);

/// Index-level view of the d^n strings of length n, used by the enumeration
/// routines to act on strings without allocating.
class StringSpace {
 public:
  StringSpace(std::size_t n, std::size_t d);

  std::size_t length() const { return n_; }
  std::size_t alphabet() const { return d_; }
  std::uint64_t size() const { return size_; }

  /// Index of sigma . x given the index of x.
  std::uint64_t act(const Permutation& sigma, std::uint64_t index) const;

  /// Writes the digits of \p index into \p digits (size n).
  void digits(std::uint64_t index, std::span<ColoredString::Symbol> digits) const;

 private:
  std::size_t n_;
  std::size_t d_;
  std::uint64_t size_;
  std::vector<std::uint64_t> place_;  // place_[i] = d^(n-1-i)
};

}  // namespace permchan
