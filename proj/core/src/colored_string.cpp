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

#include "permchan/colored_string.hpp"

#include <limits>
#include <sstream>

#include "permchan/error.hpp"

namespace permchan {

namespace {

constexpr std::size_t kMaxCompactAlphabet = 36;

char symbol_char(ColoredString::Symbol s) { return s < 10 ? static_cast<char>('0' + s) : static_cast<char>('a' + s - 10); }

}  // namespace

ColoredString::ColoredString(std::vector<Symbol> symbols, std::size_t d) : symbols_(std::move(symbols)), alphabet_(d) {
  if (d == 0) throw InvalidArgument("alphabet size must be at least 1");
  for (Symbol s : symbols_) {
    if (s >= d) throw InvalidArgument("symbol " + std::to_string(s) + " outside alphabet of size " + std::to_string(d));
  }
}

ColoredString ColoredString::parse(std::string_view text, std::size_t d) {
  std::vector<Symbol> symbols;
  symbols.reserve(text.size());
  for (char c : text) {
    if (c >= '0' && c <= '9') {
      symbols.push_back(static_cast<Symbol>(c - '0'));
    } else if (c >= 'a' && c <= 'z') {
      symbols.push_back(static_cast<Symbol>(c - 'a' + 10));
    } else {
      throw InvalidArgument("invalid symbol '" + std::string(1, c) + "' in string \"" + std::string(text) + "\"");
    }
  }
  return ColoredString(std::move(symbols), d);
}

ColoredString ColoredString::from_index(std::uint64_t index, std::size_t n, std::size_t d) {
  std::vector<Symbol> symbols(n);
  for (std::size_t i = n; i-- > 0;) {
    symbols[i] = static_cast<Symbol>(index % d);
    index /= d;
  }
  if (index != 0) throw InvalidArgument("string index out of range");
  return ColoredString(std::move(symbols), d);
}

std::uint64_t ColoredString::index() const {
  std::uint64_t value = 0;
  for (Symbol s : symbols_) value = value * alphabet_ + s;
  return value;
}

std::string ColoredString::to_string() const {
  std::string out;
  if (alphabet_ <= kMaxCompactAlphabet) {
    out.reserve(symbols_.size());
    for (Symbol s : symbols_) out.push_back(symbol_char(s));
    return out;
  }
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(symbols_[i]);
  }
  return out;
}

ColoredString act_on_string(const Permutation& sigma, const ColoredString& x) {
  if (sigma.degree() != x.length()) {
    throw InvalidArgument("permutation of degree " + std::to_string(sigma.degree()) +
                          " cannot act on a string of length " + std::to_string(x.length()));
  }
  std::vector<ColoredString::Symbol> out(x.length());
  for (std::size_t j = 0; j < x.length(); ++j) out[sigma(static_cast<Permutation::Point>(j))] = x[j];
  return ColoredString(std::move(out), x.alphabet());
}

StringSpace::StringSpace(std::size_t n, std::size_t d) : n_(n), d_(d), place_(n) {
  if (d == 0) throw InvalidArgument("alphabet size must be at least 1");
  std::uint64_t p = 1;
  for (std::size_t i = n; i-- > 0;) {
    place_[i] = p;
    if (d != 1 && p > std::numeric_limits<std::uint64_t>::max() / d) {
      throw BoundExceeded("d^n does not fit in 64 bits");
    }
    p *= d;
  }
  size_ = p;
}

std::uint64_t StringSpace::act(const Permutation& sigma, std::uint64_t index) const {
  std::uint64_t out = 0;
  for (std::size_t j = n_; j-- > 0;) {
    std::uint64_t symbol = index % d_;
    index /= d_;
    out += symbol * place_[sigma(static_cast<Permutation::Point>(j))];
  }
  return out;
}

void StringSpace::digits(std::uint64_t index, std::span<ColoredString::Symbol> digits) const {
  for (std::size_t i = n_; i-- > 0;) {
    digits[i] = static_cast<ColoredString::Symbol>(index % d_);
    index /= d_;
  }
}

}  // namespace permchan
