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

#include "permchan/numeric.hpp"

#include <algorithm>
#include <string>

#include "permchan/bounds.hpp"
#include "permchan/error.hpp"

namespace permchan {

BigInt big_pow(std::uint64_t base, std::uint64_t exp) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) is divisible by i at every step.
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt exact_divide(const BigInt& numerator, const BigInt& denominator, const char* context) {
  BigInt quotient;
  BigInt remainder;
  boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
  if (remainder != 0) {
    throw InexactDivision(std::string(context) + ": " + numerator.str() + " is not divisible by " +
                          denominator.str());
  }
  return quotient;
}

std::uint64_t checked_state_count(std::size_t n, std::size_t d, std::uint64_t limit) {
  if (d == 0) throw InvalidArgument("alphabet size must be at least 1");
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (d != 1 && count > limit / d) {
      throw BoundExceeded("d^n = " + std::to_string(d) + "^" + std::to_string(n) + " exceeds the state bound " +
                          std::to_string(limit));
    }
    count *= d;
  }
  if (count > limit) {
    throw BoundExceeded("d^n = " + std::to_string(count) + " exceeds the state bound " + std::to_string(limit));
  }
  return count;
}

}  // namespace permchan
