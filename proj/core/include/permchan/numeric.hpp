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

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace permchan {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
/// 50 decimal digits (~166-bit mantissa) for advisory asymptotic values.
using BigFloat = boost::multiprecision::cpp_bin_float_50;

/// base^exp computed exactly.
BigInt big_pow(std::uint64_t base, std::uint64_t exp);

/// Binomial coefficient C(n, k) computed exactly; zero when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

/// numerator / denominator, throwing InexactDivision when there is a remainder.
BigInt exact_divide(const BigInt& numerator, const BigInt& denominator, const char* context);

}  // namespace permchan
