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
#include <map>
#include <string>

#include <Eigen/Core>

#include "permchan/colored_string.hpp"
#include "permchan/permutation.hpp"

namespace permchan {

using Complex = std::complex<double>;

/// Sparse amplitudes over the computational basis |x_0 ... x_{n-1}>, keyed by
/// the base-d index of the basis string.
class StateVector {
 public:
  using Amplitudes = std::map<std::uint64_t, Complex>;

  StateVector() = default;
  StateVector(std::size_t n, std::size_t d);

  static StateVector basis_state(const ColoredString& x);

  std::size_t length() const { return n_; }
  std::size_t alphabet() const { return d_; }
  const Amplitudes& amplitudes() const { return amplitudes_; }

  Complex amplitude(std::uint64_t index) const;
  void set(std::uint64_t index, Complex value);
  void add(std::uint64_t index, Complex value);

  double norm_squared() const;
  /// Scales to unit norm; throws NumericalError for the zero vector.
  void normalize();

  /// <this|other>. Throws InvalidArgument on shape mismatch.
  Complex inner(const StateVector& other) const;

  /// Dense copy, only for small verification routines.
  Eigen::VectorXcd to_dense() const;

  /// JSON array of {basis_string, re, im} in lexicographic basis order.
  std::string to_json() const;

 private:
  std::size_t n_ = 0;
  std::size_t d_ = 0;
  Amplitudes amplitudes_;
};

/// exp(2 pi i k / n), exact at multiples of a quarter turn.
Complex root_of_unity(std::int64_t k, std::int64_t n);

/// U(sigma)|psi>, with U(sigma)|x> = |sigma x>. Amplitudes are moved, never
/// recombined.
StateVector apply_permutation(const Permutation& sigma, const StateVector& psi);

}  // namespace permchan
