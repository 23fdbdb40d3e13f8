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

#include "permchan/state_vector.hpp"

#include <cmath>
#include <numbers>

#include <nlohmann/json.hpp>

#include "permchan/error.hpp"

namespace permchan {

StateVector::StateVector(std::size_t n, std::size_t d) : n_(n), d_(d) {
  if (d == 0) throw InvalidArgument("alphabet size must be at least 1");
}

StateVector StateVector::basis_state(const ColoredString& x) {
  StateVector psi(x.length(), x.alphabet());
  psi.set(x.index(), 1.0);
  return psi;
}

Complex StateVector::amplitude(std::uint64_t index) const {
  auto it = amplitudes_.find(index);
  return it == amplitudes_.end() ? Complex{} : it->second;
}

void StateVector::set(std::uint64_t index, Complex value) {
  if (value == Complex{}) {
    amplitudes_.erase(index);
  } else {
    amplitudes_[index] = value;
  }
}

void StateVector::add(std::uint64_t index, Complex value) { set(index, amplitude(index) + value); }

double StateVector::norm_squared() const {
  double sum = 0.0;
  for (const auto& [index, value] : amplitudes_) sum += std::norm(value);
  return sum;
}

void StateVector::normalize() {
  const double norm = std::sqrt(norm_squared());
  if (norm == 0.0) throw NumericalError("cannot normalize the zero vector");
  for (auto& [index, value] : amplitudes_) value /= norm;
}

Complex StateVector::inner(const StateVector& other) const {
  if (n_ != other.n_ || d_ != other.d_) throw InvalidArgument("state vectors live on different spaces");
  Complex sum = 0.0;
  if (amplitudes_.size() <= other.amplitudes_.size()) {
    for (const auto& [index, value] : amplitudes_) sum += std::conj(value) * other.amplitude(index);
  } else {
    for (const auto& [index, value] : other.amplitudes_) sum += std::conj(amplitude(index)) * value;
  }
  return sum;
}

Eigen::VectorXcd StateVector::to_dense() const {
  const StringSpace space(n_, d_);
  Eigen::VectorXcd dense = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(space.size()));
  for (const auto& [index, value] : amplitudes_) dense[static_cast<Eigen::Index>(index)] = value;
  return dense;
}

std::string StateVector::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [index, value] : amplitudes_) {
    out.push_back({{"basis_string", ColoredString::from_index(index, n_, d_).to_string()},
                   {"re", value.real()},
                   {"im", value.imag()}});
  }
  return out.dump();
}

Complex root_of_unity(std::int64_t k, std::int64_t n) {
  k %= n;
  if (k < 0) k += n;
  if ((4 * k) % n == 0) {
    static constexpr Complex kQuarter[] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
    return kQuarter[(4 * k) / n];
  }
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
  return {std::cos(angle), std::sin(angle)};
}

StateVector apply_permutation(const Permutation& sigma, const StateVector& psi) {
  if (sigma.degree() != psi.length()) throw InvalidArgument("permutation degree does not match state length");
  const StringSpace space(psi.length(), psi.alphabet());
  StateVector out(psi.length(), psi.alphabet());
  for (const auto& [index, value] : psi.amplitudes()) out.set(space.act(sigma, index), value);
  return out;
}

}  // namespace permchan
