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

#include "permchan/permutation.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include <boost/container_hash/hash.hpp>

#include "permchan/error.hpp"

namespace permchan {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p]) {
      throw InvalidArgument("image list is not a bijection of {0.." + std::to_string(images_.size()) + "-1}");
    }
    seen[p] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  Permutation p;
  p.images_.resize(n);
  for (std::size_t i = 0; i < n; ++i) p.images_[i] = static_cast<Point>(i);
  return p;
}

Permutation Permutation::from_cycles(std::size_t n, const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Point>(i);
  std::vector<bool> used(n, false);
  for (const auto& cycle : cycles) {
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      Point from = cycle[j];
      if (from >= n || used[from]) throw InvalidArgument("cycles are not disjoint or exceed the degree");
      used[from] = true;
      images[from] = cycle[(j + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv.images_[images_[i]] = static_cast<Point>(i);
  return inv;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::pow(std::int64_t k) const {
  Permutation base = k < 0 ? inverse() : *this;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  Permutation result = identity(degree());
  while (e > 0) {
    if (e & 1) result = compose(base, result);
    base = compose(base, base);
    e >>= 1;
  }
  return result;
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out << ' ';
    out << images_[i];
  }
  return out.str();
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream out;
  bool any = false;
  for (const auto& cycle : cycle_decomposition(*this).cycles) {
    if (cycle.size() < 2) continue;
    any = true;
    out << '(';
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      if (j) out << ',';
      out << cycle[j];
    }
    out << ')';
  }
  return any ? out.str() : "()";
}

Permutation compose(const Permutation& tau, const Permutation& sigma) {
  if (tau.degree() != sigma.degree()) {
    throw InvalidArgument("cannot compose permutations of degree " + std::to_string(tau.degree()) + " and " +
                          std::to_string(sigma.degree()));
  }
  std::vector<Permutation::Point> images(sigma.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = tau(sigma(static_cast<Permutation::Point>(i)));
  return Permutation(std::move(images));
}

Permutation operator*(const Permutation& tau, const Permutation& sigma) { return compose(tau, sigma); }

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  auto images = p.images();
  return boost::hash_range(images.begin(), images.end());
}

CycleDecomposition cycle_decomposition(const Permutation& sigma) {
  CycleDecomposition result;
  std::vector<bool> seen(sigma.degree(), false);
  for (Permutation::Point start = 0; start < sigma.degree(); ++start) {
    if (seen[start]) continue;
    std::vector<Permutation::Point> cycle;
    for (Permutation::Point p = start; !seen[p]; p = sigma(p)) {
      seen[p] = true;
      cycle.push_back(p);
    }
    ++result.cycle_counts[cycle.size()];
    result.cycles.push_back(std::move(cycle));
  }
  result.total_cycles = result.cycles.size();
  return result;
}

std::size_t cycle_count(const Permutation& sigma) {
  std::vector<bool> seen(sigma.degree(), false);
  std::size_t count = 0;
  for (Permutation::Point start = 0; start < sigma.degree(); ++start) {
    if (seen[start]) continue;
    ++count;
    for (Permutation::Point p = start; !seen[p]; p = sigma(p)) seen[p] = true;
  }
  return count;
}

std::vector<std::pair<std::size_t, std::size_t>> cycle_type(const Permutation& sigma) {
  auto counts = cycle_decomposition(sigma).cycle_counts;
  return {counts.rbegin(), counts.rend()};
}

}  // namespace permchan
