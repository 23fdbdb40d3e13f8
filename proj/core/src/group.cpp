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

#include "permchan/group.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "permchan/error.hpp"

namespace permchan {

std::string_view to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::cyclic:
      return "cyclic";
    case GroupKind::dihedral:
      return "dihedral";
    case GroupKind::symmetric:
      return "symmetric";
    case GroupKind::custom:
      return "custom";
  }
  return "custom";
}

GroupKind parse_group_kind(std::string_view text) {
  for (GroupKind kind : {GroupKind::cyclic, GroupKind::dihedral, GroupKind::symmetric, GroupKind::custom}) {
    if (text == to_string(kind)) return kind;
  }
  throw InvalidArgument("unknown group kind \"" + std::string(text) + "\"");
}

PermutationGroup::PermutationGroup(std::size_t degree, std::vector<Permutation> elements,
                                   std::vector<Permutation> generators, GroupKind kind)
    : degree_(degree), elements_(std::move(elements)), generators_(std::move(generators)), kind_(kind) {
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
}

PermutationGroup PermutationGroup::from_closed_elements(std::size_t degree, std::vector<Permutation> elements,
                                                        std::vector<Permutation> generators, GroupKind kind) {
  for (const auto& e : elements) {
    if (e.degree() != degree) throw InvalidArgument("element degree does not match group degree");
  }
  return PermutationGroup(degree, std::move(elements), std::move(generators), kind);
}

bool PermutationGroup::contains(const Permutation& sigma) const { return index_.contains(sigma); }

std::optional<std::size_t> PermutationGroup::index_of(const Permutation& sigma) const {
  auto it = index_.find(sigma);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool PermutationGroup::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    for (std::size_t j = i + 1; j < generators_.size(); ++j) {
      if (generators_[i] * generators_[j] != generators_[j] * generators_[i]) return false;
    }
  }
  return true;
}

PermutationGroup generate_group(std::size_t degree, const std::vector<Permutation>& generators, const Bounds& bounds) {
  for (const auto& g : generators) {
    if (g.degree() != degree) {
      throw InvalidArgument("generator of degree " + std::to_string(g.degree()) + " in a group of degree " +
                            std::to_string(degree));
    }
  }
  std::vector<Permutation> elements{Permutation::identity(degree)};
  std::unordered_set<Permutation, PermutationHash> seen{elements.front()};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& s : generators) {
      Permutation next = s * elements[head];
      if (seen.contains(next)) continue;
      if (elements.size() >= bounds.max_group_order) {
        throw BoundExceeded("group order exceeds the bound " + std::to_string(bounds.max_group_order));
      }
      seen.insert(next);
      elements.push_back(std::move(next));
    }
  }
  return PermutationGroup(degree, std::move(elements), generators, GroupKind::custom);
}

PermutationGroup generate_group(const std::vector<Permutation>& generators, const Bounds& bounds) {
  if (generators.empty()) throw InvalidArgument("cannot infer the degree of an empty generator list");
  return generate_group(generators.front().degree(), generators, bounds);
}

Permutation cyclic_shift(std::size_t n) {
  std::vector<Permutation::Point> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Permutation::Point>((i + 1) % n);
  return Permutation(std::move(images));
}

Permutation reflection(std::size_t n) {
  std::vector<Permutation::Point> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Permutation::Point>((n - i) % n);
  return Permutation(std::move(images));
}

PermutationGroup make_named_group(GroupKind kind, std::size_t n, const Bounds& bounds) {
  if (n == 0) throw InvalidArgument("group degree must be at least 1");
  const Permutation r = cyclic_shift(n);
  switch (kind) {
    case GroupKind::cyclic: {
      if (n > bounds.max_group_order) throw BoundExceeded("cyclic group order exceeds the bound");
      std::vector<Permutation> elements;
      elements.reserve(n);
      Permutation power = Permutation::identity(n);
      for (std::size_t k = 0; k < n; ++k, power = r * power) elements.push_back(power);
      return PermutationGroup(n, std::move(elements), {r}, GroupKind::cyclic);
    }
    case GroupKind::dihedral: {
      if (2 * n > bounds.max_group_order) throw BoundExceeded("dihedral group order exceeds the bound");
      const Permutation s = reflection(n);
      std::vector<Permutation> elements;
      std::unordered_set<Permutation, PermutationHash> seen;
      Permutation power = Permutation::identity(n);
      std::vector<Permutation> rotations;
      for (std::size_t k = 0; k < n; ++k, power = r * power) rotations.push_back(power);
      for (const auto& rk : rotations) {
        if (seen.insert(rk).second) elements.push_back(rk);
      }
      for (const auto& rk : rotations) {
        Permutation srk = s * rk;
        if (seen.insert(srk).second) elements.push_back(std::move(srk));
      }
      return PermutationGroup(n, std::move(elements), {r, s}, GroupKind::dihedral);
    }
    case GroupKind::symmetric: {
      std::size_t order = 1;
      for (std::size_t k = 2; k <= n; ++k) {
        if (order > bounds.max_group_order / k) {
          throw BoundExceeded("|S_" + std::to_string(n) + "| exceeds the group-order bound " +
                              std::to_string(bounds.max_group_order));
        }
        order *= k;
      }
      std::vector<Permutation> elements;
      elements.reserve(order);
      std::vector<Permutation::Point> images(n);
      std::iota(images.begin(), images.end(), 0);
      do {
        elements.emplace_back(images);
      } while (std::next_permutation(images.begin(), images.end()));
      std::vector<Permutation> generators;
      if (n >= 2) generators = {Permutation::from_cycles(n, {{0, 1}}), r};
      return PermutationGroup(n, std::move(elements), std::move(generators), GroupKind::symmetric);
    }
    case GroupKind::custom:
      break;
  }
  throw InvalidArgument("make_named_group needs cyclic, dihedral or symmetric");
}

PermutationGroup stabilizer(const PermutationGroup& group, const ColoredString& x) {
  if (group.degree() != x.length()) throw InvalidArgument("string length does not match group degree");
  std::vector<Permutation> elements;
  for (const auto& sigma : group.elements()) {
    if (act_on_string(sigma, x) == x) elements.push_back(sigma);
  }
  std::vector<Permutation> generators = elements;
  return PermutationGroup::from_closed_elements(group.degree(), std::move(elements), std::move(generators),
                                                GroupKind::custom);
}

std::vector<ConjugacyClass> conjugacy_classes(const PermutationGroup& group) {
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> class_of(group.order(), kUnassigned);
  std::vector<Permutation> inverses;
  inverses.reserve(group.order());
  for (const auto& pi : group.elements()) inverses.push_back(pi.inverse());

  std::vector<ConjugacyClass> classes;
  for (std::size_t i = 0; i < group.order(); ++i) {
    if (class_of[i] != kUnassigned) continue;
    const Permutation& g = group.element(i);
    ConjugacyClass cls;
    cls.representative = g;
    cls.partition = cycle_type(g);
    for (std::size_t p = 0; p < group.order(); ++p) {
      Permutation conj = group.element(p) * g * inverses[p];
      std::size_t idx = *group.index_of(conj);
      if (class_of[idx] != kUnassigned) continue;
      class_of[idx] = classes.size();
      cls.member_indices.push_back(idx);
    }
    std::sort(cls.member_indices.begin(), cls.member_indices.end());
    for (std::size_t idx : cls.member_indices) cls.members.push_back(group.element(idx));
    cls.size = cls.members.size();
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::size_t square_root_count(const PermutationGroup& group, const Permutation& sigma) {
  if (!group.contains(sigma)) throw InvalidArgument("permutation is not an element of the group");
  std::size_t count = 0;
  for (const auto& tau : group.elements()) {
    if (tau * tau == sigma) ++count;
  }
  return count;
}

std::vector<Permutation> read_generators(std::istream& in) {
  std::vector<Permutation> generators;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::vector<Permutation::Point> images;
    long long value = 0;
    while (fields >> value) {
      if (value < 0) throw InvalidArgument("negative image on line " + std::to_string(line_number));
      images.push_back(static_cast<Permutation::Point>(value));
    }
    if (!fields.eof()) throw InvalidArgument("unparsable permutation on line " + std::to_string(line_number));
    try {
      generators.emplace_back(std::move(images));
    } catch (const InvalidArgument& e) {
      throw InvalidArgument("line " + std::to_string(line_number) + ": " + e.what());
    }
    if (generators.back().degree() != generators.front().degree()) {
      throw InvalidArgument("line " + std::to_string(line_number) + ": degree differs from the first permutation");
    }
  }
  return generators;
}

std::vector<Permutation> read_generator_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open group file " + path.string());
  return read_generators(in);
}

}  // namespace permchan
