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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "permchan/bounds.hpp"
#include "permchan/colored_string.hpp"
#include "permchan/permutation.hpp"

namespace permchan {

enum class GroupKind { cyclic, dihedral, symmetric, custom };

std::string_view to_string(GroupKind kind);
/// Accepts "cyclic", "dihedral", "symmetric", "custom".
GroupKind parse_group_kind(std::string_view text);

/// A finite permutation group with every element listed.
///
/// Element order is deterministic: the identity first, then elements in the
/// order breadth-first saturation discovers them. Named groups use the
/// presentation order: r^k for cyclic, r^k then s r^k for dihedral.
class PermutationGroup {
 public:
  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  GroupKind kind() const { return kind_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const Permutation& element(std::size_t i) const { return elements_[i]; }

  bool contains(const Permutation& sigma) const;
  /// Position of sigma in elements(), or nullopt.
  std::optional<std::size_t> index_of(const Permutation& sigma) const;
  bool is_abelian() const;

  /// Wraps a set already known to be a group. Only used for subgroups
  /// computed from an existing group (stabilizers); does not check closure.
  static PermutationGroup from_closed_elements(std::size_t degree, std::vector<Permutation> elements,
                                               std::vector<Permutation> generators, GroupKind kind);

 private:
  friend PermutationGroup generate_group(std::size_t, const std::vector<Permutation>&, const Bounds&);
  friend PermutationGroup make_named_group(GroupKind, std::size_t, const Bounds&);

  PermutationGroup(std::size_t degree, std::vector<Permutation> elements, std::vector<Permutation> generators,
                   GroupKind kind);

  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
  std::vector<Permutation> generators_;
  GroupKind kind_ = GroupKind::custom;
  std::unordered_map<Permutation, std::size_t, PermutationHash> index_;
};

/// Smallest group containing \p generators, by breadth-first product
/// saturation. An empty generator list yields the trivial group of the given
/// degree. Throws InvalidArgument on degree mismatch and BoundExceeded when
/// the group grows past bounds.max_group_order.
PermutationGroup generate_group(std::size_t degree, const std::vector<Permutation>& generators,
                                const Bounds& bounds = {});

/// Convenience overload taking the degree from the first generator.
PermutationGroup generate_group(const std::vector<Permutation>& generators, const Bounds& bounds = {});

/// C_n = <r>, D_n = <r, s> or S_n acting on n points, with r(i) = i+1 mod n and
/// s(i) = -i mod n. For n < 3 the dihedral generators do not act faithfully
/// and the result is the image group (order 1 for n = 1, 2 for n = 2).
PermutationGroup make_named_group(GroupKind kind, std::size_t n, const Bounds& bounds = {});

/// The shift r(i) = i+1 mod n.
Permutation cyclic_shift(std::size_t n);
/// The reflection s(i) = -i mod n.
Permutation reflection(std::size_t n);

/// Elements of G fixing x, as a subgroup.
PermutationGroup stabilizer(const PermutationGroup& group, const ColoredString& x);

struct ConjugacyClass {
  Permutation representative;
  std::vector<Permutation> members;
  /// Indices of members in the parent group's elements().
  std::vector<std::size_t> member_indices;
  /// Cycle type (length, multiplicity), strictly decreasing lengths.
  std::vector<std::pair<std::size_t, std::size_t>> partition;
  std::size_t size = 0;
};

/// Classes in order of their first element in group.elements(); the class of
/// the identity is always first.
std::vector<ConjugacyClass> conjugacy_classes(const PermutationGroup& group);

/// Number of tau in G with tau^2 = sigma. Throws InvalidArgument when
/// sigma is not in G.
std::size_t square_root_count(const PermutationGroup& group, const Permutation& sigma);

/// Reads one permutation per line in one-line image notation; blank lines
/// and lines starting with '#' are skipped.
std::vector<Permutation> read_generators(std::istream& in);
std::vector<Permutation> read_generator_file(const std::filesystem::path& path);

}  // namespace permchan
