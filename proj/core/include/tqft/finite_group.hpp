// Copyright 2026 The tqftkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tqft {

/// Index of an element inside a FiniteGroup.
using Element = int;

/// A finite group stored as an explicit multiplication table.
///
/// Elements are the integers 0..order()-1. The table is validated on
/// construction (closure, associativity, a two-sided unit, two-sided
/// inverses), so a constructed FiniteGroup is always a group. Orders are
/// limited to 255 so that configurations can be packed one byte per element.
class FiniteGroup {
 public:
  static constexpr int kMaxOrder = 255;

  /// Builds a group from a row-major order x order table. Throws UserError if
  /// the table is not a group table.
  FiniteGroup(std::string name, int order, std::vector<Element> table);

  const std::string& name() const noexcept { return name_; }
  int order() const noexcept { return order_; }
  Element identity() const noexcept { return identity_; }

  Element mul(Element a, Element b) const noexcept {
    return table_[static_cast<std::size_t>(a) * static_cast<std::size_t>(order_) +
                  static_cast<std::size_t>(b)];
  }
  Element inv(Element a) const noexcept { return inverse_[static_cast<std::size_t>(a)]; }
  Element conj(Element g, Element x) const noexcept { return mul(mul(g, x), inv(g)); }

  std::span<const Element> table() const noexcept { return table_; }

  /// A small generating set, chosen greedily in index order.
  const std::vector<Element>& generators() const noexcept { return generators_; }

  /// Smallest k >= 1 with a^k = e.
  int element_order(Element a) const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.order_ == b.order_ && a.table_ == b.table_;
  }

 private:
  std::string name_;
  int order_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  Element identity_ = 0;
  std::vector<Element> generators_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Outcome of an exhaustive axiom check over a multiplication table.
struct GroupAxiomCheck {
  bool closed = true;
  bool associative = true;
  bool has_identity = true;
  bool has_inverses = true;

  bool ok() const noexcept { return closed && associative && has_identity && has_inverses; }
};

/// Exhaustive check of a raw table (triple loop for associativity).
GroupAxiomCheck check_group_axioms(int order, std::span<const Element> table);

GroupPtr cyclic_group(int n);
/// Dihedral group of order 2n: rotations r^k are 0..n-1, reflections s r^k are n..2n-1.
GroupPtr dihedral_group(int n);
/// Symmetric group on n <= 5 points, permutations in lexicographic order.
GroupPtr symmetric_group(int n);
/// A4 as the even permutations of S4, in lexicographic order.
GroupPtr alternating_group_4();
/// Quaternion group, elements ordered 1, -1, i, -i, j, -j, k, -k.
GroupPtr quaternion_group();

/// Names of the built-in groups, in canonical order.
const std::vector<std::string>& builtin_group_names();

/// Resolves "Z<n>", "D<n>", "S<n>", "A4", "Q8". Throws UserError otherwise.
GroupPtr group_by_name(std::string_view name);

/// Conjugacy classes. Class 0 is the identity's class; the remaining classes
/// are ordered by (size, smallest member).
struct ConjugacyClasses {
  std::vector<int> class_of;
  std::vector<Element> representatives;
  std::vector<int> sizes;
  std::vector<std::vector<Element>> members;

  std::size_t count() const noexcept { return sizes.size(); }
};

ConjugacyClasses conjugacy_classes(const FiniteGroup& g);

}  // namespace tqft
