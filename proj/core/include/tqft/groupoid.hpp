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
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tqft/finite_group.hpp"
#include "tqft/rational.hpp"

namespace tqft {

/// A finite set of configurations: tuples of `width` group elements, one byte
/// each. A full carrier is all of G^width, indexed in mixed radix with the
/// leftmost coordinate slowest; an explicit carrier lists its tuples.
class Carrier {
 public:
  static std::shared_ptr<const Carrier> full(int order, int width);
  /// `data` holds count * width bytes of pairwise distinct tuples.
  static std::shared_ptr<const Carrier> listed(int order, int width, std::size_t count,
                                               std::vector<std::uint8_t> data);

  Carrier(const Carrier&) = delete;
  Carrier& operator=(const Carrier&) = delete;

  int order() const noexcept { return order_; }
  int width() const noexcept { return width_; }
  std::size_t size() const noexcept { return size_; }
  bool is_full() const noexcept { return full_; }

  void element(std::size_t index, std::span<std::uint8_t> out) const;
  std::optional<std::size_t> index_of(std::span<const std::uint8_t> tuple) const;

  friend bool operator==(const Carrier& a, const Carrier& b);

 private:
  Carrier(int order, int width) : order_(order), width_(width) {}

  int order_;
  int width_;
  std::size_t size_ = 1;
  bool full_ = true;
  std::vector<std::uint8_t> data_;
  std::unordered_map<std::string_view, std::size_t> index_;
};

/// How the group G^rank moves one carrier coordinate:
/// value -> h[left] * value * h[right]^-1, where -1 means "no factor".
struct CoordinateAction {
  int left = -1;
  int right = -1;

  friend bool operator==(const CoordinateAction&, const CoordinateAction&) = default;
};

/// The action groupoid X // H of H = G^rank acting coordinatewise on a
/// carrier X of configurations. Every groupoid of flat G-fields built here
/// (boundary circles, generator surfaces, their gluings) has this shape.
class ActionGroupoid {
 public:
  ActionGroupoid(GroupPtr base, int rank, std::vector<CoordinateAction> rules,
                 std::shared_ptr<const Carrier> carrier, std::string label);

  const FiniteGroup& base() const noexcept { return *base_; }
  const GroupPtr& base_ptr() const noexcept { return base_; }
  int rank() const noexcept { return rank_; }
  int width() const noexcept { return static_cast<int>(rules_.size()); }
  const std::vector<CoordinateAction>& rules() const noexcept { return rules_; }
  const Carrier& carrier() const noexcept { return *carrier_; }
  const std::shared_ptr<const Carrier>& carrier_ptr() const noexcept { return carrier_; }
  std::size_t size() const noexcept { return carrier_->size(); }
  const std::string& label() const noexcept { return label_; }

  /// |G|^rank
  BigInt group_order() const;

  /// h has `rank` entries.
  void act(std::span<const Element> h, std::span<const std::uint8_t> x,
           std::span<std::uint8_t> out) const;
  std::size_t act(std::span<const Element> h, std::size_t index) const;
  /// Action of the group element with `s` in coordinate `coord` and the
  /// identity elsewhere, applied in place.
  void act_generator(int coord, Element s, std::span<std::uint8_t> x) const;

  /// Carrier closed under the action.
  bool is_valid_action() const;

  /// n boundary circles: full carrier G^n, rank n, coordinate i conjugated by h[i].
  bool is_boundary() const noexcept;

  friend bool operator==(const ActionGroupoid& a, const ActionGroupoid& b);

 private:
  GroupPtr base_;
  int rank_;
  std::vector<CoordinateAction> rules_;
  std::shared_ptr<const Carrier> carrier_;
  std::string label_;
};

/// Groupoid of flat fields on n circles: holonomies up to conjugation.
ActionGroupoid boundary_groupoid(GroupPtr g, int circles);
ActionGroupoid circle_groupoid(GroupPtr g);

/// Cartesian product; `a`'s coordinates come first. Throws ResourceLimitError
/// when the product carrier would exceed `cap`.
ActionGroupoid product(const ActionGroupoid& a, const ActionGroupoid& b, std::uint64_t cap);

/// Isomorphism classes of an action groupoid with their automorphism orders.
/// Boundary groupoids list classes as tuples of conjugacy classes
/// (lexicographic, leftmost slowest); otherwise classes are ordered by their
/// smallest carrier index, which is also the representative.
struct IsoClassSpace {
  std::vector<std::size_t> representatives;
  std::vector<BigInt> aut_orders;
  std::vector<std::size_t> orbit_sizes;
  std::vector<std::uint32_t> class_of;

  std::size_t count() const noexcept { return representatives.size(); }
  /// sum of 1 / |Aut|
  Rational cardinality() const;
};

IsoClassSpace iso_classes(const ActionGroupoid& g);

}  // namespace tqft
