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

#include "tqft/groupoid.hpp"

#include <algorithm>
#include <cstring>
#include <limits>
#include <stdexcept>

#include "tqft/errors.hpp"

namespace tqft {

namespace {

// Full carriers larger than this are never materialized or indexed.
constexpr std::uint64_t kFullCarrierLimit = std::uint64_t{1} << 32;

std::string_view view(const std::uint8_t* data, int width) {
  return {reinterpret_cast<const char*>(data), static_cast<std::size_t>(width)};
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<std::uint32_t>(i);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent_[a] = b;  // root is always the smallest index
  }

 private:
  std::vector<std::uint32_t> parent_;
};

}  // namespace

std::shared_ptr<const Carrier> Carrier::full(int order, int width) {
  if (width < 0) throw std::invalid_argument("negative carrier width");
  std::shared_ptr<Carrier> c(new Carrier(order, width));
  std::uint64_t size = 1;
  for (int i = 0; i < width; ++i) {
    size *= static_cast<std::uint64_t>(order);
    if (size > kFullCarrierLimit) {
      throw ResourceLimitError("full carrier " + std::to_string(order) + "^" + std::to_string(width),
                               size, kFullCarrierLimit);
    }
  }
  c->size_ = static_cast<std::size_t>(size);
  c->full_ = true;
  return c;
}

std::shared_ptr<const Carrier> Carrier::listed(int order, int width, std::size_t count,
                                               std::vector<std::uint8_t> data) {
  if (width < 0) throw std::invalid_argument("negative carrier width");
  if (data.size() != count * static_cast<std::size_t>(width)) {
    throw std::invalid_argument("carrier data does not hold `count` tuples");
  }
  if (width == 0 && count > 1) throw std::invalid_argument("duplicate carrier tuple");
  std::shared_ptr<Carrier> c(new Carrier(order, width));
  c->full_ = false;
  c->size_ = count;
  c->data_ = std::move(data);
  c->index_.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto key = view(c->data_.data() + i * static_cast<std::size_t>(width), width);
    if (!c->index_.emplace(key, i).second) throw std::invalid_argument("duplicate carrier tuple");
  }
  return c;
}

void Carrier::element(std::size_t index, std::span<std::uint8_t> out) const {
  if (full_) {
    for (int p = width_ - 1; p >= 0; --p) {
      out[static_cast<std::size_t>(p)] = static_cast<std::uint8_t>(index % static_cast<std::size_t>(order_));
      index /= static_cast<std::size_t>(order_);
    }
    return;
  }
  std::memcpy(out.data(), data_.data() + index * static_cast<std::size_t>(width_),
              static_cast<std::size_t>(width_));
}

std::optional<std::size_t> Carrier::index_of(std::span<const std::uint8_t> tuple) const {
  if (full_) {
    std::size_t index = 0;
    for (int p = 0; p < width_; ++p) {
      const auto v = tuple[static_cast<std::size_t>(p)];
      if (v >= order_) return std::nullopt;
      index = index * static_cast<std::size_t>(order_) + v;
    }
    return index;
  }
  const auto it = index_.find(view(tuple.data(), width_));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool operator==(const Carrier& a, const Carrier& b) {
  if (&a == &b) return true;
  if (a.order_ != b.order_ || a.width_ != b.width_ || a.size_ != b.size_ || a.full_ != b.full_) {
    return false;
  }
  return a.full_ || a.data_ == b.data_;
}

ActionGroupoid::ActionGroupoid(GroupPtr base, int rank, std::vector<CoordinateAction> rules,
                               std::shared_ptr<const Carrier> carrier, std::string label)
    : base_(std::move(base)),
      rank_(rank),
      rules_(std::move(rules)),
      carrier_(std::move(carrier)),
      label_(std::move(label)) {
  if (carrier_->width() != static_cast<int>(rules_.size())) {
    throw std::invalid_argument("carrier width does not match coordinate rules");
  }
  if (carrier_->order() != base_->order()) throw std::invalid_argument("carrier over a different group");
  for (const auto& r : rules_) {
    if (r.left >= rank_ || r.right >= rank_) throw std::invalid_argument("rule refers to missing group coordinate");
  }
}

BigInt ActionGroupoid::group_order() const {
  BigInt order;
  mpz_ui_pow_ui(order.get_mpz_t(), static_cast<unsigned long>(base_->order()),
                static_cast<unsigned long>(rank_));
  return order;
}

void ActionGroupoid::act(std::span<const Element> h, std::span<const std::uint8_t> x,
                         std::span<std::uint8_t> out) const {
  const FiniteGroup& g = *base_;
  for (std::size_t c = 0; c < rules_.size(); ++c) {
    Element v = x[c];
    if (rules_[c].left >= 0) v = g.mul(h[static_cast<std::size_t>(rules_[c].left)], v);
    if (rules_[c].right >= 0) v = g.mul(v, g.inv(h[static_cast<std::size_t>(rules_[c].right)]));
    out[c] = static_cast<std::uint8_t>(v);
  }
}

std::size_t ActionGroupoid::act(std::span<const Element> h, std::size_t index) const {
  std::vector<std::uint8_t> x(rules_.size()), y(rules_.size());
  carrier_->element(index, x);
  act(h, x, y);
  const auto moved = carrier_->index_of(y);
  if (!moved) throw std::logic_error("carrier of '" + label_ + "' is not closed under its action");
  return *moved;
}

void ActionGroupoid::act_generator(int coord, Element s, std::span<std::uint8_t> x) const {
  const FiniteGroup& g = *base_;
  const Element s_inv = g.inv(s);
  for (std::size_t c = 0; c < rules_.size(); ++c) {
    Element v = x[c];
    if (rules_[c].left == coord) v = g.mul(s, v);
    if (rules_[c].right == coord) v = g.mul(v, s_inv);
    x[c] = static_cast<std::uint8_t>(v);
  }
}

bool ActionGroupoid::is_valid_action() const {
  std::vector<std::uint8_t> x(rules_.size());
  for (std::size_t i = 0; i < carrier_->size(); ++i) {
    for (int r = 0; r < rank_; ++r) {
      for (Element s : base_->generators()) {
        carrier_->element(i, x);
        act_generator(r, s, x);
        if (!carrier_->index_of(x)) return false;
      }
    }
  }
  return true;
}

bool ActionGroupoid::is_boundary() const noexcept {
  if (!carrier_->is_full() || rank_ != width()) return false;
  for (int i = 0; i < rank_; ++i) {
    if (rules_[static_cast<std::size_t>(i)] != CoordinateAction{i, i}) return false;
  }
  return true;
}

bool operator==(const ActionGroupoid& a, const ActionGroupoid& b) {
  return (a.base_ == b.base_ || *a.base_ == *b.base_) && a.rank_ == b.rank_ && a.rules_ == b.rules_ &&
         *a.carrier_ == *b.carrier_;
}

ActionGroupoid boundary_groupoid(GroupPtr g, int circles) {
  if (circles < 0) throw std::invalid_argument("negative circle count");
  std::vector<CoordinateAction> rules;
  for (int i = 0; i < circles; ++i) rules.push_back({i, i});
  const int order = g->order();
  return ActionGroupoid(std::move(g), circles, std::move(rules), Carrier::full(order, circles),
                        "circles^" + std::to_string(circles));
}

ActionGroupoid circle_groupoid(GroupPtr g) { return boundary_groupoid(std::move(g), 1); }

ActionGroupoid product(const ActionGroupoid& a, const ActionGroupoid& b, std::uint64_t cap) {
  if (!(a.base() == b.base())) throw std::invalid_argument("product of groupoids over different groups");
  std::vector<CoordinateAction> rules = a.rules();
  for (auto r : b.rules()) {
    if (r.left >= 0) r.left += a.rank();
    if (r.right >= 0) r.right += a.rank();
    rules.push_back(r);
  }
  const int width = a.width() + b.width();
  const std::string label = "(" + a.label() + " x " + b.label() + ")";
  const std::uint64_t size = static_cast<std::uint64_t>(a.size()) * static_cast<std::uint64_t>(b.size());
  if (size > cap) throw ResourceLimitError("product carrier " + label, size, cap);
  if (a.carrier().is_full() && b.carrier().is_full()) {
    return ActionGroupoid(a.base_ptr(), a.rank() + b.rank(), std::move(rules),
                          Carrier::full(a.base().order(), width), label);
  }
  std::vector<std::uint8_t> data(static_cast<std::size_t>(size) * static_cast<std::size_t>(width));
  std::vector<std::uint8_t> x(static_cast<std::size_t>(a.width())), y(static_cast<std::size_t>(b.width()));
  auto out = data.begin();
  for (std::size_t i = 0; i < a.size(); ++i) {
    a.carrier().element(i, x);
    for (std::size_t j = 0; j < b.size(); ++j) {
      b.carrier().element(j, y);
      out = std::copy(x.begin(), x.end(), out);
      out = std::copy(y.begin(), y.end(), out);
    }
  }
  return ActionGroupoid(a.base_ptr(), a.rank() + b.rank(), std::move(rules),
                        Carrier::listed(a.base().order(), width, static_cast<std::size_t>(size), std::move(data)), label);
}

Rational IsoClassSpace::cardinality() const {
  Rational sum = 0;
  for (const auto& aut : aut_orders) sum += Rational(1, aut);
  return sum;
}

IsoClassSpace iso_classes(const ActionGroupoid& g) {
  IsoClassSpace space;
  const std::size_t n = g.size();
  if (n > std::numeric_limits<std::uint32_t>::max()) {
    throw ResourceLimitError("iso class enumeration", n, std::numeric_limits<std::uint32_t>::max());
  }
  const FiniteGroup& base = g.base();

  if (g.is_boundary()) {
    const ConjugacyClasses cc = conjugacy_classes(base);
    const int circles = g.width();
    const std::size_t k = cc.count();
    std::size_t classes = 1;
    for (int i = 0; i < circles; ++i) classes *= k;
    space.representatives.resize(classes);
    space.aut_orders.resize(classes);
    space.orbit_sizes.resize(classes);
    std::vector<std::uint8_t> tuple(static_cast<std::size_t>(circles));
    for (std::size_t c = 0; c < classes; ++c) {
      std::size_t rest = c;
      BigInt aut = 1;
      std::size_t orbit = 1;
      for (int p = circles - 1; p >= 0; --p) {
        const std::size_t cls = rest % k;
        rest /= k;
        tuple[static_cast<std::size_t>(p)] = static_cast<std::uint8_t>(cc.representatives[cls]);
        aut *= base.order() / cc.sizes[cls];
        orbit *= static_cast<std::size_t>(cc.sizes[cls]);
      }
      space.representatives[c] = *g.carrier().index_of(tuple);
      space.aut_orders[c] = aut;
      space.orbit_sizes[c] = orbit;
    }
    space.class_of.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      g.carrier().element(i, tuple);
      std::size_t cls = 0;
      for (int p = 0; p < circles; ++p) {
        cls = cls * k + static_cast<std::size_t>(cc.class_of[tuple[static_cast<std::size_t>(p)]]);
      }
      space.class_of[i] = static_cast<std::uint32_t>(cls);
    }
    return space;
  }

  UnionFind sets(n);
  std::vector<std::uint8_t> x(static_cast<std::size_t>(g.width()));
  for (std::size_t i = 0; i < n; ++i) {
    for (int r = 0; r < g.rank(); ++r) {
      for (Element s : base.generators()) {
        g.carrier().element(i, x);
        g.act_generator(r, s, x);
        const auto j = g.carrier().index_of(x);
        if (!j) throw std::logic_error("carrier of '" + g.label() + "' is not closed under its action");
        sets.unite(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(*j));
      }
    }
  }
  space.class_of.resize(n);
  std::vector<std::uint32_t> class_of_root(n, std::numeric_limits<std::uint32_t>::max());
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t root = sets.find(static_cast<std::uint32_t>(i));
    if (class_of_root[root] == std::numeric_limits<std::uint32_t>::max()) {
      class_of_root[root] = static_cast<std::uint32_t>(space.representatives.size());
      space.representatives.push_back(i);
      space.orbit_sizes.push_back(0);
    }
    space.class_of[i] = class_of_root[root];
    ++space.orbit_sizes[class_of_root[root]];
  }
  const BigInt order = g.group_order();
  space.aut_orders.reserve(space.count());
  for (std::size_t orbit : space.orbit_sizes) {
    BigInt aut = order / static_cast<unsigned long>(orbit);
    if (aut * static_cast<unsigned long>(orbit) != order) {
      throw std::logic_error("orbit size does not divide the group order");
    }
    space.aut_orders.push_back(aut);
  }
  return space;
}

}  // namespace tqft
