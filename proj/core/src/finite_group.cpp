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

#include "tqft/finite_group.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <numeric>

#include "tqft/errors.hpp"

namespace tqft {

namespace {

std::size_t at(int order, int a, int b) {
  return static_cast<std::size_t>(a) * static_cast<std::size_t>(order) +
         static_cast<std::size_t>(b);
}

using Perm = std::vector<int>;

GroupPtr permutation_group(std::string name, const std::vector<Perm>& elements) {
  std::map<Perm, int> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], static_cast<int>(i));
  const int order = static_cast<int>(elements.size());
  std::vector<Element> table(static_cast<std::size_t>(order) * static_cast<std::size_t>(order));
  const std::size_t n = elements.front().size();
  Perm composed(n);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      // (a * b)(i) = a(b(i))
      for (std::size_t i = 0; i < n; ++i) {
        composed[i] = elements[static_cast<std::size_t>(a)]
                              [static_cast<std::size_t>(elements[static_cast<std::size_t>(b)][i])];
      }
      table[at(order, a, b)] = index.at(composed);
    }
  }
  return std::make_shared<const FiniteGroup>(std::move(name), order, std::move(table));
}

bool is_even(const Perm& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j] ? 1 : 0;
  }
  return inversions % 2 == 0;
}

std::optional<int> parse_suffix(std::string_view text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) return std::nullopt;
  return value;
}

}  // namespace

GroupAxiomCheck check_group_axioms(int order, std::span<const Element> table) {
  GroupAxiomCheck check;
  if (order <= 0 || table.size() != static_cast<std::size_t>(order) * static_cast<std::size_t>(order)) {
    check.closed = check.associative = check.has_identity = check.has_inverses = false;
    return check;
  }
  for (Element x : table) {
    if (x < 0 || x >= order) {
      check.closed = false;
      check.associative = check.has_identity = check.has_inverses = false;
      return check;
    }
  }
  for (int a = 0; a < order && check.associative; ++a) {
    for (int b = 0; b < order && check.associative; ++b) {
      const Element ab = table[at(order, a, b)];
      for (int c = 0; c < order; ++c) {
        if (table[at(order, ab, c)] != table[at(order, a, table[at(order, b, c)])]) {
          check.associative = false;
          break;
        }
      }
    }
  }
  std::optional<int> identity;
  for (int e = 0; e < order && !identity; ++e) {
    bool unit = true;
    for (int a = 0; a < order && unit; ++a) {
      unit = table[at(order, e, a)] == a && table[at(order, a, e)] == a;
    }
    if (unit) identity = e;
  }
  if (!identity) {
    check.has_identity = false;
    check.has_inverses = false;
    return check;
  }
  for (int a = 0; a < order; ++a) {
    bool found = false;
    for (int b = 0; b < order && !found; ++b) {
      found = table[at(order, a, b)] == *identity && table[at(order, b, a)] == *identity;
    }
    if (!found) {
      check.has_inverses = false;
      break;
    }
  }
  return check;
}

FiniteGroup::FiniteGroup(std::string name, int order, std::vector<Element> table)
    : name_(std::move(name)), order_(order), table_(std::move(table)) {
  if (order_ <= 0 || order_ > kMaxOrder) {
    throw UserError("group order must be in 1.." + std::to_string(kMaxOrder) + ", got " +
                    std::to_string(order_));
  }
  const GroupAxiomCheck check = check_group_axioms(order_, table_);
  if (!check.ok()) throw UserError("table for '" + name_ + "' is not a group table");

  for (int e = 0; e < order_; ++e) {
    if (mul(e, e) == e) {
      identity_ = e;
      break;
    }
  }
  inverse_.assign(static_cast<std::size_t>(order_), 0);
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) {
      if (mul(a, b) == identity_) {
        inverse_[static_cast<std::size_t>(a)] = b;
        break;
      }
    }
  }

  // Greedy generating set: add the first element outside the current subgroup.
  std::vector<char> in_subgroup(static_cast<std::size_t>(order_), 0);
  in_subgroup[static_cast<std::size_t>(identity_)] = 1;
  std::vector<Element> subgroup{identity_};
  for (int candidate = 0; candidate < order_; ++candidate) {
    if (in_subgroup[static_cast<std::size_t>(candidate)]) continue;
    generators_.push_back(candidate);
    for (std::size_t i = 0; i < subgroup.size(); ++i) {
      for (Element s : generators_) {
        const Element next = mul(subgroup[i], s);
        if (!in_subgroup[static_cast<std::size_t>(next)]) {
          in_subgroup[static_cast<std::size_t>(next)] = 1;
          subgroup.push_back(next);
        }
      }
    }
  }
}

int FiniteGroup::element_order(Element a) const {
  int k = 1;
  Element power = a;
  while (power != identity_) {
    power = mul(power, a);
    ++k;
  }
  return k;
}

GroupPtr cyclic_group(int n) {
  if (n < 1) throw UserError("cyclic group needs n >= 1");
  if (n > FiniteGroup::kMaxOrder) throw UserError("cyclic group order too large");
  std::vector<Element> table(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) table[at(n, a, b)] = (a + b) % n;
  }
  return std::make_shared<const FiniteGroup>("Z" + std::to_string(n), n, std::move(table));
}

GroupPtr dihedral_group(int n) {
  if (n < 1) throw UserError("dihedral group needs n >= 1");
  if (2 * n > FiniteGroup::kMaxOrder) throw UserError("dihedral group order too large");
  const int order = 2 * n;
  std::vector<Element> table(static_cast<std::size_t>(order) * static_cast<std::size_t>(order));
  for (int x = 0; x < order; ++x) {
    for (int y = 0; y < order; ++y) {
      // x = s^ex r^a, y = s^ey r^b; r^a s = s r^-a.
      const int ex = x / n, a = x % n;
      const int ey = y / n, b = y % n;
      const int rot = ((ey != 0 ? -a : a) + b) % n;
      table[at(order, x, y)] = ((ex + ey) % 2) * n + (rot + n) % n;
    }
  }
  return std::make_shared<const FiniteGroup>("D" + std::to_string(n), order, std::move(table));
}

GroupPtr symmetric_group(int n) {
  if (n < 1 || n > 5) throw UserError("symmetric groups are supported for n in 1..5");
  std::vector<Perm> elements;
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    elements.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return permutation_group("S" + std::to_string(n), elements);
}

GroupPtr alternating_group_4() {
  std::vector<Perm> elements;
  Perm p{0, 1, 2, 3};
  do {
    if (is_even(p)) elements.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return permutation_group("A4", elements);
}

GroupPtr quaternion_group() {
  // Unit i=1, j=2, k=3 paired with a sign; element index = 2 * unit + (negative ? 1 : 0).
  // Product of basis units: sign and unit of u*v.
  static constexpr std::array<std::array<std::pair<int, int>, 4>, 4> kUnits = {{
      {{{1, 0}, {1, 1}, {1, 2}, {1, 3}}},
      {{{1, 1}, {-1, 0}, {1, 3}, {-1, 2}}},
      {{{1, 2}, {-1, 3}, {-1, 0}, {1, 1}}},
      {{{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}},
  }};
  constexpr int order = 8;
  std::vector<Element> table(order * order);
  for (int x = 0; x < order; ++x) {
    for (int y = 0; y < order; ++y) {
      const auto [sign, unit] = kUnits[static_cast<std::size_t>(x / 2)][static_cast<std::size_t>(y / 2)];
      const int negative = ((sign < 0 ? 1 : 0) + x % 2 + y % 2) % 2;
      table[at(order, x, y)] = 2 * unit + negative;
    }
  }
  return std::make_shared<const FiniteGroup>("Q8", order, std::move(table));
}

const std::vector<std::string>& builtin_group_names() {
  static const std::vector<std::string> kNames = {"Z2", "Z3", "Z4", "S3", "S4", "D4", "Q8", "A4"};
  return kNames;
}

GroupPtr group_by_name(std::string_view name) {
  if (name == "Q8") return quaternion_group();
  if (name == "A4") return alternating_group_4();
  if (name.size() >= 2) {
    const auto n = parse_suffix(name.substr(1));
    if (n && *n >= 1) {
      switch (name.front()) {
        case 'Z':
          return cyclic_group(*n);
        case 'D':
          return dihedral_group(*n);
        case 'S':
          return symmetric_group(*n);
        default:
          break;
      }
    }
  }
  throw UserError("unknown group '" + std::string(name) + "'");
}

ConjugacyClasses conjugacy_classes(const FiniteGroup& g) {
  const int order = g.order();
  std::vector<int> raw(static_cast<std::size_t>(order), -1);
  std::vector<std::vector<Element>> orbits;
  for (Element x = 0; x < order; ++x) {
    if (raw[static_cast<std::size_t>(x)] >= 0) continue;
    std::vector<Element> orbit;
    for (Element h = 0; h < order; ++h) {
      const Element y = g.conj(h, x);
      if (raw[static_cast<std::size_t>(y)] < 0) {
        raw[static_cast<std::size_t>(y)] = static_cast<int>(orbits.size());
        orbit.push_back(y);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  const Element e = g.identity();
  std::sort(orbits.begin(), orbits.end(), [e](const auto& a, const auto& b) {
    const bool a_id = a.front() == e || (a.size() == 1 && a[0] == e);
    const bool b_id = b.front() == e || (b.size() == 1 && b[0] == e);
    if (a_id != b_id) return a_id;
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });
  ConjugacyClasses classes;
  classes.class_of.assign(static_cast<std::size_t>(order), 0);
  for (std::size_t c = 0; c < orbits.size(); ++c) {
    for (Element x : orbits[c]) classes.class_of[static_cast<std::size_t>(x)] = static_cast<int>(c);
    classes.representatives.push_back(orbits[c].front());
    classes.sizes.push_back(static_cast<int>(orbits[c].size()));
  }
  classes.members = std::move(orbits);
  return classes;
}

}  // namespace tqft
