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

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "tqft/finite_group.hpp"
#include "tqft/presentation.hpp"
#include "tqft/rational.hpp"

namespace tqft {

struct Surface {
  int genus = 0;
};

/// L(p, q). The untwisted invariant sees only pi_1 = Z/p, so q is carried
/// but never read.
struct Lens {
  int p = 1;
  int q = 1;
};

struct Torus3 {};

struct CustomManifold {
  GroupPresentation presentation;
};

struct Manifold {
  std::variant<Surface, Lens, Torus3, CustomManifold> kind;
  std::string name;

  static Manifold surface(int genus);
  static Manifold lens(int p, int q = 1);
  static Manifold torus3();
  static Manifold custom(GroupPresentation p);
};

/// Presentation of the fundamental group. Throws UserError for a negative
/// genus, p < 1 or an ill-formed custom presentation.
GroupPresentation presentation_of(const Manifold& m);

/// |Hom(pi_1 M, G)| / |G|
Rational invariant(const Manifold& m, const FiniteGroup& g,
                   std::uint64_t cap = kDefaultEnumerationCap);

/// A disjoint union: the product of the component invariants.
Rational invariant(const std::vector<Manifold>& components, const FiniteGroup& g,
                   std::uint64_t cap = kDefaultEnumerationCap);

struct OracleRow {
  int genus = 0;
  Rational count;
  Rational frobenius;
  Rational span;

  bool all_equal() const { return count == frobenius && frobenius == span; }
};

/// Closed-surface invariants for genus 0..max_genus from the counting,
/// Frobenius and span backends.
std::vector<OracleRow> oracle_report(const GroupPtr& g, int max_genus,
                                     std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace tqft
