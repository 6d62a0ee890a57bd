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
#include <functional>
#include <vector>

#include "tqft/cob_term.hpp"
#include "tqft/groupoid.hpp"
#include "tqft/linear_map.hpp"

namespace tqft {

/// Equivariant functor from an action groupoid into `target`. The group part
/// is a coordinate selection, hom(h)[t] = h[hom[t]]; the object part maps each
/// source carrier index to a target carrier index.
struct GroupoidMap {
  ActionGroupoid target;
  std::vector<int> hom;
  std::vector<std::uint64_t> carrier_map;
};

/// left.target <- apex -> right.target
struct GroupoidSpan {
  ActionGroupoid apex;
  GroupoidMap left;
  GroupoidMap right;

  const ActionGroupoid& source() const noexcept { return left.target; }
  const ActionGroupoid& target() const noexcept { return right.target; }
};

/// leg(h . x) == hom(h) . leg(x) for every carrier element and every group
/// generator of `source`.
bool is_equivariant(const ActionGroupoid& source, const GroupoidMap& leg);

inline constexpr std::uint64_t kDefaultApexCap = 10'000'000;

/// Span of flat-field groupoids for a generating surface, between boundary
/// groupoids of its input and output circles. Pants (mult): apex G x G under
/// diagonal conjugation, restricting to the two input holonomies and to their
/// product on the output; comult is the reverse span. Disk (unit): one object
/// with automorphisms G whose boundary holonomy is the identity; counit is the
/// reverse. Cylinder: G with both legs the identity. Twist: G x G with the
/// output legs swapped.
GroupoidSpan generator_span(Generator gen, GroupPtr g);

/// Swaps the legs.
GroupoidSpan reverse_span(GroupoidSpan s);

/// Disjoint union: product apex and product feet.
GroupoidSpan tensor_spans(const GroupoidSpan& a, const GroupoidSpan& b,
                          std::uint64_t cap = kDefaultApexCap);

enum class GaugeFixing {
  /// The weak pullback verbatim: triples (x, k, y) with k a foot morphism
  /// from right(x) to left(y).
  none,
  /// Sets the connecting morphisms along a spanning forest of the gluing graph
  /// to the identity. The result is the full subgroupoid on those triples,
  /// which is equivalent to the weak pullback with the same legs.
  spanning_tree,
};

/// Composite span by weak pullback over the shared foot. Throws UserError on a
/// foot mismatch and ResourceLimitError when the enumeration (or the apex)
/// would exceed `cap`.
GroupoidSpan compose_spans(const GroupoidSpan& first, const GroupoidSpan& second,
                           GaugeFixing gauge = GaugeFixing::none,
                           std::uint64_t cap = kDefaultApexCap);

/// Weight attached to each apex iso class (by representative); the untwisted
/// theory uses the constant 1.
using ActionKernel = std::function<Rational(const ActionGroupoid& apex, std::size_t representative)>;

/// Pull-push along the span, in the basis of iso classes of the boundary
/// groupoids: entry(out, in) = sum over apex classes s over (in, out) of
/// kernel(s) |Aut(out)| / |Aut(s)|. Both feet must be boundary groupoids.
LinearMap degroupoidify(const GroupoidSpan& s, const ActionKernel& kernel = {});

struct QuantizeOptions {
  std::uint64_t cap = kDefaultApexCap;
  GaugeFixing gauge = GaugeFixing::spanning_tree;
};

/// Builds the span of the whole term from generator spans (compose_spans and
/// tensor_spans) and degroupoidifies once.
GroupoidSpan term_span(const CobTerm& f, const GroupPtr& g, const QuantizeOptions& options = {});
LinearMap quantize(const CobTerm& f, const GroupPtr& g, const QuantizeOptions& options = {});

/// Degroupoidifies each generator span, then multiplies and takes Kronecker
/// products along the term.
LinearMap quantize_stepwise(const CobTerm& f, const GroupPtr& g);

}  // namespace tqft
