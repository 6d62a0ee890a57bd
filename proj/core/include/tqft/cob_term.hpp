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

#include <array>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

namespace tqft {

/// The six generating cobordisms of 2Cob.
enum class Generator { unit, counit, mult, comult, identity, twist };

inline constexpr std::array<Generator, 6> kAllGenerators = {
    Generator::unit,     Generator::counit,   Generator::mult,
    Generator::comult,   Generator::identity, Generator::twist,
};

/// DSL spelling: unit, counit, mult, comult, id, twist.
std::string_view generator_name(Generator g) noexcept;
int generator_inputs(Generator g) noexcept;
int generator_outputs(Generator g) noexcept;

/// Immutable expression tree over the generators with sequential composition
/// and disjoint union. Nodes are shared, so copies are cheap. Every CobTerm is
/// well-formed: `compose` refuses mismatched middle boundaries.
class CobTerm {
 public:
  enum class Kind { generator, compose, tensor };

  CobTerm(Generator g);  // NOLINT(google-explicit-constructor)

  Kind kind() const noexcept { return node_->kind; }
  int in() const noexcept { return node_->in; }
  int out() const noexcept { return node_->out; }

  /// Only valid when kind() == Kind::generator.
  Generator generator() const noexcept { return node_->gen; }
  /// Operands of a compose/tensor node, in source order.
  const CobTerm& first() const noexcept { return *node_->first; }
  const CobTerm& second() const noexcept { return *node_->second; }

  /// Number of generator leaves.
  std::size_t leaf_count() const noexcept { return node_->leaves; }
  /// Tree depth; a single generator has depth 0.
  std::size_t depth() const noexcept { return node_->depth; }

  friend CobTerm compose(const CobTerm& f, const CobTerm& g);
  friend CobTerm tensor(const CobTerm& f, const CobTerm& g);

  /// Structural (syntactic) equality. Topological equality is `equivalent`.
  friend bool operator==(const CobTerm& a, const CobTerm& b);

 private:
  struct Node {
    Kind kind;
    Generator gen = Generator::identity;
    int in = 0;
    int out = 0;
    std::size_t leaves = 1;
    std::size_t depth = 0;
    std::shared_ptr<const CobTerm> first;
    std::shared_ptr<const CobTerm> second;
  };
  explicit CobTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// f then g. Throws ArityError unless f.out() == g.in().
CobTerm compose(const CobTerm& f, const CobTerm& g);
/// Disjoint union; f's boundary circles come first.
CobTerm tensor(const CobTerm& f, const CobTerm& g);

/// n parallel cylinders; n must be at least 1.
CobTerm identity_wires(int n);

/// Orientation reversal: swaps inputs and outputs, reverses composition order
/// and exchanges mult/comult and unit/counit.
CobTerm transpose(const CobTerm& f);

/// unit ; (comult ; mult)^genus ; counit
CobTerm closed_surface_term(int genus);
/// The closed genus-g surface cut once along a non-separating circle: a 1 -> 1
/// cobordism of genus g-1. Requires genus >= 1.
CobTerm cut_surface_term(int genus);
/// comult ; mult
CobTerm handle_term();

/// Fully parenthesized form: generators bare, `(f ; g)`, `(f * g)`.
std::string to_string(const CobTerm& f);

/// Parses the cobordism DSL:
///   expression ::= atom | expression ";" expression | expression "*" expression
///   atom       ::= "unit" | "counit" | "mult" | "comult" | "id" | "twist" | "(" expression ")"
/// Both operators associate to the left and "*" binds tighter than ";".
/// Throws ParseError on malformed text and ArityError on ill-typed composition.
CobTerm parse_cob(std::string_view text);

}  // namespace tqft
