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

#include "tqft/manifold.hpp"

#include "tqft/cob_term.hpp"
#include "tqft/errors.hpp"
#include "tqft/frobenius.hpp"
#include "tqft/span.hpp"

namespace tqft {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

}  // namespace

Manifold Manifold::surface(int genus) {
  return {Surface{genus}, "surface(" + std::to_string(genus) + ")"};
}

Manifold Manifold::lens(int p, int q) {
  return {Lens{p, q}, "lens(" + std::to_string(p) + "," + std::to_string(q) + ")"};
}

Manifold Manifold::torus3() { return {Torus3{}, "torus3"}; }

Manifold Manifold::custom(GroupPresentation p) {
  std::string name = p.name;
  return {CustomManifold{std::move(p)}, std::move(name)};
}

GroupPresentation presentation_of(const Manifold& m) {
  return std::visit(
      Overloaded{
          [](const Surface& s) {
            if (s.genus < 0) throw UserError("genus must be non-negative");
            return surface_presentation(s.genus);
          },
          [](const Lens& l) {
            if (l.p < 1) throw UserError("lens space needs p >= 1");
            return cyclic_presentation(l.p);
          },
          [](const Torus3&) { return torus3_presentation(); },
          [](const CustomManifold& c) {
            c.presentation.validate();
            return c.presentation;
          },
      },
      m.kind);
}

Rational invariant(const Manifold& m, const FiniteGroup& g, std::uint64_t cap) {
  const std::uint64_t count = hom_count(presentation_of(m), g, cap);
  Rational value(BigInt(std::to_string(count)), BigInt(g.order()));
  value.canonicalize();
  return value;
}

Rational invariant(const std::vector<Manifold>& components, const FiniteGroup& g,
                   std::uint64_t cap) {
  Rational product = 1;
  for (const auto& m : components) product *= invariant(m, g, cap);
  return product;
}

std::vector<OracleRow> oracle_report(const GroupPtr& g, int max_genus, std::uint64_t cap) {
  if (max_genus < 0) throw UserError("max genus must be non-negative");
  const FrobeniusEvaluator frobenius(center_of_group_algebra(*g));
  const QuantizeOptions options{cap, GaugeFixing::spanning_tree};
  std::vector<OracleRow> rows;
  for (int genus = 0; genus <= max_genus; ++genus) {
    OracleRow row;
    row.genus = genus;
    row.count = invariant(Manifold::surface(genus), *g, cap);
    row.frobenius = frobenius.closed_invariant(genus);
    row.span = quantize(closed_surface_term(genus), g, options).at(0, 0);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace tqft
