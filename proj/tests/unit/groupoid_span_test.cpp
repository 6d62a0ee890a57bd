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

#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"
#include "tqft/errors.hpp"
#include "tqft/frobenius.hpp"
#include "tqft/span.hpp"

namespace tqft {
namespace {

using testing::brute_centralizer_order;
using testing::brute_degroupoidify;

void expect_orbit_stabilizer(const ActionGroupoid& g) {
  const IsoClassSpace space = iso_classes(g);
  BigInt total = 0;
  for (std::size_t c = 0; c < space.count(); ++c) {
    EXPECT_EQ(space.aut_orders[c] * space.orbit_sizes[c], g.group_order()) << g.label();
    total += g.group_order() / space.aut_orders[c];
  }
  EXPECT_EQ(total, BigInt(std::to_string(g.size()))) << g.label();
}

TEST(CircleGroupoid, ReferenceValues) {
  const IsoClassSpace z2 = iso_classes(circle_groupoid(group_by_name("Z2")));
  EXPECT_EQ(z2.count(), 2u);
  EXPECT_EQ(z2.aut_orders, (std::vector<BigInt>{2, 2}));
  const IsoClassSpace s3 = iso_classes(circle_groupoid(group_by_name("S3")));
  EXPECT_EQ(s3.aut_orders, (std::vector<BigInt>{6, 3, 2}));
  EXPECT_EQ(s3.orbit_sizes, (std::vector<std::size_t>{1, 2, 3}));
  const IsoClassSpace z3 = iso_classes(circle_groupoid(group_by_name("Z3")));
  EXPECT_EQ(z3.aut_orders, (std::vector<BigInt>{3, 3, 3}));
}

TEST(CircleGroupoid, AutOrdersAreCentralizers) {
  for (const auto& name : builtin_group_names()) {
    const GroupPtr g = group_by_name(name);
    const IsoClassSpace space = iso_classes(circle_groupoid(g));
    for (std::size_t c = 0; c < space.count(); ++c) {
      EXPECT_EQ(space.aut_orders[c], brute_centralizer_order(*g, static_cast<Element>(space.representatives[c])));
    }
    // Cardinality of G//G is 1.
    EXPECT_EQ(space.cardinality(), 1) << name;
  }
}

TEST(IsoClasses, BoundaryFastPathMatchesGenericPath) {
  for (const char* name : {"S3", "Q8", "Z3"}) {
    const GroupPtr g = group_by_name(name);
    for (int n = 0; n <= 2; ++n) {
      const ActionGroupoid boundary = boundary_groupoid(g, n);
      // Same action on an explicitly listed carrier: takes the generic path.
      std::vector<std::uint8_t> data(boundary.size() * static_cast<std::size_t>(n));
      for (std::size_t i = 0; i < boundary.size(); ++i) {
        boundary.carrier().element(i, std::span<std::uint8_t>(data.data() + i * static_cast<std::size_t>(n),
                                                              static_cast<std::size_t>(n)));
      }
      const ActionGroupoid listed(g, n, boundary.rules(), Carrier::listed(g->order(), n, boundary.size(), data),
                                  "listed");
      const IsoClassSpace fast = iso_classes(boundary);
      const IsoClassSpace slow = iso_classes(listed);
      ASSERT_EQ(fast.count(), slow.count());
      EXPECT_EQ(fast.cardinality(), slow.cardinality());
      for (std::size_t i = 0; i < boundary.size(); ++i) {
        for (std::size_t j = 0; j < boundary.size(); ++j) {
          EXPECT_EQ(fast.class_of[i] == fast.class_of[j], slow.class_of[i] == slow.class_of[j]);
        }
      }
    }
  }
}

TEST(IsoClasses, DisjointUnionMultipliesStateSpaces) {
  for (const char* name : {"S3", "Q8"}) {
    const GroupPtr g = group_by_name(name);
    const ActionGroupoid one = circle_groupoid(g);
    const ActionGroupoid two = product(one, one, kDefaultApexCap);
    EXPECT_TRUE(two == boundary_groupoid(g, 2));
    EXPECT_EQ(iso_classes(two).count(), iso_classes(one).count() * iso_classes(one).count());
    EXPECT_EQ(iso_classes(two).cardinality(), iso_classes(one).cardinality() * iso_classes(one).cardinality());
  }
}

TEST(GeneratorSpan, LegsAreEquivariant) {
  for (const char* name : {"Z2", "S3", "Q8"}) {
    const GroupPtr g = group_by_name(name);
    for (Generator gen : kAllGenerators) {
      const GroupoidSpan s = generator_span(gen, g);
      EXPECT_TRUE(s.apex.is_valid_action()) << generator_name(gen);
      EXPECT_TRUE(is_equivariant(s.apex, s.left)) << generator_name(gen);
      EXPECT_TRUE(is_equivariant(s.apex, s.right)) << generator_name(gen);
      EXPECT_EQ(s.source().width(), generator_inputs(gen));
      EXPECT_EQ(s.target().width(), generator_outputs(gen));
      expect_orbit_stabilizer(s.apex);
    }
  }
}

TEST(GeneratorSpan, BrokenLegIsNotEquivariant) {
  GroupoidSpan s = generator_span(Generator::mult, group_by_name("S3"));
  std::swap(s.right.carrier_map[1], s.right.carrier_map[2]);
  EXPECT_FALSE(is_equivariant(s.apex, s.right));
}

TEST(GeneratorSpan, ReferenceValues) {
  const GroupPtr z2 = group_by_name("Z2");
  const GroupoidSpan unit = generator_span(Generator::unit, z2);
  EXPECT_EQ(unit.apex.size(), 1u);
  EXPECT_EQ(unit.right.carrier_map, std::vector<std::uint64_t>{static_cast<std::uint64_t>(z2->identity())});

  const GroupoidSpan mult = generator_span(Generator::mult, z2);
  EXPECT_EQ(mult.apex.size(), 4u);
  EXPECT_EQ(mult.right.carrier_map, (std::vector<std::uint64_t>{0, 1, 1, 0}));

  EXPECT_EQ(degroupoidify(generator_span(Generator::identity, group_by_name("S3"))), LinearMap::identity(3, 1));
}

TEST(Degroupoidify, MatchesCountingOracleOnGenerators) {
  for (const char* name : {"Z2", "Z3", "S3", "Q8", "D4"}) {
    const GroupPtr g = group_by_name(name);
    for (Generator gen : kAllGenerators) {
      const GroupoidSpan s = generator_span(gen, g);
      EXPECT_EQ(degroupoidify(s), brute_degroupoidify(s)) << name << " " << generator_name(gen);
    }
  }
}

TEST(Degroupoidify, GeneratorsMatchTheFrobeniusBackend) {
  for (const auto& name : builtin_group_names()) {
    const GroupPtr g = group_by_name(name);
    const FrobeniusEvaluator ev(center_of_group_algebra(*g));
    for (Generator gen : kAllGenerators) {
      EXPECT_EQ(degroupoidify(generator_span(gen, g)), ev.generator(gen)) << name << " " << generator_name(gen);
    }
  }
}

TEST(Degroupoidify, KernelSeamScalesEntries) {
  const GroupoidSpan s = generator_span(Generator::mult, group_by_name("S3"));
  const LinearMap plain = degroupoidify(s);
  const LinearMap unit_kernel = degroupoidify(s, [](const ActionGroupoid&, std::size_t) { return Rational(1); });
  EXPECT_EQ(plain, unit_kernel);
  const LinearMap doubled = degroupoidify(s, [](const ActionGroupoid&, std::size_t) { return Rational(2); });
  for (std::size_t r = 0; r < plain.rows(); ++r) {
    for (std::size_t c = 0; c < plain.cols(); ++c) EXPECT_EQ(doubled.at(r, c), 2 * plain.at(r, c));
  }
}

TEST(ComposeSpans, ApexSizesForTheHandle) {
  const GroupPtr z2 = group_by_name("Z2");
  const GroupoidSpan comult = generator_span(Generator::comult, z2);
  const GroupoidSpan mult = generator_span(Generator::mult, z2);
  EXPECT_EQ(compose_spans(comult, mult, GaugeFixing::spanning_tree).apex.size(), 8u);
  EXPECT_EQ(compose_spans(comult, mult, GaugeFixing::none).apex.size(), 16u);
  EXPECT_EQ(compose_spans(mult, comult, GaugeFixing::spanning_tree).apex.size(), 8u);
  EXPECT_EQ(compose_spans(mult, comult, GaugeFixing::none).apex.size(), 16u);
}

TEST(ComposeSpans, HandleMatchesFrobeniusHandle) {
  const GroupPtr z2 = group_by_name("Z2");
  const FrobeniusEvaluator ev(center_of_group_algebra(*z2));
  for (GaugeFixing gauge : {GaugeFixing::none, GaugeFixing::spanning_tree}) {
    const GroupoidSpan handle =
        compose_spans(generator_span(Generator::comult, z2), generator_span(Generator::mult, z2), gauge);
    EXPECT_EQ(degroupoidify(handle), ev.evaluate(handle_term()));
  }
}

TEST(ComposeSpans, IdentityGluing) {
  const GroupPtr s3 = group_by_name("S3");
  const GroupoidSpan id = generator_span(Generator::identity, s3);
  EXPECT_EQ(degroupoidify(compose_spans(id, id)), LinearMap::identity(3, 1));
}

TEST(ComposeSpans, FootMismatchIsRejected) {
  const GroupPtr s3 = group_by_name("S3");
  EXPECT_THROW(compose_spans(generator_span(Generator::mult, s3), generator_span(Generator::mult, s3)), UserError);
  EXPECT_THROW(compose_spans(generator_span(Generator::identity, s3),
                             generator_span(Generator::identity, group_by_name("Z3"))),
               UserError);
}

TEST(ComposeSpans, CapIsEnforced) {
  const GroupPtr s3 = group_by_name("S3");
  EXPECT_THROW(compose_spans(generator_span(Generator::comult, s3), generator_span(Generator::mult, s3),
                             GaugeFixing::none, 10),
               ResourceLimitError);
}

// Monoidality of degroupoidification: every composable generator pair, with
// and without gauge fixing, plus the counting oracle on the composite.
TEST(ComposeSpans, FunctorialOnGeneratorPairs) {
  for (const char* name : {"Z2", "Z3", "S3"}) {
    const GroupPtr g = group_by_name(name);
    for (Generator a : kAllGenerators) {
      for (Generator b : kAllGenerators) {
        if (generator_outputs(a) != generator_inputs(b)) continue;
        const GroupoidSpan sa = generator_span(a, g);
        const GroupoidSpan sb = generator_span(b, g);
        const LinearMap expected = degroupoidify(sb) * degroupoidify(sa);
        for (GaugeFixing gauge : {GaugeFixing::none, GaugeFixing::spanning_tree}) {
          const GroupoidSpan c = compose_spans(sa, sb, gauge);
          EXPECT_TRUE(is_equivariant(c.apex, c.left));
          EXPECT_TRUE(is_equivariant(c.apex, c.right));
          expect_orbit_stabilizer(c.apex);
          EXPECT_EQ(degroupoidify(c), expected) << name << " " << generator_name(a) << ";" << generator_name(b);
          EXPECT_EQ(brute_degroupoidify(c), expected);
        }
      }
    }
  }
}

TEST(TensorSpans, DegroupoidifiesToKronecker) {
  const GroupPtr s3 = group_by_name("S3");
  for (Generator a : kAllGenerators) {
    for (Generator b : kAllGenerators) {
      const GroupoidSpan sa = generator_span(a, s3);
      const GroupoidSpan sb = generator_span(b, s3);
      const GroupoidSpan t = tensor_spans(sa, sb);
      EXPECT_TRUE(is_equivariant(t.apex, t.left));
      EXPECT_TRUE(is_equivariant(t.apex, t.right));
      EXPECT_EQ(degroupoidify(t), kronecker(degroupoidify(sa), degroupoidify(sb)));
    }
  }
}

TEST(Quantize, ReferenceValues) {
  const GroupPtr s3 = group_by_name("S3");
  EXPECT_EQ(quantize(Generator::identity, s3), LinearMap::identity(3, 1));
  EXPECT_EQ(quantize(closed_surface_term(1), s3).at(0, 0), 3);
  for (const char* name : {"Z2", "Z3", "S3"}) {
    const GroupPtr g = group_by_name(name);
    EXPECT_EQ(quantize(Generator::mult, g), evaluate(Generator::mult, center_of_group_algebra(*g)));
  }
}

// The literal pullback grows exponentially with the number of gluings, so
// the comparison runs under a small cap and skips terms that exceed it.
TEST(Quantize, GaugeFixingDoesNotChangeTheMap) {
  constexpr std::uint64_t kSmallCap = 200'000;
  testing::TermGenerator gen(31);
  int compared = 0;
  for (const char* name : {"Z2", "Z3", "S3"}) {
    const GroupPtr g = group_by_name(name);
    for (int i = 0; i < 40; ++i) {
      const CobTerm f = gen.any(4);
      const LinearMap fixed = quantize(f, g, {kDefaultApexCap, GaugeFixing::spanning_tree});
      EXPECT_EQ(fixed, quantize_stepwise(f, g)) << to_string(f);
      try {
        EXPECT_EQ(fixed, quantize(f, g, {kSmallCap, GaugeFixing::none})) << to_string(f);
        ++compared;
      } catch (const ResourceLimitError&) {
      }
    }
  }
  EXPECT_GE(compared, 60);
}

TEST(Quantize, GaugeFixingShrinksTheApex) {
  const GroupPtr s3 = group_by_name("S3");
  const CobTerm torus = closed_surface_term(1);
  const std::size_t fixed = term_span(torus, s3, {kDefaultApexCap, GaugeFixing::spanning_tree}).apex.size();
  const std::size_t literal = term_span(torus, s3, {kDefaultApexCap, GaugeFixing::none}).apex.size();
  EXPECT_LT(fixed, literal);
  EXPECT_EQ(fixed, 18u);
}

TEST(Quantize, BackendEquivalenceOnRandomTerms) {
  testing::TermGenerator gen(32);
  for (const char* name : {"Z2", "Z3", "S3", "Q8"}) {
    const GroupPtr g = group_by_name(name);
    const FrobeniusEvaluator ev(center_of_group_algebra(*g));
    for (int i = 0; i < 25; ++i) {
      const CobTerm f = gen.any(5);
      EXPECT_EQ(quantize(f, g), ev.evaluate(f)) << name << " " << to_string(f);
    }
  }
}

TEST(Quantize, GluingTraceLaw) {
  for (const char* name : {"Z2", "S3"}) {
    const GroupPtr g = group_by_name(name);
    for (int genus = 1; genus <= 3; ++genus) {
      EXPECT_EQ(quantize(cut_surface_term(genus), g).trace(), quantize(closed_surface_term(genus), g).at(0, 0));
    }
  }
}

TEST(Quantize, ApexCapIsEnforced) {
  EXPECT_THROW(quantize(closed_surface_term(3), group_by_name("S3"), {100, GaugeFixing::spanning_tree}),
               ResourceLimitError);
}

}  // namespace
}  // namespace tqft
