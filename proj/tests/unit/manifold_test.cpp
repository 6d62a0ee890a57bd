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

#include "oracles.hpp"
#include "tqft/errors.hpp"
#include "tqft/frobenius.hpp"
#include "tqft/manifold.hpp"

namespace tqft {
namespace {

Rational ratio(std::uint64_t count, int order) {
  Rational r(BigInt(std::to_string(count)), BigInt(order));
  r.canonicalize();
  return r;
}

TEST(Invariant, ReferenceValues) {
  const GroupPtr s3 = group_by_name("S3");
  EXPECT_EQ(invariant(Manifold::surface(0), *s3), Rational(1, 6));
  EXPECT_EQ(invariant(Manifold::surface(2), *s3), 81);
  EXPECT_EQ(invariant(Manifold::lens(3, 1), *s3), Rational(1, 2));
}

TEST(Invariant, LensIgnoresQ) {
  const GroupPtr q8 = group_by_name("Q8");
  for (int q = 1; q < 5; ++q) EXPECT_EQ(invariant(Manifold::lens(5, q), *q8), invariant(Manifold::lens(5, 1), *q8));
}

TEST(Invariant, Torus3CountsCommutingTriples) {
  for (const auto& name : builtin_group_names()) {
    const GroupPtr g = group_by_name(name);
    EXPECT_EQ(invariant(Manifold::torus3(), *g) * g->order(),
              Rational(BigInt(std::to_string(testing::brute_commuting_triples(*g)))))
        << name;
  }
}

TEST(Invariant, LensMatchesOrderCounting) {
  for (const auto& name : builtin_group_names()) {
    const GroupPtr g = group_by_name(name);
    for (int p = 1; p <= 6; ++p) {
      EXPECT_EQ(invariant(Manifold::lens(p, 1), *g), ratio(testing::brute_order_dividing(*g, p), g->order()));
    }
  }
}

TEST(Invariant, DisjointUnionIsMultiplicative) {
  const GroupPtr s3 = group_by_name("S3");
  const std::vector<Manifold> parts{Manifold::surface(1), Manifold::lens(2, 1), Manifold::torus3()};
  Rational product = 1;
  for (const auto& m : parts) product *= invariant(m, *s3);
  EXPECT_EQ(invariant(parts, *s3), product);
  EXPECT_EQ(invariant(std::vector<Manifold>{}, *s3), 1);
}

TEST(Invariant, CustomPresentation) {
  const GroupPtr s3 = group_by_name("S3");
  // <a, b | a^2, b^3, (ab)^2> is S3 itself: |Hom(S3, S3)| = 10.
  const GroupPresentation p = parse_presentation("2\na^2\nb^3\na b a b\n", "S3 presentation");
  const Manifold m = Manifold::custom(p);
  EXPECT_EQ(m.name, "S3 presentation");
  EXPECT_EQ(invariant(m, *s3), Rational(5, 3));
  EXPECT_EQ(invariant(Manifold::custom(surface_presentation(2)), *s3), 81);
}

TEST(Invariant, InvalidManifoldsAreUserErrors) {
  const GroupPtr z2 = group_by_name("Z2");
  EXPECT_THROW(invariant(Manifold::surface(-1), *z2), UserError);
  EXPECT_THROW(invariant(Manifold::lens(0, 1), *z2), UserError);
  EXPECT_THROW(invariant(Manifold::custom(GroupPresentation{1, {{3}}, "bad"}), *z2), UserError);
  EXPECT_THROW(invariant(Manifold::surface(3), *group_by_name("S4")), ResourceLimitError);
}

TEST(Invariant, BackendsAgreeOnClosedSurfaces) {
  for (const auto& name : builtin_group_names()) {
    const GroupPtr g = group_by_name(name);
    const int max_genus = g->order() <= 4 ? 3 : 2;
    for (const OracleRow& row : oracle_report(g, max_genus)) {
      EXPECT_TRUE(row.all_equal()) << name << " genus " << row.genus;
      EXPECT_EQ(row.count, ratio(testing::brute_surface_solutions(*g, row.genus), g->order()));
    }
  }
}

TEST(OracleReport, ReferenceValues) {
  const auto z2 = oracle_report(group_by_name("Z2"), 2);
  ASSERT_EQ(z2.size(), 3u);
  EXPECT_EQ(z2[0].count, Rational(1, 2));
  EXPECT_EQ(z2[1].count, 2);
  EXPECT_EQ(z2[2].count, 8);
  const auto s3 = oracle_report(group_by_name("S3"), 1);
  EXPECT_EQ(s3[1].count, 3);
  EXPECT_TRUE(s3[1].all_equal());
  for (const auto& name : builtin_group_names()) {
    const GroupPtr g = group_by_name(name);
    const OracleRow row = oracle_report(g, 0).front();
    EXPECT_EQ(row.count, Rational(1, g->order()));
    EXPECT_TRUE(row.all_equal());
  }
  EXPECT_THROW(oracle_report(group_by_name("Z2"), -1), UserError);
}

}  // namespace
}  // namespace tqft
