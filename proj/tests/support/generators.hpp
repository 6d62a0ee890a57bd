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
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tqft/cob_term.hpp"
#include "printers.hpp"
#include "tqft/frobenius.hpp"

namespace tqft::testing {

/// Random well-formed cobordism terms with bounded boundary arity.
class TermGenerator {
 public:
  explicit TermGenerator(std::uint64_t seed, int max_arity = 3) : rng_(seed), max_arity_(max_arity) {}

  /// A term with `in` inputs and depth at most `max_depth`.
  CobTerm with_inputs(int in, int max_depth);
  /// Random input arity in [0, max_arity].
  CobTerm any(int max_depth);
  /// A term from `in` to exactly `out` circles.
  CobTerm between(int in, int out, int max_depth);

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }
  std::mt19937_64& engine() noexcept { return rng_; }
  int max_arity() const noexcept { return max_arity_; }

 private:
  CobTerm layer(int in);
  CobTerm grow(int in, int depth);

  std::mt19937_64 rng_;
  int max_arity_;
};

struct Relation {
  std::string name;
  CobTerm lhs;
  CobTerm rhs;
};

/// Generating relations of the 2d cobordism category, both sides as terms.
const std::vector<Relation>& relation_instances();

/// id^a * f * id^b, omitting empty factors.
CobTerm pad(const CobTerm& f, int before, int after);

/// Both sides of a random relation placed in the same random context.
std::pair<CobTerm, CobTerm> rewritten_pair(TermGenerator& gen);

/// Q[x]/(x^2) with counit reading the x coefficient.
FrobeniusAlgebra dual_numbers();
/// Q x Q with idempotent basis and counit weights (a, b), both nonzero.
FrobeniusAlgebra split_algebra(const Rational& a, const Rational& b);
/// Valid commutative Frobenius algebras used throughout the suites.
std::vector<FrobeniusAlgebra> sample_algebras();

}  // namespace tqft::testing
