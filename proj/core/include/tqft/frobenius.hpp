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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tqft/cob_term.hpp"
#include "tqft/finite_group.hpp"
#include "tqft/linear_map.hpp"
#include "tqft/rational.hpp"

namespace tqft {

/// Finite-dimensional commutative Frobenius algebra over Q, given by structure
/// constants e_i e_j = sum_k c(i,j,k) e_k, a unit vector and a counit covector.
/// The comultiplication is derived from the multiplication and the pairing.
struct FrobeniusAlgebra {
  std::string name;
  std::size_t dim = 0;
  std::vector<Rational> mult;  // dim^3, index (i * dim + j) * dim + k
  std::vector<Rational> unit;
  std::vector<Rational> counit;

  FrobeniusAlgebra() = default;
  FrobeniusAlgebra(std::string name, std::size_t dim);

  Rational& c(std::size_t i, std::size_t j, std::size_t k) { return mult[(i * dim + j) * dim + k]; }
  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
    return mult[(i * dim + j) * dim + k];
  }

  /// P(i,j) = counit(e_i e_j)
  std::vector<Rational> pairing() const;
};

struct AxiomResult {
  std::string axiom;
  bool passed = true;
  /// Index tuple exhibiting the failure (empty when passed).
  std::vector<std::size_t> witness;
  std::string detail;
};

struct ValidationReport {
  std::vector<AxiomResult> results;

  bool ok() const noexcept;
  const AxiomResult* find(std::string_view axiom) const noexcept;
};

/// Checks, in order: associativity, commutativity, unit, nondegeneracy,
/// coassociativity, frobenius. The last two use the derived comultiplication
/// and fail with an empty witness if the pairing is singular.
ValidationReport validate(const FrobeniusAlgebra& a);

std::string format_report(const ValidationReport& report);

/// Gauss-Jordan inverse of a row-major n x n matrix. Returns std::nullopt for
/// a singular matrix and reports the first column without a pivot.
std::optional<std::vector<Rational>> invert_matrix(std::vector<Rational> m, std::size_t n,
                                                   std::size_t* singular_column = nullptr);

/// Center of the group algebra Q[G], in the basis of conjugacy-class sums
/// (ordered as conjugacy_classes). The counit reads the coefficient of the
/// identity divided by |G|, so a closed genus-g surface evaluates to
/// |Hom(pi_1, G)| / |G|.
FrobeniusAlgebra center_of_group_algebra(const FiniteGroup& g);

/// The one-dimensional algebra Q with all structure maps 1.
FrobeniusAlgebra ground_field();

/// Matrices of the generating cobordisms under a validated algebra.
class FrobeniusEvaluator {
 public:
  /// Throws ValidationError if `a` fails validate().
  explicit FrobeniusEvaluator(FrobeniusAlgebra a);

  const FrobeniusAlgebra& algebra() const noexcept { return algebra_; }
  const LinearMap& generator(Generator g) const;
  /// Pairing P as a map V ⊗ V -> Q and copairing P^{-1} as Q -> V ⊗ V.
  const LinearMap& pairing() const noexcept { return pairing_; }
  const LinearMap& copairing() const noexcept { return copairing_; }

  /// Compose -> matrix product, Tensor -> Kronecker product.
  LinearMap evaluate(const CobTerm& f) const;
  /// counit(H^genus(unit)), H = mult . comult.
  Rational closed_invariant(int genus) const;
  /// Adjoint of m with respect to P on every boundary factor:
  /// the map A* with P(A* v, w) = P(v, A w).
  LinearMap adjoint(const LinearMap& m) const;

 private:
  FrobeniusAlgebra algebra_;
  std::vector<LinearMap> generators_;
  LinearMap pairing_;
  LinearMap copairing_;
  std::vector<Rational> pairing_inverse_;
};

LinearMap evaluate(const CobTerm& f, const FrobeniusAlgebra& a);
Rational closed_invariant(int genus, const FrobeniusAlgebra& a);

/// JSON document: {"name": s, "dim": n, "mult": [[i,j,k,"p/q"],...],
/// "unit": [...], "counit": [...]}. Rationals may be strings or integers;
/// omitted structure constants are zero. Throws UserError.
FrobeniusAlgebra parse_algebra(std::string_view json_text);
std::string format_algebra(const FrobeniusAlgebra& a);

}  // namespace tqft
