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

#include "tqft/frobenius.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>
#include <tuple>

#include "tqft/errors.hpp"

namespace tqft {

namespace {

LinearMap mult_matrix(const FrobeniusAlgebra& a) {
  LinearMap m(a.dim, 2, 1);
  for (std::size_t i = 0; i < a.dim; ++i) {
    for (std::size_t j = 0; j < a.dim; ++j) {
      for (std::size_t k = 0; k < a.dim; ++k) m.at(k, i * a.dim + j) = a.c(i, j, k);
    }
  }
  return m;
}

// Delta(e_k) = sum_{a,b,i} Pinv(a,b) c(k,a,i) e_i ⊗ e_b
LinearMap comult_matrix(const FrobeniusAlgebra& a, const std::vector<Rational>& pinv) {
  const std::size_t d = a.dim;
  LinearMap m(d, 1, 2);
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t x = 0; x < d; ++x) {
      for (std::size_t i = 0; i < d; ++i) {
        const Rational& ckxi = a.c(k, x, i);
        if (sgn(ckxi) == 0) continue;
        for (std::size_t b = 0; b < d; ++b) m.at(i * d + b, k) += pinv[x * d + b] * ckxi;
      }
    }
  }
  return m;
}

LinearMap unit_matrix(const FrobeniusAlgebra& a) {
  LinearMap m(a.dim, 0, 1);
  for (std::size_t i = 0; i < a.dim; ++i) m.at(i, 0) = a.unit[i];
  return m;
}

LinearMap counit_matrix(const FrobeniusAlgebra& a) {
  LinearMap m(a.dim, 1, 0);
  for (std::size_t i = 0; i < a.dim; ++i) m.at(0, i) = a.counit[i];
  return m;
}

LinearMap twist_matrix(std::size_t d) {
  LinearMap m(d, 2, 2);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) m.at(j * d + i, i * d + j) = 1;
  }
  return m;
}

LinearMap square_matrix(std::size_t d, const std::vector<Rational>& entries) {
  LinearMap m(d, 1, 1);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) m.at(i, j) = entries[i * d + j];
  }
  return m;
}

LinearMap kronecker_power(const LinearMap& m, int n) {
  LinearMap result = LinearMap::identity(m.dim(), 0);
  for (int i = 0; i < n; ++i) result = kronecker(result, m);
  return result;
}

std::vector<std::size_t> unflatten(std::size_t index, std::size_t d, int digits) {
  std::vector<std::size_t> out(static_cast<std::size_t>(digits));
  for (int p = digits - 1; p >= 0; --p) {
    out[static_cast<std::size_t>(p)] = index % d;
    index /= d;
  }
  return out;
}

// First differing entry of two equally shaped maps, as (row digits..., col digits...).
std::optional<std::vector<std::size_t>> first_difference(const LinearMap& x, const LinearMap& y) {
  for (std::size_t r = 0; r < x.rows(); ++r) {
    for (std::size_t c = 0; c < x.cols(); ++c) {
      if (x.at(r, c) != y.at(r, c)) {
        auto w = unflatten(r, x.dim(), x.out_arity());
        auto wc = unflatten(c, x.dim(), x.in_arity());
        w.insert(w.end(), wc.begin(), wc.end());
        return w;
      }
    }
  }
  return std::nullopt;
}

void check_shape(const FrobeniusAlgebra& a) {
  const std::size_t d = a.dim;
  if (d == 0 || a.mult.size() != d * d * d || a.unit.size() != d || a.counit.size() != d) {
    throw UserError("algebra '" + a.name + "' has inconsistent shape");
  }
}

Rational read_rational(const nlohmann::json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return parse_rational(std::to_string(v.get<long long>()));
  throw UserError("expected a rational as string \"p/q\" or integer");
}

std::vector<Rational> read_vector(const nlohmann::json& v, std::size_t dim, const char* field) {
  if (!v.is_array() || v.size() != dim) {
    throw UserError(std::string("field '") + field + "' must be an array of length " +
                    std::to_string(dim));
  }
  std::vector<Rational> out;
  out.reserve(dim);
  for (const auto& x : v) out.push_back(read_rational(x));
  return out;
}

}  // namespace

FrobeniusAlgebra::FrobeniusAlgebra(std::string n, std::size_t d)
    : name(std::move(n)), dim(d), mult(d * d * d), unit(d), counit(d) {}

std::vector<Rational> FrobeniusAlgebra::pairing() const {
  std::vector<Rational> p(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      Rational sum = 0;
      for (std::size_t k = 0; k < dim; ++k) sum += c(i, j, k) * counit[k];
      p[i * dim + j] = sum;
    }
  }
  return p;
}

bool ValidationReport::ok() const noexcept {
  return std::all_of(results.begin(), results.end(), [](const AxiomResult& r) { return r.passed; });
}

const AxiomResult* ValidationReport::find(std::string_view axiom) const noexcept {
  for (const auto& r : results) {
    if (r.axiom == axiom) return &r;
  }
  return nullptr;
}

std::optional<std::vector<Rational>> invert_matrix(std::vector<Rational> m, std::size_t n,
                                                   std::size_t* singular_column) {
  std::vector<Rational> inv(n * n);
  for (std::size_t i = 0; i < n; ++i) inv[i * n + i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(m[pivot * n + col]) == 0) ++pivot;
    if (pivot == n) {
      if (singular_column) *singular_column = col;
      return std::nullopt;
    }
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m[pivot * n + j], m[col * n + j]);
        std::swap(inv[pivot * n + j], inv[col * n + j]);
      }
    }
    const Rational scale = 1 / m[col * n + col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col * n + j] *= scale;
      inv[col * n + j] *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(m[r * n + col]) == 0) continue;
      const Rational factor = m[r * n + col];
      for (std::size_t j = 0; j < n; ++j) {
        m[r * n + j] -= factor * m[col * n + j];
        inv[r * n + j] -= factor * inv[col * n + j];
      }
    }
  }
  return inv;
}

ValidationReport validate(const FrobeniusAlgebra& a) {
  check_shape(a);
  const std::size_t d = a.dim;
  ValidationReport report;

  AxiomResult assoc{"associativity", true, {}, {}};
  for (std::size_t i = 0; i < d && assoc.passed; ++i) {
    for (std::size_t j = 0; j < d && assoc.passed; ++j) {
      for (std::size_t k = 0; k < d && assoc.passed; ++k) {
        for (std::size_t l = 0; l < d; ++l) {
          Rational lhs = 0, rhs = 0;
          for (std::size_t m = 0; m < d; ++m) {
            lhs += a.c(i, j, m) * a.c(m, k, l);
            rhs += a.c(j, k, m) * a.c(i, m, l);
          }
          if (lhs != rhs) {
            assoc.passed = false;
            assoc.witness = {i, j, k, l};
            assoc.detail = "(e_i e_j) e_k != e_i (e_j e_k) in coordinate l";
            break;
          }
        }
      }
    }
  }
  report.results.push_back(assoc);

  AxiomResult comm{"commutativity", true, {}, {}};
  for (std::size_t i = 0; i < d && comm.passed; ++i) {
    for (std::size_t j = i + 1; j < d && comm.passed; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        if (a.c(i, j, k) != a.c(j, i, k)) {
          comm.passed = false;
          comm.witness = {i, j, k};
          comm.detail = "c(i,j,k) != c(j,i,k)";
          break;
        }
      }
    }
  }
  report.results.push_back(comm);

  AxiomResult unit{"unit", true, {}, {}};
  for (std::size_t j = 0; j < d && unit.passed; ++j) {
    for (std::size_t k = 0; k < d; ++k) {
      Rational left = 0, right = 0;
      for (std::size_t i = 0; i < d; ++i) {
        left += a.unit[i] * a.c(i, j, k);
        right += a.unit[i] * a.c(j, i, k);
      }
      const Rational expected = j == k ? 1 : 0;
      if (left != expected || right != expected) {
        unit.passed = false;
        unit.witness = {j, k};
        unit.detail = "1 * e_j != e_j in coordinate k";
        break;
      }
    }
  }
  report.results.push_back(unit);

  AxiomResult nondegenerate{"nondegeneracy", true, {}, {}};
  std::size_t singular = 0;
  const auto pinv = invert_matrix(a.pairing(), d, &singular);
  if (!pinv) {
    nondegenerate.passed = false;
    nondegenerate.witness = {singular};
    nondegenerate.detail = "pairing counit(e_i e_j) is singular";
  }
  report.results.push_back(nondegenerate);

  AxiomResult coassoc{"coassociativity", true, {}, {}};
  AxiomResult frobenius{"frobenius", true, {}, {}};
  if (!pinv) {
    coassoc.passed = frobenius.passed = false;
    coassoc.detail = frobenius.detail = "comultiplication undefined: pairing is singular";
  } else {
    const LinearMap id = LinearMap::identity(d, 1);
    const LinearMap m = mult_matrix(a);
    const LinearMap delta = comult_matrix(a, *pinv);
    const LinearMap left_co = kronecker(delta, id) * delta;
    const LinearMap right_co = kronecker(id, delta) * delta;
    if (auto w = first_difference(left_co, right_co)) {
      coassoc.passed = false;
      coassoc.witness = *w;
      coassoc.detail = "(Delta ⊗ id) Delta != (id ⊗ Delta) Delta";
    }
    const LinearMap middle = delta * m;
    const LinearMap left_fr = kronecker(id, m) * kronecker(delta, id);
    const LinearMap right_fr = kronecker(m, id) * kronecker(id, delta);
    auto w = first_difference(left_fr, middle);
    if (!w) w = first_difference(right_fr, middle);
    if (w) {
      frobenius.passed = false;
      frobenius.witness = *w;
      frobenius.detail = "(id ⊗ m)(Delta ⊗ id) = Delta m = (m ⊗ id)(id ⊗ Delta) fails";
    }
  }
  report.results.push_back(coassoc);
  report.results.push_back(frobenius);
  return report;
}

std::string format_report(const ValidationReport& report) {
  std::ostringstream out;
  for (const auto& r : report.results) {
    out << r.axiom << '\t' << (r.passed ? "pass" : "fail") << '\t';
    if (r.witness.empty()) {
      out << '-';
    } else {
      for (std::size_t i = 0; i < r.witness.size(); ++i) out << (i ? "," : "") << r.witness[i];
    }
    out << '\t' << (r.detail.empty() ? "-" : r.detail) << '\n';
  }
  return out.str();
}

FrobeniusAlgebra center_of_group_algebra(const FiniteGroup& g) {
  const ConjugacyClasses classes = conjugacy_classes(g);
  const std::size_t d = classes.count();
  FrobeniusAlgebra a("Z(Q[" + g.name() + "])", d);
  // z_A z_B = sum_C N(A,B;C) z_C, N counting (x,y) in A x B with xy = rep(C).
  for (std::size_t A = 0; A < d; ++A) {
    for (std::size_t B = 0; B < d; ++B) {
      std::vector<long> hits(static_cast<std::size_t>(g.order()), 0);
      for (Element x : classes.members[A]) {
        for (Element y : classes.members[B]) ++hits[static_cast<std::size_t>(g.mul(x, y))];
      }
      for (std::size_t C = 0; C < d; ++C) {
        a.c(A, B, C) = hits[static_cast<std::size_t>(classes.representatives[C])];
      }
    }
  }
  a.unit[0] = 1;
  a.counit[0] = Rational(1, g.order());
  return a;
}

FrobeniusAlgebra ground_field() {
  FrobeniusAlgebra a("Q", 1);
  a.c(0, 0, 0) = 1;
  a.unit[0] = 1;
  a.counit[0] = 1;
  return a;
}

FrobeniusEvaluator::FrobeniusEvaluator(FrobeniusAlgebra a) : algebra_(std::move(a)) {
  const ValidationReport report = validate(algebra_);
  if (!report.ok()) {
    std::string failed;
    for (const auto& r : report.results) {
      if (!r.passed) failed += (failed.empty() ? "" : ", ") + r.axiom;
    }
    throw ValidationError("algebra '" + algebra_.name + "' fails: " + failed);
  }
  const std::size_t d = algebra_.dim;
  pairing_inverse_ = *invert_matrix(algebra_.pairing(), d);
  generators_.resize(kAllGenerators.size());
  generators_[static_cast<std::size_t>(Generator::unit)] = unit_matrix(algebra_);
  generators_[static_cast<std::size_t>(Generator::counit)] = counit_matrix(algebra_);
  generators_[static_cast<std::size_t>(Generator::mult)] = mult_matrix(algebra_);
  generators_[static_cast<std::size_t>(Generator::comult)] = comult_matrix(algebra_, pairing_inverse_);
  generators_[static_cast<std::size_t>(Generator::identity)] = LinearMap::identity(d, 1);
  generators_[static_cast<std::size_t>(Generator::twist)] = twist_matrix(d);

  const std::vector<Rational> p = algebra_.pairing();
  pairing_ = LinearMap(d, 2, 0);
  copairing_ = LinearMap(d, 0, 2);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      pairing_.at(0, i * d + j) = p[i * d + j];
      copairing_.at(i * d + j, 0) = pairing_inverse_[i * d + j];
    }
  }
}

const LinearMap& FrobeniusEvaluator::generator(Generator g) const {
  return generators_[static_cast<std::size_t>(g)];
}

LinearMap FrobeniusEvaluator::evaluate(const CobTerm& f) const {
  switch (f.kind()) {
    case CobTerm::Kind::generator:
      return generator(f.generator());
    case CobTerm::Kind::compose:
      return evaluate(f.second()) * evaluate(f.first());
    case CobTerm::Kind::tensor:
      return kronecker(evaluate(f.first()), evaluate(f.second()));
  }
  return {};
}

Rational FrobeniusEvaluator::closed_invariant(int genus) const {
  if (genus < 0) throw UserError("genus must be non-negative");
  const LinearMap handle = generator(Generator::mult) * generator(Generator::comult);
  LinearMap state = generator(Generator::unit);
  for (int i = 0; i < genus; ++i) state = handle * state;
  return (generator(Generator::counit) * state).at(0, 0);
}

LinearMap FrobeniusEvaluator::adjoint(const LinearMap& m) const {
  const std::size_t d = algebra_.dim;
  const LinearMap p = square_matrix(d, algebra_.pairing());
  const LinearMap pinv = square_matrix(d, pairing_inverse_);
  return kronecker_power(pinv, m.in_arity()) * m.transposed() * kronecker_power(p, m.out_arity());
}

LinearMap evaluate(const CobTerm& f, const FrobeniusAlgebra& a) {
  return FrobeniusEvaluator(a).evaluate(f);
}

Rational closed_invariant(int genus, const FrobeniusAlgebra& a) {
  return FrobeniusEvaluator(a).closed_invariant(genus);
}

FrobeniusAlgebra parse_algebra(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw UserError(std::string("algebra file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("dim") || !doc["dim"].is_number_integer()) {
    throw UserError("algebra file needs an integer field 'dim'");
  }
  const long long dim = doc["dim"].get<long long>();
  if (dim < 1 || dim > 4096) throw UserError("algebra dim out of range");
  FrobeniusAlgebra a(doc.value("name", std::string("algebra")), static_cast<std::size_t>(dim));
  const auto d = static_cast<std::size_t>(dim);
  if (doc.contains("mult")) {
    if (!doc["mult"].is_array()) throw UserError("field 'mult' must be an array");
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
    for (const auto& entry : doc["mult"]) {
      if (!entry.is_array() || entry.size() != 4 || !entry[0].is_number_integer() ||
          !entry[1].is_number_integer() || !entry[2].is_number_integer()) {
        throw UserError("mult entries must be [i, j, k, value]");
      }
      const long long i = entry[0].get<long long>();
      const long long j = entry[1].get<long long>();
      const long long k = entry[2].get<long long>();
      if (i < 0 || j < 0 || k < 0 || i >= dim || j >= dim || k >= dim) {
        throw UserError("mult entry index out of range");
      }
      const auto key = std::make_tuple(static_cast<std::size_t>(i), static_cast<std::size_t>(j),
                                       static_cast<std::size_t>(k));
      if (!seen.insert(key).second) throw UserError("duplicate mult entry");
      a.c(std::get<0>(key), std::get<1>(key), std::get<2>(key)) = read_rational(entry[3]);
    }
  }
  if (!doc.contains("unit") || !doc.contains("counit")) {
    throw UserError("algebra file needs fields 'unit' and 'counit'");
  }
  a.unit = read_vector(doc["unit"], d, "unit");
  a.counit = read_vector(doc["counit"], d, "counit");
  return a;
}

std::string format_algebra(const FrobeniusAlgebra& a) {
  nlohmann::ordered_json j;
  j["name"] = a.name;
  j["dim"] = a.dim;
  auto mult = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < a.dim; ++i) {
    for (std::size_t jj = 0; jj < a.dim; ++jj) {
      for (std::size_t k = 0; k < a.dim; ++k) {
        if (sgn(a.c(i, jj, k)) != 0) mult.push_back({i, jj, k, format_rational(a.c(i, jj, k))});
      }
    }
  }
  j["mult"] = std::move(mult);
  auto vec = [](const std::vector<Rational>& v) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& x : v) arr.push_back(format_rational(x));
    return arr;
  };
  j["unit"] = vec(a.unit);
  j["counit"] = vec(a.counit);
  return j.dump(2) + "\n";
}

}  // namespace tqft
