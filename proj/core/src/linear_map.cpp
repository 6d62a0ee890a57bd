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

#include "tqft/linear_map.hpp"

#include <limits>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

namespace tqft {

std::size_t tensor_power(std::size_t dim, int n) {
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (dim != 0 && total > std::numeric_limits<std::size_t>::max() / dim) {
      throw std::overflow_error("tensor power overflows");
    }
    total *= dim;
  }
  return total;
}

LinearMap::LinearMap(std::size_t dim, int in_arity, int out_arity)
    : dim_(dim),
      in_(in_arity),
      out_(out_arity),
      rows_(tensor_power(dim, out_arity)),
      cols_(tensor_power(dim, in_arity)),
      entries_(rows_ * cols_) {}

LinearMap LinearMap::identity(std::size_t dim, int arity) {
  LinearMap m(dim, arity, arity);
  for (std::size_t i = 0; i < m.rows_; ++i) m.at(i, i) = 1;
  return m;
}

LinearMap LinearMap::scalar(std::size_t dim, const Rational& value) {
  LinearMap m(dim, 0, 0);
  m.at(0, 0) = value;
  return m;
}

LinearMap LinearMap::transposed() const {
  LinearMap t(dim_, out_, in_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  }
  return t;
}

Rational LinearMap::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("trace of a non-square map");
  Rational sum = 0;
  for (std::size_t i = 0; i < rows_; ++i) sum += at(i, i);
  return sum;
}

LinearMap operator*(const LinearMap& a, const LinearMap& b) {
  if (a.dim() != b.dim() || a.in_arity() != b.out_arity()) {
    throw std::invalid_argument("linear map product: shape mismatch");
  }
  LinearMap product(a.dim(), b.in_arity(), a.out_arity());
  // Row-sparse: skip zero entries of both operands.
  std::vector<std::vector<std::size_t>> b_nonzero(b.rows());
  for (std::size_t k = 0; k < b.rows(); ++k) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (sgn(b.at(k, j)) != 0) b_nonzero[k].push_back(j);
    }
  }
  Rational term;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a.at(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j : b_nonzero[k]) {
        mpq_mul(term.get_mpq_t(), aik.get_mpq_t(), b.at(k, j).get_mpq_t());
        product.at(i, j) += term;
      }
    }
  }
  return product;
}

LinearMap kronecker(const LinearMap& a, const LinearMap& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("kronecker: dimension mismatch");
  LinearMap k(a.dim(), a.in_arity() + b.in_arity(), a.out_arity() + b.out_arity());
  for (std::size_t ar = 0; ar < a.rows(); ++ar) {
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const Rational& x = a.at(ar, ac);
      if (sgn(x) == 0) continue;
      for (std::size_t br = 0; br < b.rows(); ++br) {
        for (std::size_t bc = 0; bc < b.cols(); ++bc) {
          const Rational& y = b.at(br, bc);
          if (sgn(y) == 0) continue;
          k.at(ar * b.rows() + br, ac * b.cols() + bc) = x * y;
        }
      }
    }
  }
  return k;
}

std::string format_tsv(const LinearMap& m) {
  std::ostringstream out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) out << '\t';
      out << format_rational(m.at(r, c));
    }
    out << '\n';
  }
  return out.str();
}

std::string format_json(const LinearMap& m) {
  nlohmann::ordered_json j;
  j["in_arity"] = m.in_arity();
  j["out_arity"] = m.out_arity();
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(format_rational(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j.dump();
}

}  // namespace tqft
