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
#include <string>
#include <vector>

#include "tqft/rational.hpp"

namespace tqft {

/// Exact matrix V^{⊗in} -> V^{⊗out} for a state space V of dimension `dim`.
/// Tensor indices are flattened with the leftmost factor varying slowest.
class LinearMap {
 public:
  LinearMap() = default;
  /// Zero map.
  LinearMap(std::size_t dim, int in_arity, int out_arity);

  static LinearMap identity(std::size_t dim, int arity);
  /// 1x1 map holding a scalar (in = out = 0).
  static LinearMap scalar(std::size_t dim, const Rational& value);

  std::size_t dim() const noexcept { return dim_; }
  int in_arity() const noexcept { return in_; }
  int out_arity() const noexcept { return out_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  /// Matrix transpose (swaps arities).
  LinearMap transposed() const;
  Rational trace() const;

  friend bool operator==(const LinearMap&, const LinearMap&) = default;

 private:
  std::size_t dim_ = 1;
  int in_ = 0;
  int out_ = 0;
  std::size_t rows_ = 1;
  std::size_t cols_ = 1;
  std::vector<Rational> entries_;
};

/// dim^n, with overflow checks.
std::size_t tensor_power(std::size_t dim, int n);

/// Matrix product a * b (b applied first). Requires a.in_arity() == b.out_arity().
LinearMap operator*(const LinearMap& a, const LinearMap& b);

/// Kronecker product: a's factors become the leading (slowest) tensor factors.
LinearMap kronecker(const LinearMap& a, const LinearMap& b);

/// Rows separated by newlines, entries by tabs, each "p/q" or "p".
std::string format_tsv(const LinearMap& m);
/// {"in_arity":..,"out_arity":..,"rows":..,"cols":..,"entries":[["p/q",..],..]}
std::string format_json(const LinearMap& m);

}  // namespace tqft
