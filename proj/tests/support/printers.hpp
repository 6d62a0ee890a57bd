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

#include <ostream>

#include "tqft/cob_term.hpp"
#include "tqft/linear_map.hpp"

// gtest value printers, found by argument-dependent lookup.
namespace tqft {

inline void PrintTo(const LinearMap& m, std::ostream* os) {
  *os << m.rows() << "x" << m.cols() << "\n" << format_tsv(m);
}

inline void PrintTo(const CobTerm& t, std::ostream* os) { *os << to_string(t); }

}  // namespace tqft
