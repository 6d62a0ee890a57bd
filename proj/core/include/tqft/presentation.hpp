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
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "tqft/finite_group.hpp"

namespace tqft {

/// A relator word. Letter +k means generator k-1, letter -k its inverse, so
/// generator indices are 1-based inside words.
using Word = std::vector<int>;

/// Finitely presented group <g_0..g_{n-1} | relators>.
struct GroupPresentation {
  int num_generators = 0;
  std::vector<Word> relators;
  std::string name;

  /// Throws UserError if a letter is zero or out of range.
  void validate() const;

  friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 100'000'000;

/// Number of homomorphisms from the presented group into `g`, by brute force
/// over all order^num_generators assignments. Throws ResourceLimitError when
/// that count exceeds `cap`. Large enumerations are split across threads; the
/// total does not depend on the split.
std::uint64_t hom_count(const GroupPresentation& p, const FiniteGroup& g,
                        std::uint64_t cap = kDefaultEnumerationCap);

/// Evaluates a word under an assignment of generators to group elements.
Element evaluate_word(const Word& w, std::span<const Element> assignment, const FiniteGroup& g);

/// pi_1 of the closed orientable surface of the given genus:
/// <a1,b1,...,ag,bg | [a1,b1]...[ag,bg]>; genus 0 is the trivial presentation.
GroupPresentation surface_presentation(int genus);

/// <x | x^p>
GroupPresentation cyclic_presentation(int p);

/// Z^3 = <a,b,c | [a,b], [a,c], [b,c]>
GroupPresentation torus3_presentation();

/// Cyclic rotation of a relator; the presented group is unchanged.
Word rotate_word(const Word& w, std::size_t shift);

/// Text format: the first non-blank line holds the number of generators; each
/// further line is one relator, such as `a b a^-1 b^-1`. Generators are the
/// letters a, b, c, ...; `x^k` repeats a letter k times (negative k inverts).
/// `#` starts a comment. Throws ParseError / UserError.
GroupPresentation parse_presentation(std::string_view text, std::string name = "custom");

std::string format_presentation(const GroupPresentation& p);

}  // namespace tqft
