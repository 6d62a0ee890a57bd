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

#include "tqft/presentation.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <future>
#include <limits>
#include <sstream>
#include <thread>

#include "tqft/errors.hpp"

namespace tqft {

namespace {

// Smallest total above which hom_count spreads work over threads.
constexpr std::uint64_t kParallelThreshold = 1u << 16;

// base^exponent, saturating at the largest uint64.
std::uint64_t saturating_power(std::uint64_t base, int exponent) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 1;
  for (int i = 0; i < exponent; ++i) {
    if (base != 0 && total > kMax / base) return kMax;
    total *= base;
  }
  return total;
}

bool all_relators_trivial(const GroupPresentation& p, std::span<const Element> assignment,
                          const FiniteGroup& g) {
  for (const Word& w : p.relators) {
    if (evaluate_word(w, assignment, g) != g.identity()) return false;
  }
  return true;
}

// Counts assignments whose first generator is fixed to `first`.
std::uint64_t count_with_first(const GroupPresentation& p, const FiniteGroup& g, Element first) {
  const int n = p.num_generators;
  std::vector<Element> assignment(static_cast<std::size_t>(n), 0);
  assignment[0] = first;
  std::uint64_t count = 0;
  while (true) {
    if (all_relators_trivial(p, assignment, g)) ++count;
    int pos = n - 1;
    while (pos >= 1) {
      if (++assignment[static_cast<std::size_t>(pos)] < g.order()) break;
      assignment[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 1) break;
  }
  return count;
}

}  // namespace

void GroupPresentation::validate() const {
  if (num_generators < 0) throw UserError("negative generator count");
  for (const Word& w : relators) {
    for (int letter : w) {
      if (letter == 0 || std::abs(letter) > num_generators) {
        throw UserError("relator letter " + std::to_string(letter) + " out of range for " +
                        std::to_string(num_generators) + " generators");
      }
    }
  }
}

Element evaluate_word(const Word& w, std::span<const Element> assignment, const FiniteGroup& g) {
  Element value = g.identity();
  for (int letter : w) {
    const Element x = assignment[static_cast<std::size_t>(std::abs(letter) - 1)];
    value = g.mul(value, letter > 0 ? x : g.inv(x));
  }
  return value;
}

std::uint64_t hom_count(const GroupPresentation& p, const FiniteGroup& g, std::uint64_t cap) {
  p.validate();
  const std::uint64_t total = saturating_power(static_cast<std::uint64_t>(g.order()), p.num_generators);
  if (total > cap) {
    throw ResourceLimitError("hom_count enumeration of " + g.name() + "^" +
                                 std::to_string(p.num_generators),
                             total, cap);
  }
  if (p.num_generators == 0) return all_relators_trivial(p, {}, g) ? 1 : 0;

  const auto first_values = static_cast<std::size_t>(g.order());
  const std::size_t workers =
      total < kParallelThreshold
          ? 1
          : std::min<std::size_t>(first_values, std::max(1u, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    std::uint64_t count = 0;
    for (Element x = 0; x < g.order(); ++x) count += count_with_first(p, g, x);
    return count;
  }
  std::vector<std::future<std::uint64_t>> parts;
  parts.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    parts.push_back(std::async(std::launch::async, [&, w] {
      std::uint64_t count = 0;
      for (std::size_t x = w; x < first_values; x += workers) {
        count += count_with_first(p, g, static_cast<Element>(x));
      }
      return count;
    }));
  }
  std::uint64_t count = 0;
  for (auto& part : parts) count += part.get();
  return count;
}

GroupPresentation surface_presentation(int genus) {
  if (genus < 0) throw UserError("genus must be non-negative");
  GroupPresentation p;
  p.name = "surface(" + std::to_string(genus) + ")";
  p.num_generators = 2 * genus;
  if (genus == 0) return p;
  Word relator;
  for (int i = 0; i < genus; ++i) {
    const int a = 2 * i + 1;
    const int b = 2 * i + 2;
    relator.insert(relator.end(), {a, b, -a, -b});
  }
  p.relators.push_back(std::move(relator));
  return p;
}

GroupPresentation cyclic_presentation(int p) {
  if (p < 1) throw UserError("cyclic presentation needs p >= 1");
  GroupPresentation pres;
  pres.name = "Z/" + std::to_string(p);
  pres.num_generators = 1;
  pres.relators.push_back(Word(static_cast<std::size_t>(p), 1));
  return pres;
}

GroupPresentation torus3_presentation() {
  GroupPresentation p;
  p.name = "torus3";
  p.num_generators = 3;
  p.relators = {{1, 2, -1, -2}, {1, 3, -1, -3}, {2, 3, -2, -3}};
  return p;
}

Word rotate_word(const Word& w, std::size_t shift) {
  Word rotated = w;
  if (!w.empty()) {
    std::rotate(rotated.begin(), rotated.begin() + static_cast<std::ptrdiff_t>(shift % w.size()),
                rotated.end());
  }
  return rotated;
}

GroupPresentation parse_presentation(std::string_view text, std::string name) {
  GroupPresentation p;
  p.name = std::move(name);
  bool have_count = false;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::istringstream tokens{std::string(line)};
    std::string token;
    std::vector<std::string> parts;
    while (tokens >> token) parts.push_back(token);

    if (!parts.empty()) {
      if (!have_count) {
        if (parts.size() != 1) throw ParseError("expected generator count", line_start);
        int n = 0;
        const auto& s = parts.front();
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
        if (ec != std::errc{} || ptr != s.data() + s.size() || n < 0 || n > 26) {
          throw ParseError("invalid generator count '" + s + "'", line_start);
        }
        p.num_generators = n;
        have_count = true;
      } else {
        Word relator;
        for (const auto& part : parts) {
          if (part.empty() || part[0] < 'a' || part[0] > 'z') {
            throw ParseError("bad relator token '" + part + "'", line_start);
          }
          const int letter = part[0] - 'a' + 1;
          int power = 1;
          if (part.size() > 1) {
            if (part[1] != '^') throw ParseError("bad relator token '" + part + "'", line_start);
            const char* first = part.data() + 2;
            const char* last = part.data() + part.size();
            auto [ptr, ec] = std::from_chars(first, last, power);
            if (ec != std::errc{} || ptr != last) {
              throw ParseError("bad exponent in '" + part + "'", line_start);
            }
          }
          const int signed_letter = power < 0 ? -letter : letter;
          for (int k = 0; k < std::abs(power); ++k) relator.push_back(signed_letter);
        }
        p.relators.push_back(std::move(relator));
      }
    }
    line_start = line_end + 1;
  }
  if (!have_count) throw ParseError("empty presentation", 0);
  p.validate();
  return p;
}

std::string format_presentation(const GroupPresentation& p) {
  std::ostringstream out;
  out << p.num_generators << '\n';
  for (const Word& w : p.relators) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i > 0) out << ' ';
      out << static_cast<char>('a' + std::abs(w[i]) - 1);
      if (w[i] < 0) out << "^-1";
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace tqft
