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

#include "tqft/cob_term.hpp"

#include <cctype>

#include "tqft/errors.hpp"

namespace tqft {

std::string_view generator_name(Generator g) noexcept {
  switch (g) {
    case Generator::unit:
      return "unit";
    case Generator::counit:
      return "counit";
    case Generator::mult:
      return "mult";
    case Generator::comult:
      return "comult";
    case Generator::identity:
      return "id";
    case Generator::twist:
      return "twist";
  }
  return "?";
}

int generator_inputs(Generator g) noexcept {
  switch (g) {
    case Generator::unit:
      return 0;
    case Generator::counit:
    case Generator::comult:
    case Generator::identity:
      return 1;
    case Generator::mult:
    case Generator::twist:
      return 2;
  }
  return 0;
}

int generator_outputs(Generator g) noexcept {
  switch (g) {
    case Generator::counit:
      return 0;
    case Generator::unit:
    case Generator::mult:
    case Generator::identity:
      return 1;
    case Generator::comult:
    case Generator::twist:
      return 2;
  }
  return 0;
}

CobTerm::CobTerm(Generator g) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::generator;
  node->gen = g;
  node->in = generator_inputs(g);
  node->out = generator_outputs(g);
  node_ = std::move(node);
}

namespace {

std::shared_ptr<const CobTerm> share(const CobTerm& t) { return std::make_shared<const CobTerm>(t); }

}  // namespace

CobTerm compose(const CobTerm& f, const CobTerm& g) {
  if (f.out() != g.in()) {
    throw ArityError("cannot compose " + std::to_string(f.in()) + "->" + std::to_string(f.out()) +
                     " with " + std::to_string(g.in()) + "->" + std::to_string(g.out()));
  }
  auto node = std::make_shared<CobTerm::Node>();
  node->kind = CobTerm::Kind::compose;
  node->in = f.in();
  node->out = g.out();
  node->leaves = f.leaf_count() + g.leaf_count();
  node->depth = 1 + std::max(f.depth(), g.depth());
  node->first = share(f);
  node->second = share(g);
  return CobTerm(std::move(node));
}

CobTerm tensor(const CobTerm& f, const CobTerm& g) {
  auto node = std::make_shared<CobTerm::Node>();
  node->kind = CobTerm::Kind::tensor;
  node->in = f.in() + g.in();
  node->out = f.out() + g.out();
  node->leaves = f.leaf_count() + g.leaf_count();
  node->depth = 1 + std::max(f.depth(), g.depth());
  node->first = share(f);
  node->second = share(g);
  return CobTerm(std::move(node));
}

bool operator==(const CobTerm& a, const CobTerm& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.in() != b.in() || a.out() != b.out()) return false;
  if (a.kind() == CobTerm::Kind::generator) return a.generator() == b.generator();
  return a.first() == b.first() && a.second() == b.second();
}

CobTerm identity_wires(int n) {
  if (n < 1) throw ArityError("identity_wires needs at least one wire");
  CobTerm t(Generator::identity);
  for (int i = 1; i < n; ++i) t = tensor(t, CobTerm(Generator::identity));
  return t;
}

CobTerm transpose(const CobTerm& f) {
  switch (f.kind()) {
    case CobTerm::Kind::generator:
      switch (f.generator()) {
        case Generator::unit:
          return Generator::counit;
        case Generator::counit:
          return Generator::unit;
        case Generator::mult:
          return Generator::comult;
        case Generator::comult:
          return Generator::mult;
        case Generator::identity:
        case Generator::twist:
          return f;
      }
      return f;
    case CobTerm::Kind::compose:
      return compose(transpose(f.second()), transpose(f.first()));
    case CobTerm::Kind::tensor:
      return tensor(transpose(f.first()), transpose(f.second()));
  }
  return f;
}

CobTerm handle_term() { return compose(Generator::comult, Generator::mult); }

CobTerm closed_surface_term(int genus) {
  if (genus < 0) throw ArityError("genus must be non-negative");
  CobTerm t(Generator::unit);
  for (int i = 0; i < genus; ++i) t = compose(t, handle_term());
  return compose(t, Generator::counit);
}

CobTerm cut_surface_term(int genus) {
  if (genus < 1) throw ArityError("only surfaces of genus >= 1 can be cut along a circle");
  CobTerm t(Generator::identity);
  for (int i = 1; i < genus; ++i) t = i == 1 ? handle_term() : compose(t, handle_term());
  return t;
}

std::string to_string(const CobTerm& f) {
  switch (f.kind()) {
    case CobTerm::Kind::generator:
      return std::string(generator_name(f.generator()));
    case CobTerm::Kind::compose:
      return "(" + to_string(f.first()) + " ; " + to_string(f.second()) + ")";
    case CobTerm::Kind::tensor:
      return "(" + to_string(f.first()) + " * " + to_string(f.second()) + ")";
  }
  return {};
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  CobTerm parse() {
    CobTerm t = sequence();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
    return t;
  }

 private:
  CobTerm sequence() {
    CobTerm t = product();
    while (accept(';')) {
      const std::size_t at = pos_;
      CobTerm rhs = product();
      try {
        t = compose(t, rhs);
      } catch (const ArityError& e) {
        throw ArityError(std::string(e.what()) + " at offset " + std::to_string(at));
      }
    }
    return t;
  }

  CobTerm product() {
    CobTerm t = atom();
    while (accept('*')) t = tensor(t, atom());
    return t;
  }

  CobTerm atom() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("expected a generator or '('", pos_);
    if (text_[pos_] == '(') {
      ++pos_;
      CobTerm t = sequence();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return t;
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string_view word = text_.substr(start, pos_ - start);
    if (word.empty()) throw ParseError("expected a generator or '('", start);
    for (Generator g : kAllGenerators) {
      if (word == generator_name(g)) return g;
    }
    throw ParseError("unknown generator '" + std::string(word) + "'", start);
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

CobTerm parse_cob(std::string_view text) { return Parser(text).parse(); }

}  // namespace tqft
