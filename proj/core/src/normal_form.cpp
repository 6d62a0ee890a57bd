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

#include "tqft/normal_form.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace tqft {

namespace {

class DisjointSets {
 public:
  int add() {
    parent_.push_back(static_cast<int>(parent_.size()));
    return parent_.back();
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
  std::size_t size() const { return parent_.size(); }

 private:
  std::vector<int> parent_;
};

struct Ports {
  std::vector<int> inputs;
  std::vector<int> outputs;
};

// Each generator becomes one or two surface pieces; compose glues pieces
// along the shared circles.
struct Wiring {
  DisjointSets sets;
  std::vector<int> chi;

  int piece(int euler) {
    chi.push_back(euler);
    return sets.add();
  }

  Ports walk(const CobTerm& f) {
    switch (f.kind()) {
      case CobTerm::Kind::generator:
        return leaf(f.generator());
      case CobTerm::Kind::tensor: {
        Ports a = walk(f.first());
        Ports b = walk(f.second());
        a.inputs.insert(a.inputs.end(), b.inputs.begin(), b.inputs.end());
        a.outputs.insert(a.outputs.end(), b.outputs.begin(), b.outputs.end());
        return a;
      }
      case CobTerm::Kind::compose: {
        Ports a = walk(f.first());
        Ports b = walk(f.second());
        for (std::size_t i = 0; i < a.outputs.size(); ++i) sets.unite(a.outputs[i], b.inputs[i]);
        return Ports{std::move(a.inputs), std::move(b.outputs)};
      }
    }
    return {};
  }

  Ports leaf(Generator g) {
    switch (g) {
      case Generator::unit: {
        const int p = piece(1);
        return {{}, {p}};
      }
      case Generator::counit: {
        const int p = piece(1);
        return {{p}, {}};
      }
      case Generator::mult: {
        const int p = piece(-1);
        return {{p, p}, {p}};
      }
      case Generator::comult: {
        const int p = piece(-1);
        return {{p}, {p, p}};
      }
      case Generator::identity: {
        const int p = piece(0);
        return {{p}, {p}};
      }
      case Generator::twist: {
        const int p = piece(0);
        const int q = piece(0);
        return {{p, q}, {q, p}};
      }
    }
    return {};
  }
};

CobTerm merge_tree(int inputs) {
  if (inputs == 0) return Generator::unit;
  CobTerm t(Generator::identity);
  if (inputs >= 2) t = Generator::mult;
  for (int k = 3; k <= inputs; ++k) t = compose(tensor(t, Generator::identity), Generator::mult);
  return t;
}

std::optional<CobTerm> split_tree(int outputs) {
  if (outputs == 0) return CobTerm(Generator::counit);
  if (outputs == 1) return std::nullopt;
  CobTerm t(Generator::comult);
  for (int k = 3; k <= outputs; ++k) {
    t = compose(t, tensor(identity_wires(k - 2), Generator::comult));
  }
  return t;
}

std::optional<CobTerm> tensor_all(std::optional<CobTerm> acc, const CobTerm& next) {
  return acc ? tensor(*acc, next) : next;
}

std::string join(const std::vector<int>& v) {
  if (v.empty()) return "-";
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

int euler_characteristic(Generator g) noexcept {
  switch (g) {
    case Generator::unit:
    case Generator::counit:
      return 1;
    case Generator::mult:
    case Generator::comult:
      return -1;
    case Generator::identity:
    case Generator::twist:
      return 0;
  }
  return 0;
}

std::vector<int> NormalForm::input_component() const {
  std::vector<int> owner(static_cast<std::size_t>(in_arity), -1);
  for (std::size_t c = 0; c < components.size(); ++c) {
    for (int i : components[c].inputs) owner[static_cast<std::size_t>(i)] = static_cast<int>(c);
  }
  return owner;
}

std::vector<int> NormalForm::output_component() const {
  std::vector<int> owner(static_cast<std::size_t>(out_arity), -1);
  for (std::size_t c = 0; c < components.size(); ++c) {
    for (int o : components[c].outputs) owner[static_cast<std::size_t>(o)] = static_cast<int>(c);
  }
  return owner;
}

NormalForm normalize(const CobTerm& f) {
  Wiring wiring;
  const Ports ports = wiring.walk(f);

  struct Acc {
    int chi = 0;
    SurfaceComponent component;
  };
  std::map<int, Acc> by_root;
  for (std::size_t p = 0; p < wiring.sets.size(); ++p) {
    by_root[wiring.sets.find(static_cast<int>(p))].chi += wiring.chi[p];
  }
  for (std::size_t i = 0; i < ports.inputs.size(); ++i) {
    by_root[wiring.sets.find(ports.inputs[i])].component.inputs.push_back(static_cast<int>(i));
  }
  for (std::size_t o = 0; o < ports.outputs.size(); ++o) {
    by_root[wiring.sets.find(ports.outputs[o])].component.outputs.push_back(static_cast<int>(o));
  }

  NormalForm nf;
  nf.in_arity = f.in();
  nf.out_arity = f.out();
  for (auto& [root, acc] : by_root) {
    const int boundary =
        static_cast<int>(acc.component.inputs.size() + acc.component.outputs.size());
    const int twice_genus = 2 - acc.chi - boundary;
    if (twice_genus < 0 || twice_genus % 2 != 0) {
      throw std::logic_error("inconsistent Euler characteristic in normalize");
    }
    acc.component.genus = twice_genus / 2;
    if (boundary == 0) {
      nf.closed_genera.push_back(acc.component.genus);
    } else {
      nf.components.push_back(std::move(acc.component));
    }
  }
  std::sort(nf.components.begin(), nf.components.end());
  std::sort(nf.closed_genera.begin(), nf.closed_genera.end());
  return nf;
}

bool equivalent(const CobTerm& f, const CobTerm& g) {
  return f.in() == g.in() && f.out() == g.out() && normalize(f) == normalize(g);
}

CobTerm connected_term(int inputs, int outputs, int genus) {
  CobTerm t = merge_tree(inputs);
  for (int i = 0; i < genus; ++i) t = compose(t, handle_term());
  if (auto split = split_tree(outputs)) t = compose(t, *split);
  return t;
}

CobTerm permutation_term(const std::vector<int>& target) {
  const int n = static_cast<int>(target.size());
  if (n < 1) throw std::invalid_argument("permutation_term needs at least one wire");
  std::vector<int> current = target;
  std::optional<CobTerm> result;
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (int pos = 0; pos + 1 < n; ++pos) {
      if (current[static_cast<std::size_t>(pos)] <= current[static_cast<std::size_t>(pos) + 1]) continue;
      std::optional<CobTerm> layer;
      if (pos > 0) layer = identity_wires(pos);
      layer = tensor_all(layer, Generator::twist);
      if (n - pos - 2 > 0) layer = tensor(*layer, identity_wires(n - pos - 2));
      result = result ? compose(*result, *layer) : *layer;
      std::swap(current[static_cast<std::size_t>(pos)], current[static_cast<std::size_t>(pos) + 1]);
      swapped = true;
    }
  }
  return result ? *result : identity_wires(n);
}

CobTerm rebuild_term(const NormalForm& nf) {
  std::optional<CobTerm> body;
  std::vector<int> input_position(static_cast<std::size_t>(nf.in_arity), -1);
  std::vector<int> output_target;
  int in_offset = 0;
  for (const SurfaceComponent& c : nf.components) {
    body = tensor_all(body, connected_term(static_cast<int>(c.inputs.size()),
                                           static_cast<int>(c.outputs.size()), c.genus));
    for (int i : c.inputs) input_position[static_cast<std::size_t>(i)] = in_offset++;
    output_target.insert(output_target.end(), c.outputs.begin(), c.outputs.end());
  }
  for (int genus : nf.closed_genera) body = tensor_all(body, closed_surface_term(genus));
  if (!body) throw std::invalid_argument("empty normal form has no term");

  CobTerm t = *body;
  if (nf.in_arity > 0) t = compose(permutation_term(input_position), t);
  if (nf.out_arity > 0) t = compose(t, permutation_term(output_target));
  return t;
}

std::string format_normal_form(const NormalForm& nf) {
  std::ostringstream out;
  out << "arity\t" << nf.in_arity << '\t' << nf.out_arity << '\n';
  for (const SurfaceComponent& c : nf.components) {
    out << "component\t" << c.inputs.size() << '\t' << c.outputs.size() << '\t' << c.genus << '\t'
        << join(c.inputs) << '\t' << join(c.outputs) << '\n';
  }
  for (int genus : nf.closed_genera) out << "closed\t" << genus << '\n';
  return out.str();
}

}  // namespace tqft
