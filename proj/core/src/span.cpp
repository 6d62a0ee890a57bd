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

#include "tqft/span.hpp"

#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "tqft/errors.hpp"

namespace tqft {

namespace {

std::vector<std::uint64_t> identity_map(std::size_t n) {
  std::vector<std::uint64_t> m(n);
  std::iota(m.begin(), m.end(), std::uint64_t{0});
  return m;
}

ActionGroupoid full_apex(const GroupPtr& g, int rank, std::vector<CoordinateAction> rules,
                         std::string label) {
  const int width = static_cast<int>(rules.size());
  return ActionGroupoid(g, rank, std::move(rules), Carrier::full(g->order(), width), std::move(label));
}

// Class index of a boundary-groupoid element: conjugacy classes of the
// holonomies read as digits, leftmost slowest.
class BoundaryClasses {
 public:
  explicit BoundaryClasses(const FiniteGroup& g) : group_(g), classes_(conjugacy_classes(g)) {}

  std::size_t dim() const noexcept { return classes_.count(); }

  std::size_t class_of(std::uint64_t index, int circles) const {
    std::size_t cls = 0;
    std::size_t weight = 1;
    for (int p = 0; p < circles; ++p) {
      const auto holonomy = static_cast<std::size_t>(index % static_cast<std::uint64_t>(group_.order()));
      index /= static_cast<std::uint64_t>(group_.order());
      cls += weight * static_cast<std::size_t>(classes_.class_of[holonomy]);
      weight *= classes_.count();
    }
    return cls;
  }

  BigInt aut_order(std::size_t cls, int circles) const {
    BigInt aut = 1;
    for (int p = 0; p < circles; ++p) {
      aut *= group_.order() / classes_.sizes[cls % classes_.count()];
      cls /= classes_.count();
    }
    return aut;
  }

 private:
  const FiniteGroup& group_;
  ConjugacyClasses classes_;
};

class ForestBuilder {
 public:
  explicit ForestBuilder(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

bool is_equivariant(const ActionGroupoid& source, const GroupoidMap& leg) {
  if (leg.carrier_map.size() != source.size()) return false;
  if (static_cast<int>(leg.hom.size()) != leg.target.rank()) return false;
  std::vector<std::uint8_t> x(static_cast<std::size_t>(source.width()));
  std::vector<std::uint8_t> fx(static_cast<std::size_t>(leg.target.width()));
  for (std::size_t i = 0; i < source.size(); ++i) {
    if (leg.carrier_map[i] >= leg.target.size()) return false;
    for (int r = 0; r < source.rank(); ++r) {
      for (Element s : source.base().generators()) {
        source.carrier().element(i, x);
        source.act_generator(r, s, x);
        const auto moved = source.carrier().index_of(x);
        if (!moved) return false;
        leg.target.carrier().element(leg.carrier_map[i], fx);
        for (std::size_t t = 0; t < leg.hom.size(); ++t) {
          if (leg.hom[t] == r) leg.target.act_generator(static_cast<int>(t), s, fx);
        }
        const auto image = leg.target.carrier().index_of(fx);
        if (!image || *image != leg.carrier_map[*moved]) return false;
      }
    }
  }
  return true;
}

GroupoidSpan generator_span(Generator gen, GroupPtr g) {
  const auto order = static_cast<std::uint64_t>(g->order());
  switch (gen) {
    case Generator::unit: {
      ActionGroupoid apex = full_apex(g, 1, {}, "disk");
      GroupoidMap left{boundary_groupoid(g, 0), {}, {0}};
      GroupoidMap right{boundary_groupoid(g, 1), {0}, {static_cast<std::uint64_t>(g->identity())}};
      return {std::move(apex), std::move(left), std::move(right)};
    }
    case Generator::counit:
      return reverse_span(generator_span(Generator::unit, std::move(g)));
    case Generator::mult: {
      ActionGroupoid apex = full_apex(g, 1, {{0, 0}, {0, 0}}, "pants");
      GroupoidMap left{boundary_groupoid(g, 2), {0, 0}, identity_map(apex.size())};
      std::vector<std::uint64_t> product_map(apex.size());
      for (std::uint64_t a = 0; a < order; ++a) {
        for (std::uint64_t b = 0; b < order; ++b) {
          product_map[a * order + b] =
              static_cast<std::uint64_t>(g->mul(static_cast<Element>(a), static_cast<Element>(b)));
        }
      }
      GroupoidMap right{boundary_groupoid(g, 1), {0}, std::move(product_map)};
      return {std::move(apex), std::move(left), std::move(right)};
    }
    case Generator::comult:
      return reverse_span(generator_span(Generator::mult, std::move(g)));
    case Generator::identity: {
      ActionGroupoid apex = full_apex(g, 1, {{0, 0}}, "cylinder");
      GroupoidMap left{boundary_groupoid(g, 1), {0}, identity_map(apex.size())};
      GroupoidMap right{boundary_groupoid(g, 1), {0}, identity_map(apex.size())};
      return {std::move(apex), std::move(left), std::move(right)};
    }
    case Generator::twist: {
      ActionGroupoid apex = full_apex(g, 2, {{0, 0}, {1, 1}}, "two cylinders");
      GroupoidMap left{boundary_groupoid(g, 2), {0, 1}, identity_map(apex.size())};
      std::vector<std::uint64_t> swapped(apex.size());
      for (std::uint64_t a = 0; a < order; ++a) {
        for (std::uint64_t b = 0; b < order; ++b) swapped[a * order + b] = b * order + a;
      }
      GroupoidMap right{boundary_groupoid(g, 2), {1, 0}, std::move(swapped)};
      return {std::move(apex), std::move(left), std::move(right)};
    }
  }
  throw std::invalid_argument("unknown generator");
}

GroupoidSpan reverse_span(GroupoidSpan s) {
  std::swap(s.left, s.right);
  return s;
}

GroupoidSpan tensor_spans(const GroupoidSpan& a, const GroupoidSpan& b, std::uint64_t cap) {
  ActionGroupoid apex = product(a.apex, b.apex, cap);
  auto leg = [&](const GroupoidMap& la, const GroupoidMap& lb) {
    ActionGroupoid target = product(la.target, lb.target, std::numeric_limits<std::uint64_t>::max());
    std::vector<int> hom = la.hom;
    for (int h : lb.hom) hom.push_back(h + a.apex.rank());
    std::vector<std::uint64_t> map;
    map.reserve(apex.size());
    const auto stride = static_cast<std::uint64_t>(lb.target.size());
    for (std::uint64_t fa : la.carrier_map) {
      for (std::uint64_t fb : lb.carrier_map) map.push_back(fa * stride + fb);
    }
    return GroupoidMap{std::move(target), std::move(hom), std::move(map)};
  };
  GroupoidMap left = leg(a.left, b.left);
  GroupoidMap right = leg(a.right, b.right);
  return {std::move(apex), std::move(left), std::move(right)};
}

GroupoidSpan compose_spans(const GroupoidSpan& first, const GroupoidSpan& second, GaugeFixing gauge,
                           std::uint64_t cap) {
  const ActionGroupoid& foot = first.right.target;
  if (!(foot == second.left.target)) {
    throw UserError("cannot compose spans: target foot '" + foot.label() +
                    "' differs from source foot '" + second.left.target.label() + "'");
  }
  const ActionGroupoid& x_apex = first.apex;
  const ActionGroupoid& y_apex = second.apex;
  const FiniteGroup& g = foot.base();
  const int r1 = x_apex.rank();
  const int r2 = y_apex.rank();
  const int k_rank = foot.rank();

  // Gluing graph: one vertex per apex group coordinate, one edge per foot
  // group coordinate j joining the two coordinates that act on it.
  ForestBuilder forest(r1 + r2);
  std::vector<char> fixed(static_cast<std::size_t>(k_rank), 0);
  for (int j = 0; j < k_rank; ++j) {
    const int u = first.right.hom[static_cast<std::size_t>(j)];
    const int v = r1 + second.left.hom[static_cast<std::size_t>(j)];
    if (gauge == GaugeFixing::spanning_tree && forest.unite(u, v)) fixed[static_cast<std::size_t>(j)] = 1;
  }
  std::vector<int> coord(static_cast<std::size_t>(r1 + r2), -1);
  std::vector<int> new_index_of_root(static_cast<std::size_t>(r1 + r2), -1);
  int new_rank = 0;
  for (int v = 0; v < r1 + r2; ++v) {
    const int root = forest.find(v);
    auto& slot = new_index_of_root[static_cast<std::size_t>(root)];
    if (slot < 0) slot = new_rank++;
    coord[static_cast<std::size_t>(v)] = slot;
  }
  std::vector<int> free_edges;
  for (int j = 0; j < k_rank; ++j) {
    if (!fixed[static_cast<std::size_t>(j)]) free_edges.push_back(j);
  }

  auto remap = [&](CoordinateAction r, int offset) {
    if (r.left >= 0) r.left = coord[static_cast<std::size_t>(r.left + offset)];
    if (r.right >= 0) r.right = coord[static_cast<std::size_t>(r.right + offset)];
    return r;
  };
  std::vector<CoordinateAction> rules;
  for (const auto& r : x_apex.rules()) rules.push_back(remap(r, 0));
  for (int j : free_edges) {
    rules.push_back({coord[static_cast<std::size_t>(r1 + second.left.hom[static_cast<std::size_t>(j)])],
                     coord[static_cast<std::size_t>(first.right.hom[static_cast<std::size_t>(j)])]});
  }
  for (const auto& r : y_apex.rules()) rules.push_back(remap(r, r1));

  // Enumeration size: every x against every assignment of free connecting morphisms.
  std::uint64_t trials = x_apex.size();
  for (std::size_t e = 0; e < free_edges.size(); ++e) {
    if (trials > cap) break;
    trials *= static_cast<std::uint64_t>(g.order());
  }
  if (trials > cap) throw ResourceLimitError("weak pullback enumeration", trials, cap);

  std::unordered_map<std::uint64_t, std::vector<std::size_t>> fiber;
  for (std::size_t y = 0; y < y_apex.size(); ++y) fiber[second.left.carrier_map[y]].push_back(y);

  const int wx = x_apex.width();
  const int wy = y_apex.width();
  const auto wk = free_edges.size();
  const std::size_t width = static_cast<std::size_t>(wx) + wk + static_cast<std::size_t>(wy);

  std::vector<std::uint8_t> data;
  std::vector<std::uint64_t> left_map;
  std::vector<std::uint64_t> right_map;
  std::vector<Element> k(static_cast<std::size_t>(k_rank), g.identity());
  std::vector<std::uint8_t> x_tuple(static_cast<std::size_t>(wx));
  std::vector<std::uint8_t> y_tuple(static_cast<std::size_t>(wy));
  std::vector<std::uint8_t> foot_in(static_cast<std::size_t>(foot.width()));
  std::vector<std::uint8_t> foot_out(static_cast<std::size_t>(foot.width()));
  // Walks every triple (x, k, y); the first pass only counts, so the cap
  // fires before anything is materialized.
  auto enumerate = [&](auto&& emit) {
    for (std::size_t x = 0; x < x_apex.size(); ++x) {
      foot.carrier().element(first.right.carrier_map[x], foot_in);
      std::vector<Element> free_values(wk, 0);
      while (true) {
        for (std::size_t e = 0; e < wk; ++e) k[static_cast<std::size_t>(free_edges[e])] = free_values[e];
        foot.act(k, foot_in, foot_out);
        if (const auto z = foot.carrier().index_of(foot_out)) {
          if (const auto it = fiber.find(*z); it != fiber.end()) emit(x, free_values, it->second);
        }
        std::size_t pos = wk;
        while (pos > 0) {
          if (++free_values[pos - 1] < g.order()) break;
          free_values[pos - 1] = 0;
          --pos;
        }
        if (pos == 0) break;
      }
    }
  };

  std::uint64_t count = 0;
  enumerate([&](std::size_t, const std::vector<Element>&, const std::vector<std::size_t>& ys) {
    count += ys.size();
  });
  if (count > cap) throw ResourceLimitError("weak pullback apex", count, cap);

  data.reserve(static_cast<std::size_t>(count) * width);
  left_map.reserve(static_cast<std::size_t>(count));
  right_map.reserve(static_cast<std::size_t>(count));
  enumerate([&](std::size_t x, const std::vector<Element>& free_values, const std::vector<std::size_t>& ys) {
    x_apex.carrier().element(x, x_tuple);
    for (std::size_t y : ys) {
      y_apex.carrier().element(y, y_tuple);
      data.insert(data.end(), x_tuple.begin(), x_tuple.end());
      for (Element v : free_values) data.push_back(static_cast<std::uint8_t>(v));
      data.insert(data.end(), y_tuple.begin(), y_tuple.end());
      left_map.push_back(first.left.carrier_map[x]);
      right_map.push_back(second.right.carrier_map[y]);
    }
  });

  auto carrier = Carrier::listed(g.order(), static_cast<int>(width), static_cast<std::size_t>(count), std::move(data));
  ActionGroupoid apex(foot.base_ptr(), new_rank, std::move(rules), std::move(carrier),
                      "(" + x_apex.label() + " ; " + y_apex.label() + ")");
  auto remap_hom = [&](const std::vector<int>& hom, int offset) {
    std::vector<int> out;
    out.reserve(hom.size());
    for (int h : hom) out.push_back(coord[static_cast<std::size_t>(h + offset)]);
    return out;
  };
  GroupoidMap left{first.left.target, remap_hom(first.left.hom, 0), std::move(left_map)};
  GroupoidMap right{second.right.target, remap_hom(second.right.hom, r1), std::move(right_map)};
  return {std::move(apex), std::move(left), std::move(right)};
}

LinearMap degroupoidify(const GroupoidSpan& s, const ActionKernel& kernel) {
  if (!s.source().is_boundary() || !s.target().is_boundary()) {
    throw std::invalid_argument("degroupoidify needs boundary groupoids as feet");
  }
  const BoundaryClasses classes(s.apex.base());
  const int in_circles = s.source().width();
  const int out_circles = s.target().width();
  LinearMap m(classes.dim(), in_circles, out_circles);

  const IsoClassSpace apex_classes = iso_classes(s.apex);
  for (std::size_t c = 0; c < apex_classes.count(); ++c) {
    const std::size_t rep = apex_classes.representatives[c];
    const std::size_t in_class = classes.class_of(s.left.carrier_map[rep], in_circles);
    const std::size_t out_class = classes.class_of(s.right.carrier_map[rep], out_circles);
    Rational weight(classes.aut_order(out_class, out_circles), apex_classes.aut_orders[c]);
    weight.canonicalize();
    if (kernel) weight *= kernel(s.apex, rep);
    m.at(out_class, in_class) += weight;
  }
  return m;
}

GroupoidSpan term_span(const CobTerm& f, const GroupPtr& g, const QuantizeOptions& options) {
  switch (f.kind()) {
    case CobTerm::Kind::generator:
      return generator_span(f.generator(), g);
    case CobTerm::Kind::tensor:
      return tensor_spans(term_span(f.first(), g, options), term_span(f.second(), g, options),
                          options.cap);
    case CobTerm::Kind::compose:
      return compose_spans(term_span(f.first(), g, options), term_span(f.second(), g, options),
                           options.gauge, options.cap);
  }
  throw std::invalid_argument("unknown term kind");
}

LinearMap quantize(const CobTerm& f, const GroupPtr& g, const QuantizeOptions& options) {
  return degroupoidify(term_span(f, g, options));
}

LinearMap quantize_stepwise(const CobTerm& f, const GroupPtr& g) {
  std::vector<LinearMap> generators;
  for (Generator gen : kAllGenerators) generators.push_back(degroupoidify(generator_span(gen, g)));
  std::function<LinearMap(const CobTerm&)> walk = [&](const CobTerm& t) -> LinearMap {
    switch (t.kind()) {
      case CobTerm::Kind::generator:
        return generators[static_cast<std::size_t>(t.generator())];
      case CobTerm::Kind::compose:
        return walk(t.second()) * walk(t.first());
      case CobTerm::Kind::tensor:
        return kronecker(walk(t.first()), walk(t.second()));
    }
    throw std::invalid_argument("unknown term kind");
  };
  return walk(f);
}

}  // namespace tqft
