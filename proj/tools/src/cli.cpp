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

#include "tqft/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "tqft/cob_term.hpp"
#include "tqft/errors.hpp"
#include "tqft/frobenius.hpp"
#include "tqft/manifold.hpp"
#include "tqft/normal_form.hpp"
#include "tqft/span.hpp"

namespace tqft::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { tsv, json };

struct Options {
  std::string format = "tsv";
  std::string expr;
  std::string algebra_file;
  std::string group;
  std::optional<int> genus;
  std::string lens;
  bool torus3 = false;
  std::string presentation_file;
  std::string backend = "count";
  int max_genus = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UserError("cannot read file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::uint64_t parse_u64(std::string_view text, const char* what) {
  std::uint64_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || text.empty()) {
    throw UserError(std::string("invalid ") + what + " '" + std::string(text) + "'");
  }
  return value;
}

int parse_int(std::string_view text, const char* what) {
  const std::uint64_t v = parse_u64(text, what);
  if (v > 1'000'000) throw UserError(std::string(what) + " out of range");
  return static_cast<int>(v);
}

std::uint64_t enumeration_cap() {
  const char* env = std::getenv("TQFT_ENUM_CAP");
  if (env == nullptr || *env == '\0') return kDefaultEnumerationCap;
  return parse_u64(env, "TQFT_ENUM_CAP");
}

QuantizeOptions quantize_options() {
  const char* env = std::getenv("TQFT_ENUM_CAP");
  QuantizeOptions options;
  if (env != nullptr && *env != '\0') options.cap = enumeration_cap();
  return options;
}

Json term_tree(const CobTerm& f) {
  Json node;
  switch (f.kind()) {
    case CobTerm::Kind::generator:
      node["generator"] = std::string(generator_name(f.generator()));
      break;
    case CobTerm::Kind::compose:
    case CobTerm::Kind::tensor:
      node["op"] = f.kind() == CobTerm::Kind::compose ? "compose" : "tensor";
      node["args"] = Json::array({term_tree(f.first()), term_tree(f.second())});
      break;
  }
  node["in"] = f.in();
  node["out"] = f.out();
  return node;
}

void print_matrix(const LinearMap& m, Format format, std::ostream& out) {
  out << (format == Format::json ? format_json(m) + "\n" : format_tsv(m));
}

int cmd_parse(const Options& o, Format format, std::ostream& out) {
  const CobTerm f = parse_cob(o.expr);
  if (format == Format::json) {
    Json doc;
    doc["expr"] = to_string(f);
    doc["in"] = f.in();
    doc["out"] = f.out();
    doc["tree"] = term_tree(f);
    out << doc.dump(2) << '\n';
  } else {
    out << "expr\t" << to_string(f) << '\n' << "arity\t" << f.in() << '\t' << f.out() << '\n';
  }
  return kOk;
}

int cmd_normalize(const Options& o, Format format, std::ostream& out) {
  const NormalForm nf = normalize(parse_cob(o.expr));
  if (format == Format::tsv) {
    out << format_normal_form(nf);
    return kOk;
  }
  Json doc;
  doc["in"] = nf.in_arity;
  doc["out"] = nf.out_arity;
  doc["components"] = Json::array();
  for (const auto& c : nf.components) {
    doc["components"].push_back({{"inputs", c.inputs}, {"outputs", c.outputs}, {"genus", c.genus}});
  }
  doc["closed"] = nf.closed_genera;
  out << doc.dump(2) << '\n';
  return kOk;
}

int cmd_validate(const Options& o, Format format, std::ostream& out) {
  const ValidationReport report = validate(parse_algebra(read_file(o.algebra_file)));
  if (format == Format::tsv) {
    out << format_report(report);
  } else {
    Json doc = Json::array();
    for (const auto& r : report.results) {
      doc.push_back({{"axiom", r.axiom}, {"passed", r.passed}, {"witness", r.witness}, {"detail", r.detail}});
    }
    out << doc.dump(2) << '\n';
  }
  return report.ok() ? kOk : kUserError;
}

int cmd_eval(const Options& o, Format format, std::ostream& out) {
  const CobTerm f = parse_cob(o.expr);
  const FrobeniusAlgebra a = o.algebra_file.empty() ? center_of_group_algebra(*group_by_name(o.group))
                                                    : parse_algebra(read_file(o.algebra_file));
  print_matrix(FrobeniusEvaluator(a).evaluate(f), format, out);
  return kOk;
}

int cmd_quantize(const Options& o, Format format, std::ostream& out) {
  const CobTerm f = parse_cob(o.expr);
  print_matrix(quantize(f, group_by_name(o.group), quantize_options()), format, out);
  return kOk;
}

Manifold manifold_from(const Options& o) {
  if (o.genus) return Manifold::surface(*o.genus);
  if (!o.lens.empty()) {
    const auto comma = o.lens.find(',');
    if (comma == std::string::npos) throw UserError("--lens expects P,Q");
    return Manifold::lens(parse_int(std::string_view(o.lens).substr(0, comma), "lens p"),
                              parse_int(std::string_view(o.lens).substr(comma + 1), "lens q"));
  }
  if (o.torus3) return Manifold::torus3();
  const std::string text = read_file(o.presentation_file);
  return Manifold::custom(parse_presentation(text, o.presentation_file));
}

int cmd_invariant(const Options& o, Format format, std::ostream& out) {
  const Manifold m = manifold_from(o);
  const GroupPtr g = group_by_name(o.group);
  const bool surface = std::holds_alternative<Surface>(m.kind);
  if (!surface && (o.backend == "frobenius" || o.backend == "span")) {
    throw UserError("backend '" + o.backend + "' only evaluates closed surfaces");
  }
  const std::uint64_t cap = enumeration_cap();

  std::vector<std::pair<std::string, Rational>> columns;
  if (o.backend == "count" || o.backend == "all") columns.emplace_back("count", invariant(m, *g, cap));
  if (surface) {
    const int genus = std::get<Surface>(m.kind).genus;
    if (o.backend == "frobenius" || o.backend == "all") {
      columns.emplace_back("frobenius", FrobeniusEvaluator(center_of_group_algebra(*g)).closed_invariant(genus));
    }
    if (o.backend == "span" || o.backend == "all") {
      columns.emplace_back("span", quantize(closed_surface_term(genus), g, quantize_options()).at(0, 0));
    }
  }

  if (format == Format::json) {
    Json doc;
    doc["manifold"] = m.name;
    doc["group"] = g->name();
    for (const auto& [name, value] : columns) doc[name] = format_rational(value);
    out << doc.dump(2) << '\n';
    return kOk;
  }
  out << "manifold\tgroup";
  for (const auto& column : columns) out << '\t' << column.first;
  out << '\n' << m.name << '\t' << g->name();
  for (const auto& column : columns) out << '\t' << format_rational(column.second);
  out << '\n';
  return kOk;
}

int cmd_oracle(const Options& o, Format format, std::ostream& out) {
  const GroupPtr g = group_by_name(o.group);
  const std::vector<OracleRow> rows = oracle_report(g, o.max_genus, enumeration_cap());
  if (format == Format::json) {
    Json doc = Json::array();
    for (const auto& r : rows) {
      doc.push_back({{"genus", r.genus},
                     {"count", format_rational(r.count)},
                     {"frobenius", format_rational(r.frobenius)},
                     {"span", format_rational(r.span)},
                     {"all_equal", r.all_equal()}});
    }
    out << doc.dump(2) << '\n';
    return kOk;
  }
  out << "genus\tcount\tfrobenius\tspan\tall_equal\n";
  for (const auto& r : rows) {
    out << r.genus << '\t' << format_rational(r.count) << '\t' << format_rational(r.frobenius) << '\t'
        << format_rational(r.span) << '\t' << (r.all_equal() ? "true" : "false") << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact evaluator for two-dimensional finite gauge TQFTs", "tqft"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"tsv", "json"}));
  app.fallthrough();

  auto* parse = app.add_subcommand("parse", "Parse a cobordism expression and echo it");
  parse->add_option("--expr", o.expr, "Cobordism expression")->required();

  auto* norm = app.add_subcommand("normalize", "Print the topological normal form");
  norm->add_option("--expr", o.expr, "Cobordism expression")->required();

  auto* val = app.add_subcommand("validate", "Check the Frobenius algebra axioms");
  val->add_option("--algebra", o.algebra_file, "Algebra JSON file")->required();

  auto* eval = app.add_subcommand("eval", "Evaluate through a Frobenius algebra");
  eval->add_option("--expr", o.expr, "Cobordism expression")->required();
  auto* eval_alg = eval->add_option("--algebra", o.algebra_file, "Algebra JSON file");
  auto* eval_grp = eval->add_option("--group", o.group, "Use the center of Q[G]");
  eval_alg->excludes(eval_grp);
  eval_grp->excludes(eval_alg);

  auto* quant = app.add_subcommand("quantize", "Evaluate through spans of groupoids");
  quant->add_option("--expr", o.expr, "Cobordism expression")->required();
  quant->add_option("--group", o.group, "Gauge group")->required();

  auto* inv = app.add_subcommand("invariant", "Invariant of a closed manifold");
  auto* inv_genus = inv->add_option("--genus", o.genus, "Closed surface of this genus")->check(CLI::NonNegativeNumber);
  auto* inv_lens = inv->add_option("--lens", o.lens, "Lens space L(P,Q)");
  auto* inv_t3 = inv->add_flag("--torus3", o.torus3, "The 3-torus");
  auto* inv_pres = inv->add_option("--presentation", o.presentation_file, "Presentation file for pi_1");
  inv->add_option("--group", o.group, "Gauge group")->required();
  inv->add_option("--backend", o.backend, "count|frobenius|span|all")
      ->check(CLI::IsMember({"count", "frobenius", "span", "all"}));
  const std::vector<CLI::Option*> manifold_opts{inv_genus, inv_lens, inv_t3, inv_pres};
  for (auto* a : manifold_opts) {
    for (auto* b : manifold_opts) {
      if (a != b) a->excludes(b);
    }
  }

  auto* orc = app.add_subcommand("oracle", "Compare all backends on closed surfaces");
  orc->add_option("--group", o.group, "Gauge group")->required();
  orc->add_option("--max-genus", o.max_genus, "Largest genus")->required()->check(CLI::NonNegativeNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUserError;
  }

  try {
    const Format format = o.format == "json" ? Format::json : Format::tsv;
    if (*parse) return cmd_parse(o, format, out);
    if (*norm) return cmd_normalize(o, format, out);
    if (*val) return cmd_validate(o, format, out);
    if (*eval) {
      if (o.algebra_file.empty() && o.group.empty()) throw UserError("eval needs --algebra or --group");
      return cmd_eval(o, format, out);
    }
    if (*quant) return cmd_quantize(o, format, out);
    if (*inv) {
      if (!o.genus && o.lens.empty() && !o.torus3 && o.presentation_file.empty()) {
        throw UserError("invariant needs one of --genus, --lens, --torus3, --presentation");
      }
      return cmd_invariant(o, format, out);
    }
    if (*orc) return cmd_oracle(o, format, out);
  } catch (const UserError& e) {
    err << "error: " << e.what() << '\n';
    return kUserError;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kUserError;
  }
  return kUserError;
}

}  // namespace tqft::cli
