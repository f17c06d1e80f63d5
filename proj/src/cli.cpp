#include "antitop/cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>

#include "CLI11.hpp"
#include "antitop/core.hpp"
#include "antitop/error.hpp"
#include "antitop/io.hpp"
#include "antitop/maps.hpp"
#include "antitop/modal.hpp"
#include "antitop/operators.hpp"
#include "antitop/props.hpp"
#include "antitop/search.hpp"

namespace antitop::cli {

namespace {

using io::Json;

struct Options {
  std::string format = "json";
  std::string space;
  std::string set;
  std::string map;
  std::string domain_space;
  std::string codomain_space;
  std::string kind = "anti";
  std::string formula;
  std::vector<std::string> valuations;
  std::string predicate;
  std::size_t n = 0;
  std::size_t max_n = 0;
  bool include_degenerate = false;
  bool exclude_degenerate = false;
};

class Context {
 public:
  Context(const Options& options, std::ostream& out, std::ostream& err)
      : options_(options), out_(out), err_(err) {}

  bool json() const { return options_.format == "json"; }
  const Options& options() const { return options_; }
  std::ostream& out() { return out_; }

  SetFamily load_space(const std::string& path) {
    auto doc = io::read_space_file(path);
    for (const auto& w : doc.warnings) err_ << "warning: " << w << '\n';
    return std::move(doc.family);
  }

  SubsetMask inline_set(const Universe& universe) {
    return io::parse_inline_set(universe, options_.set);
  }

  /// Emits the JSON document or the human line, returns the exit code for `value`.
  int emit(const Json& doc, const std::string& human, bool value) {
    if (json()) {
      out_ << doc.dump() << '\n';
    } else {
      out_ << human << '\n';
    }
    return value ? kExitTrue : kExitFalse;
  }

 private:
  const Options& options_;
  std::ostream& out_;
  std::ostream& err_;
};

Json nullable_set(const Universe& u, const std::optional<SubsetMask>& m) {
  return m ? io::subset_to_json(u, *m) : Json(nullptr);
}

int cmd_verify(Context& ctx) {
  const SetFamily family = ctx.load_space(ctx.options().space);
  const auto report = is_anti_topology(family);
  Json doc = Json::object();
  doc["anti_topology"] = report.ok;
  doc["degenerate"] = report.degenerate;
  std::string status;
  if (report.ok) {
    status = report.degenerate ? "degenerate anti-topology" : "anti-topology";
    doc["violation"] = nullptr;
  } else {
    status = "not an anti-topology: " + to_string(*report.violation);
    Json violation = Json::object();
    violation["reason"] = to_string(*report.violation);
    if (report.witness) {
      violation["witness"] = Json::array({io::subset_to_json(family.universe(), report.witness->first),
                                          io::subset_to_json(family.universe(), report.witness->second)});
      status += " " + to_string(family.universe(), report.witness->first) + " & " +
                to_string(family.universe(), report.witness->second);
    }
    doc["violation"] = std::move(violation);
  }
  doc["status"] = status;
  return ctx.emit(doc, status, report.ok);
}

int emit_family(Context& ctx, const SetFamily& family) {
  return ctx.emit(io::space_to_json(family), to_string(family), true);
}

int cmd_classify(Context& ctx) {
  const SetFamily family = ctx.load_space(ctx.options().space);
  const auto c = classify_structure(family);
  Json doc = Json::object();
  doc["is_anti_topology"] = c.is_anti_topology;
  doc["is_topology"] = c.is_topology;
  doc["is_supra"] = c.is_supra;
  doc["is_infra"] = c.is_infra;
  doc["is_minimal_structure"] = c.is_minimal_structure;
  doc["is_weak_structure"] = c.is_weak_structure;
  std::string human;
  for (const auto& [key, value] : doc.items()) {
    if (value.get<bool>()) human += (human.empty() ? "" : " ") + key.substr(3);
  }
  if (human.empty()) human = "generalized_weak_structure";
  return ctx.emit(doc, human, true);
}

int cmd_operator(Context& ctx, bool is_interior) {
  const SetFamily family = ctx.load_space(ctx.options().space);
  const SubsetMask a = ctx.inline_set(family.universe());
  const SubsetMask result = is_interior ? interior(family, a) : closure(family, a);
  Json doc = Json::object();
  doc["set"] = io::subset_to_json(family.universe(), result);
  return ctx.emit(doc, to_string(family.universe(), result), true);
}

int cmd_door(Context& ctx) {
  const SetFamily family = ctx.load_space(ctx.options().space);
  const auto report = is_door_space(family);
  Json doc = Json::object();
  doc["door"] = report.is_door;
  doc["counterexample"] = nullable_set(family.universe(), report.counterexample);
  std::string human = report.is_door ? "door space"
                                     : "not a door space: " +
                                           to_string(family.universe(), *report.counterexample) +
                                           " is neither anti-open nor anti-closed";
  return ctx.emit(doc, human, report.is_door);
}

int cmd_dense(Context& ctx) {
  const SetFamily family = ctx.load_space(ctx.options().space);
  const auto r = is_anti_dense(family, ctx.inline_set(family.universe()));
  Json doc = Json::object();
  doc["is_dense"] = r.is_dense;
  doc["by_closure"] = r.by_closure;
  doc["by_meets_all"] = r.by_meets_all;
  doc["by_empty_exterior"] = r.by_empty_exterior;
  doc["blocking_witness"] = nullable_set(family.universe(), r.blocking_witness);
  std::string human = r.is_dense ? "anti-dense"
                                 : "not anti-dense: disjoint from anti-open " +
                                       to_string(family.universe(), *r.blocking_witness);
  return ctx.emit(doc, human, r.is_dense);
}

int cmd_nowhere_dense(Context& ctx) {
  const SetFamily family = ctx.load_space(ctx.options().space);
  const bool result = is_anti_nowhere_dense(family, ctx.inline_set(family.universe()));
  Json doc = Json::object();
  doc["nowhere_dense"] = result;
  return ctx.emit(doc, result ? "anti-nowhere-dense" : "not anti-nowhere-dense", result);
}

int cmd_map_check(Context& ctx) {
  const auto& o = ctx.options();
  const FiniteMap map = io::read_map_file(o.map);
  const SetFamily t = ctx.load_space(o.domain_space);
  const SetFamily s = ctx.load_space(o.codomain_space);
  Json doc = Json::object();
  doc["kind"] = o.kind;
  if (o.kind == "anti") {
    const auto r = is_anti_continuous(map, t, s);
    doc["continuous"] = r.continuous;
    doc["witness"] = nullable_set(map.codomain(), r.witness);
    std::string human = r.continuous ? "anti-continuous"
                                     : "not anti-continuous: preimage of " +
                                           to_string(map.codomain(), *r.witness) +
                                           " is not anti-open";
    return ctx.emit(doc, human, r.continuous);
  }
  const auto r = is_point_anti_continuous(map, t, s);
  doc["continuous"] = r.continuous;
  if (r.continuous) {
    doc["witness"] = nullptr;
    return ctx.emit(doc, "point-anti-continuous", true);
  }
  Json w = Json::object();
  w["point"] = map.domain().label(*r.point);
  w["set"] = io::subset_to_json(map.codomain(), *r.neighbourhood);
  doc["witness"] = std::move(w);
  return ctx.emit(doc,
                  "not point-anti-continuous at " + map.domain().label(*r.point) + " for " +
                      to_string(map.codomain(), *r.neighbourhood),
                  false);
}

int cmd_enumerate(Context& ctx) {
  auto stream = enumerate_anti_topologies(ctx.options().n, ctx.options().include_degenerate);
  while (auto family = stream.next()) {
    if (ctx.json()) {
      ctx.out() << io::dump_space(*family) << '\n';
    } else {
      ctx.out() << to_string(*family) << '\n';
    }
  }
  return kExitTrue;
}

int cmd_count(Context& ctx) {
  const auto counts = count_anti_topologies(ctx.options().n);
  Json doc = Json::object();
  doc["n"] = ctx.options().n;
  doc["non_degenerate"] = counts.non_degenerate;
  doc["total"] = counts.total;
  return ctx.emit(doc,
                  std::to_string(counts.non_degenerate) + " non-degenerate, " +
                      std::to_string(counts.total) + " total",
                  true);
}

modal::Valuation parse_valuations(const Universe& worlds, const std::vector<std::string>& items) {
  modal::Valuation v;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw InvalidArgument("valuation '" + item + "' must look like name=label,label");
    }
    v[item.substr(0, eq)] = io::parse_inline_set(worlds, std::string_view(item).substr(eq + 1));
  }
  return v;
}

Json countermodel_json(const modal::Model& m) {
  Json doc = io::space_to_json(m.family());
  doc["valuation"] = io::valuation_to_json(m.worlds(), m.valuation());
  return doc;
}

std::string countermodel_text(const modal::Model& m) {
  std::string text = "countermodel on " + to_string(m.family()) + " over " +
                     to_string(m.worlds(), m.worlds().full_set());
  for (const auto& [name, set] : m.valuation()) text += " " + name + "=" + to_string(m.worlds(), set);
  return text;
}

int cmd_modal_eval(Context& ctx) {
  const auto& o = ctx.options();
  const SetFamily family = ctx.load_space(o.space);
  const auto formula = modal::parse_formula(o.formula);
  const modal::Model model(family, parse_valuations(family.universe(), o.valuations));
  const SubsetMask truth = modal::truth_set(model, formula);
  Json doc = Json::object();
  doc["formula"] = modal::to_string(formula);
  doc["truth_set"] = io::subset_to_json(family.universe(), truth);
  doc["valid"] = truth.is_full();
  return ctx.emit(doc, "truth set " + to_string(family.universe(), truth), truth.is_full());
}

int cmd_modal_taut(Context& ctx) {
  const auto& o = ctx.options();
  const auto formula = modal::parse_formula(o.formula);
  modal::TautologyReport report;
  if (!o.space.empty()) {
    report = modal::is_tautology_in_space(ctx.load_space(o.space), formula);
  } else {
    if (o.n == 0) throw InvalidArgument("modal-taut needs --n or --space");
    report = modal::is_anti_tautology_upto(o.n, formula, !o.exclude_degenerate);
  }
  Json doc = Json::object();
  doc["formula"] = modal::to_string(formula);
  doc["tautology"] = report.tautology;
  doc["countermodel"] = report.countermodel ? countermodel_json(*report.countermodel) : Json(nullptr);
  return ctx.emit(doc, report ? "tautology" : "not a tautology: " + countermodel_text(*report.countermodel),
                  report.tautology);
}

// Named predicates for the witness subcommand.
struct NamedSpacePredicate {
  std::size_t arity;
  SpacePredicate predicate;
};

std::optional<NamedSpacePredicate> space_predicate(const std::string& name) {
  if (name == "door") {
    return NamedSpacePredicate{0, [](const SetFamily& f, std::span<const SubsetMask>) {
                                 return is_door_space(f).is_door;
                               }};
  }
  if (name == "dense-intersection") {
    return NamedSpacePredicate{2, [](const SetFamily& f, std::span<const SubsetMask> s) {
                                 return is_anti_dense(f, s[0]).is_dense &&
                                        is_anti_dense(f, s[1]).is_dense &&
                                        !is_anti_dense(f, s[0] & s[1]).is_dense;
                               }};
  }
  if (name == "strict-interior-intersection") {
    return NamedSpacePredicate{2, [](const SetFamily& f, std::span<const SubsetMask> s) {
                                 return interior(f, s[0] & s[1]) !=
                                        (interior(f, s[0]) & interior(f, s[1]));
                               }};
  }
  return std::nullopt;
}

int cmd_witness(Context& ctx) {
  const auto& o = ctx.options();
  Json doc = Json::object();
  doc["predicate"] = o.predicate;
  auto exhausted = [&](const Exhausted& e) {
    doc["found"] = false;
    Json ex = Json::object();
    ex["min_n"] = e.min_n;
    ex["max_n"] = e.max_n;
    ex["cases"] = e.cases;
    doc["exhausted"] = std::move(ex);
    return ctx.emit(doc,
                    "no witness for n in [" + std::to_string(e.min_n) + ", " +
                        std::to_string(e.max_n) + "] after " + std::to_string(e.cases) + " cases",
                    false);
  };

  if (o.predicate == "point-not-anti-continuous") {
    MapBounds bounds;
    bounds.min_n = o.n == 0 ? 2 : o.n;
    bounds.max_n = o.max_n == 0 ? 3 : o.max_n;
    auto result = find_witness(bounds, [](const FiniteMap& m, const SetFamily& t, const SetFamily& s) {
      return is_point_anti_continuous(m, t, s).continuous && !is_anti_continuous(m, t, s).continuous;
    });
    if (auto* e = std::get_if<Exhausted>(&result)) return exhausted(*e);
    const auto& w = std::get<MapWitness>(result);
    doc["found"] = true;
    Json wj = Json::object();
    wj["domain_space"] = io::space_to_json(w.domain_space);
    wj["codomain_space"] = io::space_to_json(w.codomain_space);
    wj["map"] = io::map_to_json(w.map);
    doc["witness"] = std::move(wj);
    return ctx.emit(doc, "witness: " + to_string(w.domain_space) + " -> " +
                             to_string(w.codomain_space) + " map " + io::map_to_json(w.map)["map"].dump(),
                    true);
  }

  auto named = space_predicate(o.predicate);
  if (!named) throw InvalidArgument("unknown predicate '" + o.predicate + "'");
  SpaceBounds bounds;
  bounds.min_n = o.n == 0 ? 2 : o.n;
  bounds.max_n = o.max_n == 0 ? kMaxEnumerationPoints : o.max_n;
  bounds.subset_arity = named->arity;
  auto result = find_witness(bounds, named->predicate);
  if (auto* e = std::get_if<Exhausted>(&result)) return exhausted(*e);
  const auto& w = std::get<SpaceWitness>(result);
  doc["found"] = true;
  Json wj = Json::object();
  wj["space"] = io::space_to_json(w.space);
  Json subsets = Json::array();
  std::string human = "witness: " + to_string(w.space);
  for (auto s : w.subsets) {
    subsets.push_back(io::subset_to_json(w.space.universe(), s));
    human += " " + to_string(w.space.universe(), s);
  }
  wj["subsets"] = std::move(subsets);
  doc["witness"] = std::move(wj);
  return ctx.emit(doc, human, true);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite anti-topological spaces: verification, operators, search, modal checks",
               "antitop"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output mode")
      ->check(CLI::IsMember({"json", "human"}))
      ->capture_default_str();

  std::map<CLI::App*, std::function<int(Context&)>> handlers;
  auto space_cmd = [&](const char* name, const char* help, std::function<int(Context&)> fn,
                       bool needs_set = false) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("space", o.space, "Space file")->required();
    if (needs_set) {
      sub->add_option("--set", o.set, "Comma-separated point labels (empty for the empty set)")
          ->required();
    }
    handlers[sub] = std::move(fn);
    return sub;
  };

  space_cmd("verify", "Check the anti-topology axioms", cmd_verify);
  space_cmd("closed", "Anti-closed family", [](Context& c) {
    return emit_family(c, closed_family(c.load_space(c.options().space)));
  });
  space_cmd("tau", "Associated topology", [](Context& c) {
    return emit_family(c, associated_topology(c.load_space(c.options().space)));
  });
  space_cmd("classify", "Structure classification", cmd_classify);
  space_cmd("int", "Anti-interior of a set", [](Context& c) { return cmd_operator(c, true); }, true);
  space_cmd("cl", "Anti-closure of a set", [](Context& c) { return cmd_operator(c, false); }, true);
  space_cmd("door", "Door space check", cmd_door);
  space_cmd("dense", "Anti-density of a set", cmd_dense, true);
  space_cmd("nowhere-dense", "Anti-nowhere-density of a set", cmd_nowhere_dense, true);

  auto* map_check = app.add_subcommand("map-check", "Continuity of a map between two spaces");
  map_check->add_option("map", o.map, "Map file")->required();
  map_check->add_option("--domain-space", o.domain_space, "Space file on the domain")->required();
  map_check->add_option("--codomain-space", o.codomain_space, "Space file on the codomain")
      ->required();
  map_check->add_option("--kind", o.kind, "anti or point")
      ->check(CLI::IsMember({"anti", "point"}))
      ->capture_default_str();
  handlers[map_check] = cmd_map_check;

  auto* enumerate = app.add_subcommand("enumerate", "Dump every anti-topology as JSON Lines");
  enumerate->add_option("--n", o.n, "Universe size")->required();
  enumerate->add_flag("--include-degenerate", o.include_degenerate, "Include the empty family");
  handlers[enumerate] = cmd_enumerate;

  auto* count = app.add_subcommand("count", "Count anti-topologies");
  count->add_option("--n", o.n, "Universe size")->required();
  handlers[count] = cmd_count;

  auto* modal_eval = app.add_subcommand("modal-eval", "Truth set of a formula in one model");
  modal_eval->add_option("space", o.space, "Space file")->required();
  modal_eval->add_option("formula", o.formula, "Formula")->required();
  modal_eval->add_option("--val", o.valuations, "Valuation name=label,label (repeatable)");
  handlers[modal_eval] = cmd_modal_eval;

  auto* modal_taut = app.add_subcommand("modal-taut", "Validity over anti-topological models");
  modal_taut->add_option("formula", o.formula, "Formula")->required();
  modal_taut->add_option("--n", o.n, "Check every space with 2..n points");
  modal_taut->add_option("--space", o.space, "Check a single space file instead");
  modal_taut->add_flag("--exclude-degenerate", o.exclude_degenerate, "Skip the empty family");
  handlers[modal_taut] = cmd_modal_taut;

  auto* witness = app.add_subcommand("witness", "Search for a counterexample");
  witness->add_option("--predicate", o.predicate,
                      "door | dense-intersection | strict-interior-intersection | "
                      "point-not-anti-continuous")
      ->required();
  witness->add_option("--n", o.n, "Smallest universe size (default 2)");
  witness->add_option("--max-n", o.max_n, "Largest universe size");
  handlers[witness] = cmd_witness;

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitTrue : kExitError;
  }

  Context ctx(o, out, err);
  try {
    for (auto* sub : app.get_subcommands()) return handlers.at(sub)(ctx);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace antitop::cli
