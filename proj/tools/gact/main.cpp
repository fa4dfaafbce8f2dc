// gact: command-line front end.
//
// Exit status: 0 on success, 1 on domain errors (a JSON error object goes to
// stderr), 2 on usage errors and malformed formulas.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gact/boolring.hpp"
#include "gact/config.hpp"
#include "gact/error.hpp"
#include "gact/galois.hpp"
#include "gact/generic.hpp"
#include "gact/generic_eval.hpp"
#include "gact/group.hpp"
#include "gact/independence.hpp"
#include "gact/io.hpp"
#include "gact/qe.hpp"
#include "gact/structure.hpp"

using json = nlohmann::json;
using namespace gact;

namespace {

struct RunConfig {
  std::optional<std::uint64_t> seed_flag;
  std::size_t cap_nodes = 50'000'000;
  std::size_t cap_size = 200;
  bool json_out = false;

  std::uint64_t seed() const {
    if (seed_flag) return *seed_flag;
    if (const char* env = std::getenv("GACT_SEED")) {
      try {
        return std::stoull(env);
      } catch (const std::exception&) {
        throw Error(Errc::InvalidArgument, std::string("GACT_SEED is not an unsigned integer: ") + env);
      }
    }
    return 0;
  }
};

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }
void print_text(std::string_view text) {
  std::cout << text;
  if (text.empty() || text.back() != '\n') std::cout << "\n";
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

// Comma-separated labels; a token that is not a label is read as an index.
std::vector<int> element_list(const GStructure& m, const std::string& text) {
  std::vector<int> out;
  for (const auto& tok : split(text, ',')) {
    if (auto x = m.find(tok)) {
      out.push_back(*x);
      continue;
    }
    std::size_t used = 0;
    int x = -1;
    try {
      x = std::stoi(tok, &used);
    } catch (const std::exception&) {
    }
    if (used != tok.size() || !m.contains(x)) throw Error(Errc::UnknownElement, "no element " + tok);
    out.push_back(x);
  }
  return out;
}

std::vector<std::string> labels_of(const GStructure& m, const std::vector<int>& xs) {
  std::vector<std::string> out;
  for (int x : xs) out.push_back(m.label(x));
  return out;
}

GStructure load_structure(const std::string& path) { return structure_from_json(read_text_file(path)); }

json perm_group_json(const GStructure& m, const PermGroup& g) {
  json gens = json::array();
  for (const auto& p : g.generators) gens.push_back(p);
  return {{"domain", labels_of(m, g.domain)}, {"order", g.order()}, {"generators", gens}};
}

// ---- subcommands ---------------------------------------------------------

struct FormulaArgs {
  std::string theory = "graph";
  std::string group = "z2";
  std::string formula;
};

void add_formula_args(CLI::App* sub, FormulaArgs& a) {
  sub->add_option("--theory", a.theory, "graph or empty")->check(CLI::IsMember({"graph", "empty"}));
  sub->add_option("--group", a.group, "built-in group name or group file");
  sub->add_option("--formula", a.formula, "formula text")->required();
}

int run_qe(const RunConfig& rc, const FormulaArgs& a) {
  auto g = load_group(a.group);
  const QEResult r = quantifier_eliminate(parse_theory(a.theory), parse(a.formula, *g), g);
  if (rc.json_out)
    print_json({{"input", to_string(r.input, *g)}, {"output", to_string(r.output, *g)}, {"certificate", r.certificate}});
  else
    print_text(to_string(r.output, *g));
  return 0;
}

int run_decide(const RunConfig& rc, const FormulaArgs& a) {
  auto g = load_group(a.group);
  const bool v = decide_sentence(parse_theory(a.theory), g, parse(a.formula, *g));
  if (rc.json_out)
    print_json({{"sentence", a.formula}, {"value", v}});
  else
    print_text(v ? "true" : "false");
  return 0;
}

struct EvalArgs {
  std::string model;
  std::string formula;
  std::vector<std::string> assign;
  std::string generic;
};

int run_eval(const RunConfig& rc, const EvalArgs& a) {
  const GStructure m = load_structure(a.model);
  const Formula f = parse(a.formula, m.group());
  Assignment env;
  for (const auto& item : a.assign) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(Errc::InvalidArgument, "assignment must read var=element: " + item);
    const auto xs = element_list(m, item.substr(eq + 1));
    if (xs.size() != 1) throw Error(Errc::InvalidArgument, "one element per variable: " + item);
    env[item.substr(0, eq)] = xs[0];
  }
  bool v = false;
  if (a.generic.empty()) {
    v = eval(m, f, env);
  } else {
    GenericEvaluator ev(parse_theory(a.generic), m.group_ptr(), rc.cap_nodes);
    v = ev.eval(m, f, env);
  }
  if (rc.json_out)
    print_json({{"value", v}, {"semantics", a.generic.empty() ? "structure" : "generic"}});
  else
    print_text(v ? "true" : "false");
  return 0;
}

struct SaturateArgs {
  std::string theory = "graph";
  std::string group = "z2";
  int rounds = 1;
  std::optional<std::size_t> cap;
  int param_bound = 1;
  int witness_bound = 1;
  std::string model;
  std::string out;
  std::string log;
};

int run_saturate(const RunConfig& rc, const SaturateArgs& a) {
  const Theory th = parse_theory(a.theory);
  SaturationState start = a.model.empty() ? initial_state(theory_signature(th), load_group(a.group))
                                          : state_from(load_structure(a.model));
  SaturateOptions opts;
  opts.param_bound = a.param_bound;
  opts.witness_bound = a.witness_bound;
  opts.size_cap = a.cap.value_or(rc.cap_size);
  const SaturationState s = th == Theory::Graph ? saturate_graph(start, a.rounds, opts) : saturate_empty(start, a.rounds);
  const std::string structure = to_json(s.current);
  std::string log;
  for (const auto& line : s.log) log += line + "\n";
  if (!a.log.empty()) write_text_file(a.log, log);
  if (a.out.empty()) {
    std::cout << structure;
  } else {
    write_text_file(a.out, structure);
    print_json({{"size", s.current.size()}, {"rounds", s.round}, {"truncated", s.truncated}, {"out", a.out}});
  }
  return 0;
}

struct IndepArgs {
  std::string model;
  std::string a, e, b;
};

int run_indep(const RunConfig& rc, const IndepArgs& x) {
  const GStructure m = load_structure(x.model);
  const auto a = make_set(element_list(m, x.a)), e = make_set(element_list(m, x.e)), b = make_set(element_list(m, x.b));
  const bool v = indep(m, a, e, b);
  if (rc.json_out)
    print_json({{"independent", v}, {"a", labels_of(m, a)}, {"e", labels_of(m, e)}, {"b", labels_of(m, b)}});
  else
    print_text(v ? "true" : "false");
  return 0;
}

struct AxiomArgs {
  std::string theory = "graph";
  std::string group = "z2";
  std::size_t trials = 100;
  std::string report;
  bool mutant = false;
};

int run_indep_axioms(const RunConfig& rc, const AxiomArgs& a) {
  AxiomCheckOptions opts;
  opts.node_cap = std::min<std::size_t>(rc.cap_nodes, opts.node_cap);
  if (a.mutant) opts.relation = indep_without_closure;
  const AxiomReport r = check_axioms(parse_theory(a.theory), load_group(a.group), a.trials, rc.seed(), opts);
  const std::string text = to_json(r);
  if (a.report.empty())
    std::cout << text;
  else
    write_text_file(a.report, text);
  return 0;
}

struct AmalgamArgs {
  std::string model;
  std::string base, a, b, c1, c2;
  std::string out;
};

int run_indep_amalgam(const RunConfig&, const AmalgamArgs& x) {
  const GStructure m = load_structure(x.model);
  const auto r = independence_theorem_check(m, make_set(element_list(m, x.base)), element_list(m, x.a),
                                            element_list(m, x.b), element_list(m, x.c1), element_list(m, x.c2));
  if (!x.out.empty()) write_text_file(x.out, to_json(r.amalgam));
  print_json({{"ok", r.ok()},
              {"type_a", r.type_a},
              {"type_b", r.type_b},
              {"c_independent", r.c_independent},
              {"c", labels_of(r.amalgam, r.c)},
              {"amalgam_size", r.amalgam.size()}});
  return 0;
}

struct GaloisArgs {
  std::string action;
  std::string model;
  std::string base;
  std::string whole;
  std::string inter;
  std::vector<std::string> perms;
};

int run_galois(const RunConfig&, const GaloisArgs& x) {
  const GStructure m = load_structure(x.model);
  ElementSet whole;
  if (x.whole.empty())
    for (int i = 0; i < m.size(); ++i) whole.push_back(i);
  else
    whole = make_set(element_list(m, x.whole));
  const FiniteExtension ext{m, make_set(element_list(m, x.base)), whole};
  validate_extension(ext);
  if (x.action == "aut") {
    print_json(perm_group_json(m, aut_group(ext)));
  } else if (x.action == "alpha") {
    print_json(perm_group_json(m, galois_alpha(ext, make_set(element_list(m, x.inter)))));
  } else if (x.action == "beta") {
    std::vector<std::vector<int>> gens;
    for (const auto& p : x.perms) {
      std::vector<int> perm;
      for (const auto& tok : split(p, ',')) perm.push_back(std::stoi(tok));
      gens.push_back(std::move(perm));
    }
    print_json({{"fixed", labels_of(m, galois_beta(ext, generate_perm_group(whole, gens)))}});
  } else {
    std::cout << to_json(galois_connection_check(ext));
  }
  return 0;
}

struct ConfigArgs {
  std::string group = "z2";
  std::string theory = "graph";
  int n = 1;
  int n_prime = 0;
  std::string base;
  std::string file;
  std::optional<std::size_t> limit;
};

int run_config(const RunConfig& rc, const ConfigArgs& a) {
  if (!a.file.empty()) {
    const auto rep = is_consistent(configuration_from_json(read_text_file(a.file)));
    json j{{"consistent", rep.consistent}};
    if (rep.violation) j["violation"] = *rep.violation;
    if (rep.witness) j["witness_size"] = rep.witness->size();
    print_json(j);
    return 0;
  }
  auto g = load_group(a.group);
  TermSet ts(g, a.n, a.n_prime);
  PartialConfig base(ts);
  if (parse_theory(a.theory) == Theory::Empty)
    for (int p = 0; p < ts.size(); ++p)
      for (int q = 0; q < ts.size(); ++q)
        if (p != q) base.restrict(p, q, PartialConfig::kEq | PartialConfig::kNR);
  if (!a.base.empty()) {
    std::vector<std::string> vars;
    for (int s = 0; s < ts.slots(); ++s) vars.push_back(ts.var_name(s));
    const Dnf dnf = to_dnf(parse(a.base, *g, vars), *g);
    if (dnf.empty()) throw Error(Errc::ContradictoryBase, "base literals are unsatisfiable");
    if (dnf.size() != 1) throw Error(Errc::InvalidArgument, "base must be a single conjunction of literals");
    for (const auto& lit : dnf[0]) base.add(lit);
  }
  const std::size_t limit = a.limit.value_or(rc.cap_size);
  json listed = json::array();
  std::size_t total = 0;
  for_each_extension(base, [&](const Configuration& q) {
    ++total;
    if (listed.size() < limit) listed.push_back(json::parse(to_json(q)));
    return true;
  });
  if (rc.json_out)
    print_json({{"count", total}, {"configurations", listed}});
  else
    print_text(std::to_string(total));
  return 0;
}

struct BoolArgs {
  std::string action;
  int atoms = 1;
  std::string group = "z2";
  int n = 1;
  std::string gens_i, gens_j;
  std::string r;
};

TransformalIdeal read_ideal(const BooleanRing& ring, int n, const std::string& path) {
  TransformalIdeal ideal{ring.group().order(), n, {}};
  for (const auto& line : split(read_text_file(path), '\n'))
    if (line[0] != '#') ideal.generators.push_back(parse_bool_polynomial(line, ring, n));
  return ideal;
}

int run_boolring(const RunConfig& rc, const BoolArgs& a) {
  const BooleanRing ring = BooleanRing::trivial_action(a.atoms, load_group(a.group));
  if (a.action == "non-atom") {
    const auto w = find_non_atom_witness(ring, ring.parse_element(a.r));
    print_json({{"r", a.r},
                {"extended_atoms", w.extended.atom_count()},
                {"r_image", w.extended.to_string(w.r_image)},
                {"y", w.extended.to_string(w.y)}});
    return 0;
  }
  const auto i = read_ideal(ring, a.n, a.gens_i), j = read_ideal(ring, a.n, a.gens_j);
  const auto pt = check_diamond_axiom(ring, i, j);
  json j_out{{"witness_found", pt.has_value()}};
  if (pt) {
    std::vector<std::string> r;
    for (RingElem v : *pt) r.push_back(ring.to_string(v));
    j_out["r"] = r;
  }
  if (rc.json_out || pt)
    print_json(j_out);
  else
    print_text("none");
  return 0;
}

struct GroupArgs {
  std::string group = "z2";
  std::string cover;
  std::string map;
};

json subgroup_json(const FiniteGroup& g, const Subgroup& h) {
  json names = json::array();
  for (int x : h.members) names.push_back(g.name(x));
  return names;
}

int run_group(const RunConfig& rc, const GroupArgs& a) {
  auto g = load_group(a.group);
  if (!a.cover.empty()) {
    auto t = load_group(a.cover);
    std::vector<int> map;
    for (const auto& tok : split(a.map, ',')) map.push_back(std::stoi(tok));
    const bool v = is_frattini_cover(GroupHom(g, t, map));
    if (rc.json_out)
      print_json({{"frattini_cover", v}});
    else
      print_text(v ? "true" : "false");
    return 0;
  }
  json subs = json::array();
  for (const auto& h : subgroups(*g)) subs.push_back(subgroup_json(*g, h));
  json maximal = json::array();
  for (const auto& h : maximal_subgroups(*g)) maximal.push_back(subgroup_json(*g, h));
  print_json({{"order", g->order()},
              {"elements", g->names()},
              {"subgroups", subs},
              {"maximal", maximal},
              {"frattini", subgroup_json(*g, frattini_subgroup(*g))}});
  return 0;
}

void report_error(const Error& e) {
  json j{{"error", std::string(errc_name(e.code()))}, {"message", e.what()}};
  if (const auto* se = dynamic_cast<const SyntaxError*>(&e)) j["position"] = se->position();
  std::cerr << j.dump() << "\n";
}

bool is_usage_error(Errc c) {
  return c == Errc::SyntaxError || c == Errc::UnknownGroupElement || c == Errc::UnboundVariable;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Model-companion workbench for structures with a finite group action"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig rc;
  app.add_option("--seed", rc.seed_flag, "random seed (default: GACT_SEED, else 0)");
  app.add_option("--cap-nodes", rc.cap_nodes, "node budget for searches");
  app.add_option("--cap-size", rc.cap_size, "size budget for structures and listings");
  app.add_flag("--json", rc.json_out, "machine-readable output");

  FormulaArgs qe_a, decide_a;
  auto* qe = app.add_subcommand("qe", "eliminate quantifiers");
  add_formula_args(qe, qe_a);
  auto* decide = app.add_subcommand("decide", "decide a sentence in the model companion");
  add_formula_args(decide, decide_a);

  EvalArgs eval_a;
  auto* ev = app.add_subcommand("eval", "evaluate a formula in a structure file");
  ev->add_option("--model", eval_a.model)->required();
  ev->add_option("--formula", eval_a.formula)->required();
  ev->add_option("--assign", eval_a.assign, "var=element, repeatable");
  ev->add_option("--generic", eval_a.generic, "evaluate in the generic model of this theory instead")
      ->check(CLI::IsMember({"graph", "empty"}));

  SaturateArgs sat_a;
  auto* sat = app.add_subcommand("saturate", "grow a finite approximation of the generic model");
  sat->add_option("--theory", sat_a.theory)->check(CLI::IsMember({"graph", "empty"}));
  sat->add_option("--group", sat_a.group);
  sat->add_option("--rounds", sat_a.rounds, "rounds (graph) or copies of each orbit type (empty)");
  sat->add_option("--cap", sat_a.cap, "size cap (default: --cap-size)");
  sat->add_option("--param-bound", sat_a.param_bound);
  sat->add_option("--witness-bound", sat_a.witness_bound);
  sat->add_option("--model", sat_a.model, "start from this structure");
  sat->add_option("--out", sat_a.out, "structure file");
  sat->add_option("--log", sat_a.log, "round log, one JSON object per line");

  IndepArgs ind_a;
  auto* ind = app.add_subcommand("indep", "test A independent from B over E");
  ind->add_option("--model", ind_a.model)->required();
  ind->add_option("--a", ind_a.a);
  ind->add_option("--e", ind_a.e);
  ind->add_option("--b", ind_a.b);

  AxiomArgs ax_a;
  auto* ax = app.add_subcommand("indep-axioms", "sample the independence axioms");
  ax->add_option("--theory", ax_a.theory)->check(CLI::IsMember({"graph", "empty"}));
  ax->add_option("--group", ax_a.group);
  ax->add_option("--trials", ax_a.trials);
  ax->add_option("--report", ax_a.report, "report file (default: stdout)");
  ax->add_flag("--mutant", ax_a.mutant, "check the relation without orbit closure instead");

  AmalgamArgs am_a;
  auto* am = app.add_subcommand("indep-amalgam", "amalgamate two types over a model");
  am->add_option("--model", am_a.model)->required();
  am->add_option("--base", am_a.base, "G-closed submodel");
  am->add_option("--a", am_a.a);
  am->add_option("--b", am_a.b);
  am->add_option("--c1", am_a.c1);
  am->add_option("--c2", am_a.c2);
  am->add_option("--out", am_a.out, "write the amalgam here");

  GaloisArgs gal_a;
  auto* gal = app.add_subcommand("galois", "automorphism groups and the Galois connection");
  gal->add_option("action", gal_a.action)->required()->check(CLI::IsMember({"aut", "alpha", "beta", "check"}));
  gal->add_option("--model", gal_a.model)->required();
  gal->add_option("--base", gal_a.base);
  gal->add_option("--whole", gal_a.whole, "default: the whole universe");
  gal->add_option("--inter", gal_a.inter, "intermediate set for alpha");
  gal->add_option("--perm", gal_a.perms, "generator for beta, positions in the whole set, repeatable");

  ConfigArgs cfg_a;
  auto* cfg = app.add_subcommand("config", "enumerate or check configurations");
  cfg->add_option("--group", cfg_a.group);
  cfg->add_option("--theory", cfg_a.theory)->check(CLI::IsMember({"graph", "empty"}));
  cfg->add_option("--n", cfg_a.n);
  cfg->add_option("--n-prime", cfg_a.n_prime);
  cfg->add_option("--base", cfg_a.base, "conjunction of literals over x0.., y0..");
  cfg->add_option("--check", cfg_a.file, "configuration file to test for consistency");
  cfg->add_option("--limit", cfg_a.limit, "configurations listed with --json");

  BoolArgs bool_a;
  auto* br = app.add_subcommand("boolring", "Boolean rings with a group action");
  br->add_option("action", bool_a.action)->required()->check(CLI::IsMember({"diamond", "non-atom"}));
  br->add_option("--atoms", bool_a.atoms);
  br->add_option("--group", bool_a.group);
  br->add_option("--n", bool_a.n);
  br->add_option("--gens-i", bool_a.gens_i, "one polynomial per line");
  br->add_option("--gens-j", bool_a.gens_j, "one polynomial per line");
  br->add_option("--r", bool_a.r, "ring element such as {1,2}");

  GroupArgs grp_a;
  auto* grp = app.add_subcommand("group", "subgroup lattice and Frattini covers");
  grp->add_option("--group", grp_a.group);
  grp->add_option("--cover", grp_a.cover, "target group; tests the map given by --map");
  grp->add_option("--map", grp_a.map, "images of the source elements, comma-separated");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (qe->parsed()) return run_qe(rc, qe_a);
    if (decide->parsed()) return run_decide(rc, decide_a);
    if (ev->parsed()) return run_eval(rc, eval_a);
    if (sat->parsed()) return run_saturate(rc, sat_a);
    if (ind->parsed()) return run_indep(rc, ind_a);
    if (ax->parsed()) return run_indep_axioms(rc, ax_a);
    if (am->parsed()) return run_indep_amalgam(rc, am_a);
    if (gal->parsed()) return run_galois(rc, gal_a);
    if (cfg->parsed()) return run_config(rc, cfg_a);
    if (br->parsed()) return run_boolring(rc, bool_a);
    if (grp->parsed()) return run_group(rc, grp_a);
  } catch (const Error& e) {
    report_error(e);
    return is_usage_error(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "InvalidArgument"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
  return 2;
}
