#include "gact/formula.hpp"

#include <algorithm>
#include <utility>

#include "gact/error.hpp"

namespace gact {

namespace {

Formula make(FormulaKind k) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = k;
  return n;
}

Formula make_atom(FormulaKind k, Term a, Term b) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = k;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  if (k == FormulaKind::Rel) n->symbol = "R";
  return n;
}

Formula make_node(FormulaKind k, std::vector<Formula> kids, std::string var = {}) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = k;
  n->kids = std::move(kids);
  n->var = std::move(var);
  return n;
}

void collect_free(const Formula& f, std::vector<std::string>& bound, std::set<std::string>& out) {
  auto see = [&](const Term& t) {
    if (std::find(bound.begin(), bound.end(), t.var) == bound.end()) out.insert(t.var);
  };
  switch (f->kind) {
    case FormulaKind::Eq:
    case FormulaKind::Rel:
      see(f->lhs);
      see(f->rhs);
      return;
    case FormulaKind::Exists:
    case FormulaKind::Forall:
      bound.push_back(f->var);
      collect_free(f->kids[0], bound, out);
      bound.pop_back();
      return;
    default:
      for (const auto& k : f->kids) collect_free(k, bound, out);
  }
}

int precedence(const Formula& f) {
  switch (f->kind) {
    case FormulaKind::Exists:
    case FormulaKind::Forall:
      return 0;
    case FormulaKind::Implies:
      return 1;
    case FormulaKind::Or:
      return 2;
    case FormulaKind::And:
      return 3;
    case FormulaKind::Not:
      return f->kids[0]->kind == FormulaKind::Eq ? 5 : 4;
    default:
      return 5;
  }
}

void render(const Formula& f, const FiniteGroup& g, std::string& out);

void render_at(const Formula& f, const FiniteGroup& g, int min_prec, std::string& out) {
  if (precedence(f) < min_prec) {
    out += '(';
    render(f, g, out);
    out += ')';
  } else {
    render(f, g, out);
  }
}

void render(const Formula& f, const FiniteGroup& g, std::string& out) {
  switch (f->kind) {
    case FormulaKind::True:
      out += "true";
      return;
    case FormulaKind::False:
      out += "false";
      return;
    case FormulaKind::Eq:
      out += to_string(f->lhs, g) + " = " + to_string(f->rhs, g);
      return;
    case FormulaKind::Rel:
      out += f->symbol + "(" + to_string(f->lhs, g) + ", " + to_string(f->rhs, g) + ")";
      return;
    case FormulaKind::Not: {
      const auto& k = f->kids[0];
      if (k->kind == FormulaKind::Eq) {
        out += to_string(k->lhs, g) + " != " + to_string(k->rhs, g);
        return;
      }
      out += '!';
      render_at(k, g, 4, out);
      return;
    }
    case FormulaKind::And:
    case FormulaKind::Or: {
      const char* sep = f->kind == FormulaKind::And ? " & " : " | ";
      int p = precedence(f);
      for (std::size_t i = 0; i < f->kids.size(); ++i) {
        if (i) out += sep;
        render_at(f->kids[i], g, p + 1, out);
      }
      return;
    }
    case FormulaKind::Implies:
      render_at(f->kids[0], g, 2, out);
      out += " -> ";
      render_at(f->kids[1], g, 1, out);
      return;
    case FormulaKind::Exists:
    case FormulaKind::Forall:
      out += f->kind == FormulaKind::Exists ? "E " : "A ";
      out += f->var + ". ";
      render(f->kids[0], g, out);
      return;
  }
}

struct Evaluator {
  const GStructure& m;
  std::vector<std::pair<std::string, int>> env;

  int lookup(const std::string& v) const {
    for (auto it = env.rbegin(); it != env.rend(); ++it)
      if (it->first == v) return it->second;
    throw Error(Errc::UnassignedVariable, "variable " + v + " has no value");
  }

  int value(const Term& t) const {
    if (t.element < 0 || t.element >= m.group().order())
      throw Error(Errc::SignatureMismatch, "group element index out of range for this structure");
    return m.act(t.element, lookup(t.var));
  }

  bool run(const Formula& f) {
    switch (f->kind) {
      case FormulaKind::True:
        return true;
      case FormulaKind::False:
        return false;
      case FormulaKind::Eq:
        return value(f->lhs) == value(f->rhs);
      case FormulaKind::Rel:
        return m.related(value(f->lhs), value(f->rhs));
      case FormulaKind::Not:
        return !run(f->kids[0]);
      case FormulaKind::And:
        for (const auto& k : f->kids)
          if (!run(k)) return false;
        return true;
      case FormulaKind::Or:
        for (const auto& k : f->kids)
          if (run(k)) return true;
        return false;
      case FormulaKind::Implies:
        return !run(f->kids[0]) || run(f->kids[1]);
      case FormulaKind::Exists:
      case FormulaKind::Forall: {
        bool want = f->kind == FormulaKind::Exists;
        env.emplace_back(f->var, 0);
        bool found = false;
        for (int x = 0; x < m.size() && !found; ++x) {
          env.back().second = x;
          if (run(f->kids[0]) == want) found = true;
        }
        env.pop_back();
        return want ? found : !found;
      }
    }
    return false;
  }
};

Formula subst(const Formula& f, const std::string& var, const Term& by, const FiniteGroup& g) {
  auto swap_term = [&](const Term& t) { return t.var == var ? apply(g, t.element, by) : t; };
  switch (f->kind) {
    case FormulaKind::True:
    case FormulaKind::False:
      return f;
    case FormulaKind::Eq:
    case FormulaKind::Rel:
      if (f->lhs.var != var && f->rhs.var != var) return f;
      return make_atom(f->kind, swap_term(f->lhs), swap_term(f->rhs));
    case FormulaKind::Exists:
    case FormulaKind::Forall:
      if (f->var == var) return f;
      if (f->var == by.var) throw Error(Errc::InvalidArgument, "substitution would capture " + by.var);
      return make_node(f->kind, {subst(f->kids[0], var, by, g)}, f->var);
    default: {
      std::vector<Formula> kids;
      kids.reserve(f->kids.size());
      for (const auto& k : f->kids) kids.push_back(subst(k, var, by, g));
      return make_node(f->kind, std::move(kids));
    }
  }
}

}  // namespace

Formula f_true() {
  static const Formula t = make(FormulaKind::True);
  return t;
}

Formula f_false() {
  static const Formula f = make(FormulaKind::False);
  return f;
}

Formula f_eq(Term a, Term b) { return make_atom(FormulaKind::Eq, std::move(a), std::move(b)); }
Formula f_neq(Term a, Term b) { return f_not(f_eq(std::move(a), std::move(b))); }
Formula f_rel(Term a, Term b) { return make_atom(FormulaKind::Rel, std::move(a), std::move(b)); }
Formula f_not(Formula a) { return make_node(FormulaKind::Not, {std::move(a)}); }

Formula f_and(std::vector<Formula> kids) {
  if (kids.empty()) return f_true();
  if (kids.size() == 1) return kids[0];
  return make_node(FormulaKind::And, std::move(kids));
}

Formula f_or(std::vector<Formula> kids) {
  if (kids.empty()) return f_false();
  if (kids.size() == 1) return kids[0];
  return make_node(FormulaKind::Or, std::move(kids));
}

Formula f_implies(Formula a, Formula b) { return make_node(FormulaKind::Implies, {std::move(a), std::move(b)}); }

Formula f_exists(std::string var, Formula body) {
  return make_node(FormulaKind::Exists, {std::move(body)}, std::move(var));
}

Formula f_forall(std::string var, Formula body) {
  return make_node(FormulaKind::Forall, {std::move(body)}, std::move(var));
}

Term apply(const FiniteGroup& g, int element, const Term& t) { return Term{g.mul(element, t.element), t.var}; }

bool formula_equal(const Formula& a, const Formula& b) {
  if (a == b) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case FormulaKind::True:
    case FormulaKind::False:
      return true;
    case FormulaKind::Eq:
    case FormulaKind::Rel:
      return a->lhs == b->lhs && a->rhs == b->rhs && a->symbol == b->symbol;
    default:
      if (a->var != b->var || a->kids.size() != b->kids.size()) return false;
      for (std::size_t i = 0; i < a->kids.size(); ++i)
        if (!formula_equal(a->kids[i], b->kids[i])) return false;
      return true;
  }
}

std::set<std::string> free_variables(const Formula& f) {
  std::set<std::string> out;
  std::vector<std::string> bound;
  collect_free(f, bound, out);
  return out;
}

int quantifier_depth(const Formula& f) {
  int d = 0;
  for (const auto& k : f->kids) d = std::max(d, quantifier_depth(k));
  if (f->kind == FormulaKind::Exists || f->kind == FormulaKind::Forall) ++d;
  return d;
}

bool is_quantifier_free(const Formula& f) { return quantifier_depth(f) == 0; }

bool mentions_relation(const Formula& f) {
  if (f->kind == FormulaKind::Rel) return true;
  return std::any_of(f->kids.begin(), f->kids.end(), [](const Formula& k) { return mentions_relation(k); });
}

std::size_t formula_size(const Formula& f) {
  std::size_t n = 1;
  for (const auto& k : f->kids) n += formula_size(k);
  return n;
}

std::string to_string(const Term& t, const FiniteGroup& g) {
  if (t.element == g.identity()) return t.var;
  return g.name(t.element) + "·" + t.var;
}

std::string to_string(const Formula& f, const FiniteGroup& g) {
  std::string out;
  render(f, g, out);
  return out;
}

bool eval(const GStructure& m, const Formula& f, const Assignment& a) {
  if (m.signature() == Signature::Empty && mentions_relation(f))
    throw Error(Errc::SignatureMismatch, "formula uses R but the structure has the empty signature");
  Evaluator ev{m, {}};
  for (const auto& [var, x] : a) {
    if (!m.contains(x)) throw Error(Errc::UnknownElement, "assignment of " + var + " is outside the universe");
    ev.env.emplace_back(var, x);
  }
  for (const auto& v : free_variables(f))
    if (!a.count(v)) throw Error(Errc::UnassignedVariable, "variable " + v + " has no value");
  return ev.run(f);
}

Formula substitute(const Formula& f, const std::string& var, const Term& by, const FiniteGroup& g) {
  return subst(f, var, by, g);
}

}  // namespace gact
