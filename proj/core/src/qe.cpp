#include "gact/qe.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "gact/config.hpp"
#include "gact/error.hpp"

namespace gact {

namespace {

using K = Literal::Kind;

K complement(K k) {
  switch (k) {
    case K::Eq: return K::Neq;
    case K::Neq: return K::Eq;
    case K::Rel: return K::NotRel;
    case K::NotRel: return K::Rel;
  }
  return k;
}

Literal negate(Literal l) {
  l.kind = complement(l.kind);
  return l;
}

// Negation normal form over literals: a tree of And / Or with literal leaves.
struct Nnf {
  enum class Op { Lit, And, Or, True, False } op = Op::True;
  Literal lit;
  std::vector<Nnf> kids;
};

Nnf nnf(const Formula& f, bool neg) {
  Nnf out;
  switch (f->kind) {
    case FormulaKind::True:
      out.op = neg ? Nnf::Op::False : Nnf::Op::True;
      return out;
    case FormulaKind::False:
      out.op = neg ? Nnf::Op::True : Nnf::Op::False;
      return out;
    case FormulaKind::Eq:
    case FormulaKind::Rel:
      out.op = Nnf::Op::Lit;
      out.lit.kind = f->kind == FormulaKind::Eq ? (neg ? K::Neq : K::Eq) : (neg ? K::NotRel : K::Rel);
      out.lit.lhs = f->lhs;
      out.lit.rhs = f->rhs;
      return out;
    case FormulaKind::Not:
      return nnf(f->kids[0], !neg);
    case FormulaKind::And:
    case FormulaKind::Or: {
      bool is_and = (f->kind == FormulaKind::And) != neg;
      out.op = is_and ? Nnf::Op::And : Nnf::Op::Or;
      for (const auto& k : f->kids) out.kids.push_back(nnf(k, neg));
      return out;
    }
    case FormulaKind::Implies: {
      // a -> b  ==  !a | b
      out.op = neg ? Nnf::Op::And : Nnf::Op::Or;
      out.kids.push_back(nnf(f->kids[0], !neg));
      out.kids.push_back(nnf(f->kids[1], neg));
      return out;
    }
    case FormulaKind::Exists:
    case FormulaKind::Forall:
      throw Error(Errc::InvalidArgument, "DNF needs a quantifier-free formula");
  }
  return out;
}

using Conj = std::vector<Literal>;

// Sorted, deduplicated; returns false when the conjunction is contradictory.
bool tidy(Conj& c) {
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  for (const auto& l : c)
    if (std::binary_search(c.begin(), c.end(), negate(l))) return false;
  return true;
}

Dnf dnf_of(const Nnf& n, const FiniteGroup& g, std::size_t cap) {
  switch (n.op) {
    case Nnf::Op::True:
      return Dnf{Conj{}};
    case Nnf::Op::False:
      return {};
    case Nnf::Op::Lit: {
      Literal l = n.lit;
      int c = canonical_literal(l, g);
      if (c == 1) return Dnf{Conj{}};
      if (c == 0) return {};
      return Dnf{Conj{l}};
    }
    case Nnf::Op::Or: {
      Dnf out;
      for (const auto& k : n.kids) {
        Dnf d = dnf_of(k, g, cap);
        out.insert(out.end(), std::make_move_iterator(d.begin()), std::make_move_iterator(d.end()));
        if (out.size() > cap) throw Error(Errc::QEBlowup, "DNF exceeds " + std::to_string(cap) + " conjunctions");
      }
      return out;
    }
    case Nnf::Op::And: {
      Dnf acc{Conj{}};
      for (const auto& k : n.kids) {
        Dnf d = dnf_of(k, g, cap);
        Dnf next;
        for (const auto& a : acc)
          for (const auto& b : d) {
            Conj c = a;
            c.insert(c.end(), b.begin(), b.end());
            if (!tidy(c)) continue;
            next.push_back(std::move(c));
            if (next.size() > cap)
              throw Error(Errc::QEBlowup, "DNF exceeds " + std::to_string(cap) + " conjunctions");
          }
        acc = std::move(next);
        if (acc.empty()) break;
      }
      return acc;
    }
  }
  return {};
}

void drop_subsumed(Dnf& d) {
  std::sort(d.begin(), d.end(), [](const Conj& a, const Conj& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  d.erase(std::unique(d.begin(), d.end()), d.end());
  if (d.size() > 4000) return;
  Dnf kept;
  for (auto& c : d) {
    bool subsumed = std::any_of(kept.begin(), kept.end(), [&](const Conj& k) {
      return std::includes(c.begin(), c.end(), k.begin(), k.end());
    });
    if (!subsumed) kept.push_back(std::move(c));
  }
  d = std::move(kept);
}

Formula rename(const Formula& f, const std::map<std::string, std::string>& names) {
  auto t = [&](const Term& x) {
    auto it = names.find(x.var);
    return it == names.end() ? x : Term{x.element, it->second};
  };
  switch (f->kind) {
    case FormulaKind::True:
    case FormulaKind::False:
      return f;
    case FormulaKind::Eq:
      return f_eq(t(f->lhs), t(f->rhs));
    case FormulaKind::Rel:
      return f_rel(t(f->lhs), t(f->rhs));
    case FormulaKind::Not:
      return f_not(rename(f->kids[0], names));
    case FormulaKind::And:
    case FormulaKind::Or: {
      std::vector<Formula> kids;
      for (const auto& k : f->kids) kids.push_back(rename(k, names));
      return f->kind == FormulaKind::And ? f_and(std::move(kids)) : f_or(std::move(kids));
    }
    default:
      throw Error(Errc::InvalidArgument, "rename expects a quantifier-free formula");
  }
}

// Eliminates one existential over a conjunction of literals that all mention y.
class Eliminator {
 public:
  Eliminator(Theory theory, GroupPtr g) : theory_(theory), g_(std::move(g)) {}

  std::vector<std::string> certificate;

  Formula exists(const std::string& y, const Formula& matrix, std::size_t cap) {
    if (!free_variables(matrix).count(y)) return matrix;
    Dnf d = to_dnf(matrix, *g_, cap);
    std::vector<Formula> out;
    std::size_t fresh_disjuncts = 0, substituted = 0;
    std::vector<std::string> used;
    for (const auto& c : d) {
      Conj cx, cy;
      for (const auto& l : c) (l.lhs.var == y || l.rhs.var == y ? cy : cx).push_back(l);
      std::vector<Formula> parts;
      for (const auto& l : cx) parts.push_back(literal_formula(l));
      if (!cy.empty()) {
        Step s = eliminate(y, cy);
        if (s.substituted)
          ++substituted;
        else
          ++fresh_disjuncts;
        if (!s.note.empty()) used.push_back(s.note);
        parts.push_back(s.result);
      }
      out.push_back(f_and(std::move(parts)));
    }
    std::string line = "E " + y + ": " + std::to_string(d.size()) + " disjuncts, " + std::to_string(substituted) +
                       " by substitution, " + std::to_string(fresh_disjuncts) + " by configurations";
    for (const auto& u : used) line += "; " + u;
    certificate.push_back(std::move(line));
    return simplify(f_or(std::move(out)), *g_);
  }

 private:
  struct Step {
    Formula result;
    bool substituted = false;
    std::string note;
  };

  Step eliminate(const std::string& y, const Conj& cy) {
    const FiniteGroup& g = *g_;
    for (const auto& l : cy) {
      if (l.kind != K::Eq) continue;
      if (l.lhs.var == y && l.rhs.var != y)
        return {substitute_all(y, cy, Term{g.inverse(l.lhs.element), l.rhs.var}), true, {}};
      if (l.rhs.var == y && l.lhs.var != y) return {substitute_all(y, cy, l.lhs), true, {}};
    }
    // Rename variables to slots so that the result can be cached.
    std::vector<std::string> vars;
    for (const auto& l : cy)
      for (const Term* t : {&l.lhs, &l.rhs})
        if (t->var != y && std::find(vars.begin(), vars.end(), t->var) == vars.end()) vars.push_back(t->var);
    std::sort(vars.begin(), vars.end());
    std::map<std::string, std::string> to_slot, from_slot;
    TermSet ts(g_, static_cast<int>(vars.size()), 1);
    for (std::size_t i = 0; i < vars.size(); ++i) {
      to_slot[vars[i]] = ts.var_name(static_cast<int>(i));
      from_slot[ts.var_name(static_cast<int>(i))] = vars[i];
    }
    to_slot[y] = ts.var_name(static_cast<int>(vars.size()));
    Conj mapped;
    for (auto l : cy) {
      l.lhs.var = to_slot[l.lhs.var];
      l.rhs.var = to_slot[l.rhs.var];
      canonical_literal(l, g);
      mapped.push_back(l);
    }
    tidy(mapped);
    std::string key;
    for (const auto& l : mapped)
      key += std::to_string(static_cast<int>(l.kind)) + ":" + std::to_string(l.lhs.element) + l.lhs.var + "," +
             std::to_string(l.rhs.element) + l.rhs.var + ";";
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      Cached c = theory_ == Theory::Empty ? fresh_empty(ts, mapped) : fresh_graph(ts, mapped);
      it = cache_.emplace(key, std::move(c)).first;
    }
    return {rename(it->second.formula, from_slot), false, it->second.note};
  }

  Formula substitute_all(const std::string& y, const Conj& cy, const Term& by) {
    std::vector<Formula> kids;
    for (const auto& l : cy) {
      Literal s = l;
      if (s.lhs.var == y) s.lhs = apply(*g_, s.lhs.element, by);
      if (s.rhs.var == y) s.rhs = apply(*g_, s.rhs.element, by);
      int c = canonical_literal(s, *g_);
      if (c == 0) return f_false();
      if (c == 1) continue;
      kids.push_back(literal_formula(s));
    }
    return simplify(f_and(std::move(kids)), *g_);
  }

  struct Cached {
    Formula formula;
    std::string note;
  };

  Cached fresh_empty(const TermSet& ts, const Conj& cy) {
    const FiniteGroup& g = *g_;
    const std::string y = ts.var_name(ts.n());
    std::vector<int> gens;
    for (const auto& l : cy)
      if (l.kind == K::Eq && l.lhs.var == y && l.rhs.var == y) gens.push_back(l.lhs.element);
    Subgroup h = generated_subgroup(g, gens);
    for (const auto& l : cy)
      if (l.kind == K::Neq && l.lhs.var == y && l.rhs.var == y && h.contains(l.lhs.element))
        return {f_false(), "stabilizer forced to contain " + g.name(l.lhs.element)};
    std::string note = "fresh witness with stabilizer {";
    for (std::size_t i = 0; i < h.members.size(); ++i) note += (i ? "," : "") + g.name(h.members[i]);
    return {f_true(), note + "}"};
  }

  static bool admits_extension(const PartialConfig& p) {
    bool found = false;
    try {
      for_each_extension(p, [&](const Configuration&) {
        found = true;
        return false;
      });
    } catch (const Error& e) {
      if (e.code() != Errc::ContradictoryBase) throw;
    }
    return found;
  }

  const std::vector<Configuration>& eq_patterns(int n) {
    auto it = patterns_.find(n);
    if (it != patterns_.end()) return it->second;
    TermSet z0(g_, n, 0);
    PartialConfig p(z0);
    for (int a = 0; a < z0.size(); ++a)
      for (int b = 0; b < z0.size(); ++b)
        if (a != b) p.restrict(a, b, PartialConfig::kEq | PartialConfig::kNR);
    return patterns_.emplace(n, enumerate_extensions(p)).first->second;
  }

  Cached fresh_graph(const TermSet& ts, const Conj& cy) {
    const FiniteGroup& g = *g_;
    const int n = ts.n();
    auto base = [&]() {
      PartialConfig p(ts);
      for (int a = 0; a < ts.z0_size(); ++a)
        for (int b = ts.z0_size(); b < ts.size(); ++b) p.restrict(a, b, PartialConfig::kR | PartialConfig::kNR);
      for (const auto& l : cy) p.add(l);
      return p;
    };
    if (n == 0) {
      bool ok = admits_extension(base());
      return {ok ? f_true() : f_false(), ok ? "fresh witness type exists" : "no fresh witness type"};
    }
    const auto& pats = eq_patterns(n);
    std::vector<char> good(pats.size(), 0);
    std::size_t n_good = 0;
    for (std::size_t i = 0; i < pats.size(); ++i) {
      PartialConfig p = base();
      p.pin_z0(pats[i]);
      if (admits_extension(p)) {
        good[i] = 1;
        ++n_good;
      }
    }
    std::string note = "fresh witness over " + std::to_string(n_good) + "/" + std::to_string(pats.size()) +
                       " EQ patterns [";
    bool first = true;
    for (std::size_t i = 0; i < pats.size(); ++i) {
      if (!good[i]) continue;
      if (!first) note += ",";
      first = false;
      for (Entry e : pats[i].upper_entries()) note += e == Entry::Eq ? 'E' : 'N';
    }
    note += "]";
    if (n_good == pats.size()) return {f_true(), note};

    std::vector<Formula> disjuncts{cubes(n, pats, good)};
    // A witness inside G.x can still exist when no fresh one does.
    const std::string y = ts.var_name(n);
    TermSet z0(g_, n, 0);
    for (int slot = 0; slot < n; ++slot)
      for (int k = 0; k < g.order(); ++k) {
        Formula d = substitute_all(y, cy, Term{k, ts.var_name(slot)});
        Dnf dd = to_dnf(d, g);
        if (dd.empty()) continue;
        PartialConfig p(z0);
        for (const auto& c : dd.front()) p.add(c);
        if (admits_extension(p)) disjuncts.push_back(d);
      }
    return {simplify(f_or(std::move(disjuncts)), g), note};
  }

  // Greedy cover of the good patterns by cubes over the literals
  // sigma_k(x_i) = x_j, i <= j.
  Formula cubes(int n, const std::vector<Configuration>& pats, const std::vector<char>& good) {
    const FiniteGroup& g = *g_;
    TermSet z0(g_, n, 0);
    struct Lit {
      int i, j, k;
    };
    std::vector<Lit> lits;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j)
        for (int k = 0; k < g.order(); ++k) {
          if (i == j && (k == g.identity() || g.inverse(k) < k)) continue;
          lits.push_back({i, j, k});
        }
    std::vector<std::vector<signed char>> val(pats.size(), std::vector<signed char>(lits.size()));
    for (std::size_t p = 0; p < pats.size(); ++p)
      for (std::size_t l = 0; l < lits.size(); ++l)
        val[p][l] = pats[p].at(z0.index(lits[l].i, lits[l].k), z0.index(lits[l].j, g.identity())) == Entry::Eq;
    auto matches = [&](const std::vector<signed char>& cube, std::size_t p) {
      for (std::size_t l = 0; l < lits.size(); ++l)
        if (cube[l] >= 0 && cube[l] != val[p][l]) return false;
      return true;
    };
    auto pure = [&](const std::vector<signed char>& cube) {
      for (std::size_t p = 0; p < pats.size(); ++p)
        if (!good[p] && matches(cube, p)) return false;
      return true;
    };
    std::vector<std::vector<signed char>> chosen;
    for (std::size_t p = 0; p < pats.size(); ++p) {
      if (!good[p]) continue;
      if (std::any_of(chosen.begin(), chosen.end(), [&](const auto& c) { return matches(c, p); })) continue;
      std::vector<signed char> cube = val[p];
      for (std::size_t l = 0; l < lits.size(); ++l) {
        signed char keep = cube[l];
        cube[l] = -1;
        if (!pure(cube)) cube[l] = keep;
      }
      chosen.push_back(std::move(cube));
    }
    std::vector<Formula> out;
    for (const auto& c : chosen) {
      std::vector<Formula> kids;
      for (std::size_t l = 0; l < lits.size(); ++l) {
        if (c[l] < 0) continue;
        Term a{lits[l].k, z0.var_name(lits[l].i)}, b{g.identity(), z0.var_name(lits[l].j)};
        kids.push_back(c[l] ? f_eq(a, b) : f_neq(a, b));
      }
      out.push_back(f_and(std::move(kids)));
    }
    return f_or(std::move(out));
  }

  Theory theory_;
  GroupPtr g_;
  std::map<std::string, Cached> cache_;
  std::map<int, std::vector<Configuration>> patterns_;
};

Formula qe_rec(const Formula& f, Eliminator& el, const FiniteGroup& g, std::size_t cap) {
  switch (f->kind) {
    case FormulaKind::True:
    case FormulaKind::False:
    case FormulaKind::Eq:
    case FormulaKind::Rel:
      return f;
    case FormulaKind::Not:
      return f_not(qe_rec(f->kids[0], el, g, cap));
    case FormulaKind::And:
    case FormulaKind::Or: {
      std::vector<Formula> kids;
      for (const auto& k : f->kids) kids.push_back(qe_rec(k, el, g, cap));
      return f->kind == FormulaKind::And ? f_and(std::move(kids)) : f_or(std::move(kids));
    }
    case FormulaKind::Implies:
      return f_implies(qe_rec(f->kids[0], el, g, cap), qe_rec(f->kids[1], el, g, cap));
    case FormulaKind::Exists:
      return el.exists(f->var, simplify(qe_rec(f->kids[0], el, g, cap), g), cap);
    case FormulaKind::Forall:
      return simplify(f_not(el.exists(f->var, simplify(f_not(qe_rec(f->kids[0], el, g, cap)), g), cap)), g);
  }
  return f;
}

void check_elements(const Formula& f, const FiniteGroup& g) {
  if (f->kind == FormulaKind::Eq || f->kind == FormulaKind::Rel) {
    if (!g.contains(f->lhs.element) || !g.contains(f->rhs.element))
      throw Error(Errc::UnknownGroupElement, "formula refers to an element outside the group");
  }
  for (const auto& k : f->kids) check_elements(k, g);
}

QEResult run_qe(Theory theory, const Formula& phi, const GroupPtr& g, const QEOptions& opts) {
  if (theory == Theory::Empty && mentions_relation(phi))
    throw Error(Errc::UnsupportedSignature, "the empty theory has no relation symbol");
  check_elements(phi, *g);
  QEResult r{phi, phi, {}};
  if (is_quantifier_free(phi)) return r;
  Eliminator el(theory, g);
  r.output = simplify(qe_rec(phi, el, *g, opts.dnf_cap), *g);
  r.certificate = std::move(el.certificate);
  return r;
}

std::string formula_key(const Formula& f) {
  std::string s = std::to_string(static_cast<int>(f->kind));
  if (f->kind == FormulaKind::Eq || f->kind == FormulaKind::Rel)
    return s + "(" + std::to_string(f->lhs.element) + f->lhs.var + "," + std::to_string(f->rhs.element) +
           f->rhs.var + ")";
  s += "[";
  for (const auto& k : f->kids) s += formula_key(k) + ";";
  return s + "]";
}

}  // namespace

int canonical_literal(Literal& lit, const FiniteGroup& g) {
  if (lit.lhs.var > lit.rhs.var) std::swap(lit.lhs, lit.rhs);
  // sigma_a(u) ~ sigma_b(v)  <=>  sigma_{b^-1 a}(u) ~ v
  int k = g.mul(g.inverse(lit.rhs.element), lit.lhs.element);
  if (lit.lhs.var == lit.rhs.var) {
    if (k == g.identity()) {
      if (lit.kind == K::Eq || lit.kind == K::NotRel) return 1;
      return 0;
    }
    k = std::min(k, g.inverse(k));
  }
  lit.lhs.element = k;
  lit.rhs.element = g.identity();
  return -1;
}

Dnf to_dnf(const Formula& qf, const FiniteGroup& g, std::size_t cap) {
  Dnf d = dnf_of(nnf(qf, false), g, cap);
  Dnf out;
  for (auto& c : d)
    if (tidy(c)) out.push_back(std::move(c));
  drop_subsumed(out);
  return out;
}

Formula literal_formula(const Literal& lit) {
  switch (lit.kind) {
    case K::Eq: return f_eq(lit.lhs, lit.rhs);
    case K::Neq: return f_neq(lit.lhs, lit.rhs);
    case K::Rel: return f_rel(lit.lhs, lit.rhs);
    case K::NotRel: return f_not(f_rel(lit.lhs, lit.rhs));
  }
  return f_true();
}

Formula simplify(const Formula& f, const FiniteGroup& g) {
  switch (f->kind) {
    case FormulaKind::True:
    case FormulaKind::False:
      return f;
    case FormulaKind::Eq:
    case FormulaKind::Rel: {
      Literal l{f->kind == FormulaKind::Eq ? K::Eq : K::Rel, f->lhs, f->rhs};
      int c = canonical_literal(l, g);
      if (c == 1) return f_true();
      if (c == 0) return f_false();
      return literal_formula(l);
    }
    case FormulaKind::Not: {
      Formula k = simplify(f->kids[0], g);
      if (k->kind == FormulaKind::True) return f_false();
      if (k->kind == FormulaKind::False) return f_true();
      if (k->kind == FormulaKind::Not) return k->kids[0];
      return f_not(k);
    }
    case FormulaKind::Implies:
      return simplify(f_or({f_not(f->kids[0]), f->kids[1]}), g);
    case FormulaKind::And:
    case FormulaKind::Or: {
      const bool is_and = f->kind == FormulaKind::And;
      const FormulaKind absorbing = is_and ? FormulaKind::False : FormulaKind::True;
      const FormulaKind neutral = is_and ? FormulaKind::True : FormulaKind::False;
      std::vector<Formula> flat;
      std::set<std::string> keys;
      std::vector<Formula> todo(f->kids.rbegin(), f->kids.rend());
      while (!todo.empty()) {
        Formula k = todo.back();
        todo.pop_back();
        k = simplify(k, g);
        if (k->kind == f->kind) {
          for (auto it = k->kids.rbegin(); it != k->kids.rend(); ++it) todo.push_back(*it);
          continue;
        }
        if (k->kind == absorbing) return k;
        if (k->kind == neutral) continue;
        std::string key = formula_key(k);
        std::string neg_key = k->kind == FormulaKind::Not ? formula_key(k->kids[0]) : formula_key(f_not(k));
        if (keys.count(neg_key)) return is_and ? f_false() : f_true();
        if (keys.insert(key).second) flat.push_back(k);
      }
      if (flat.empty()) return is_and ? f_true() : f_false();
      return is_and ? f_and(std::move(flat)) : f_or(std::move(flat));
    }
    case FormulaKind::Exists:
    case FormulaKind::Forall:
      return f->kind == FormulaKind::Exists ? f_exists(f->var, simplify(f->kids[0], g))
                                            : f_forall(f->var, simplify(f->kids[0], g));
  }
  return f;
}

QEResult qe_graph(const Formula& phi, const GroupPtr& g, const QEOptions& opts) {
  return run_qe(Theory::Graph, phi, g, opts);
}

QEResult qe_empty(const Formula& phi, const GroupPtr& g, const QEOptions& opts) {
  return run_qe(Theory::Empty, phi, g, opts);
}

QEResult quantifier_eliminate(Theory theory, const Formula& phi, const GroupPtr& g, const QEOptions& opts) {
  return run_qe(theory, phi, g, opts);
}

bool decide_sentence(Theory theory, const GroupPtr& g, const Formula& sentence) {
  if (!free_variables(sentence).empty()) throw Error(Errc::InvalidArgument, "not a sentence");
  Formula out = simplify(quantifier_eliminate(theory, sentence, g).output, *g);
  if (out->kind == FormulaKind::True) return true;
  if (out->kind == FormulaKind::False) return false;
  throw Error(Errc::InvalidArgument, "sentence did not reduce to a truth value");
}

namespace {

Formula relativize(const Formula& f, const FiniteGroup& g, const std::vector<int>& gens) {
  auto invariant = [&](const std::string& v) {
    std::vector<Formula> kids;
    for (int s : gens) kids.push_back(f_eq(Term{s, v}, Term{g.identity(), v}));
    return kids;
  };
  switch (f->kind) {
    case FormulaKind::True:
    case FormulaKind::False:
      return f;
    case FormulaKind::Eq:
    case FormulaKind::Rel: {
      std::vector<Formula> kids{f};
      std::vector<std::string> vars{f->lhs.var};
      if (f->rhs.var != f->lhs.var) vars.push_back(f->rhs.var);
      for (const auto& v : vars) {
        auto inv = invariant(v);
        kids.insert(kids.end(), inv.begin(), inv.end());
      }
      return f_and(std::move(kids));
    }
    case FormulaKind::Not:
      return f_not(relativize(f->kids[0], g, gens));
    case FormulaKind::And:
    case FormulaKind::Or: {
      std::vector<Formula> kids;
      for (const auto& k : f->kids) kids.push_back(relativize(k, g, gens));
      return f->kind == FormulaKind::And ? f_and(std::move(kids)) : f_or(std::move(kids));
    }
    case FormulaKind::Implies:
      return f_implies(relativize(f->kids[0], g, gens), relativize(f->kids[1], g, gens));
    case FormulaKind::Exists: {
      auto kids = invariant(f->var);
      kids.push_back(relativize(f->kids[0], g, gens));
      return f_exists(f->var, f_and(std::move(kids)));
    }
    case FormulaKind::Forall:
      return f_forall(f->var, f_implies(f_and(invariant(f->var)), relativize(f->kids[0], g, gens)));
  }
  return f;
}

bool sigma_free(const Formula& f, const FiniteGroup& g) {
  if ((f->kind == FormulaKind::Eq || f->kind == FormulaKind::Rel) &&
      (f->lhs.element != g.identity() || f->rhs.element != g.identity()))
    return false;
  return std::all_of(f->kids.begin(), f->kids.end(), [&](const Formula& k) { return sigma_free(k, g); });
}

}  // namespace

Formula relativize_to_invariants(const Formula& phi, const FiniteGroup& g, const std::vector<int>& generators) {
  for (int s : generators)
    if (!g.contains(s)) throw Error(Errc::UnknownGroupElement, "generator outside the group");
  if (generated_subgroup(g, generators).size() != static_cast<std::size_t>(g.order()))
    throw Error(Errc::NotGenerating, "the given elements do not generate the group");
  if (!sigma_free(phi, g)) throw Error(Errc::InvalidArgument, "formula must not apply group elements");
  return relativize(phi, g, generators);
}

}  // namespace gact
