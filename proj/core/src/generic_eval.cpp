#include "gact/generic_eval.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "gact/error.hpp"
#include "gact/qe.hpp"

namespace gact {

namespace {

int slot_of(const std::vector<std::string>& names, const std::string& v) {
  for (std::size_t i = names.size(); i-- > 0;)
    if (names[i] == v) return static_cast<int>(i);
  throw Error(Errc::UnassignedVariable, "variable " + v + " has no value");
}

Configuration restrict_slots(const Configuration& q, const std::vector<int>& slots) {
  const TermSet& ts = q.terms();
  const int ng = ts.group().order();
  TermSet out(ts.group_ptr(), static_cast<int>(slots.size()), 0);
  std::vector<Entry> e(static_cast<std::size_t>(out.size()) * static_cast<std::size_t>(out.size()));
  for (int a = 0; a < out.size(); ++a)
    for (int b = 0; b < out.size(); ++b)
      e[static_cast<std::size_t>(a) * static_cast<std::size_t>(out.size()) + static_cast<std::size_t>(b)] =
          q.at(ts.index(slots[static_cast<std::size_t>(a / ng)], a % ng),
               ts.index(slots[static_cast<std::size_t>(b / ng)], b % ng));
  return Configuration(out, std::move(e));
}

// Appends a slot holding sigma_k of slot s.
Configuration extend_by_term(const Configuration& q, int s, int k) {
  const TermSet& ts = q.terms();
  const FiniteGroup& g = ts.group();
  const int ng = g.order();
  TermSet out(ts.group_ptr(), ts.n() + 1, 0);
  auto src = [&](int t) { return t < ts.size() ? t : ts.index(s, g.mul(t % ng, k)); };
  std::vector<Entry> e(static_cast<std::size_t>(out.size()) * static_cast<std::size_t>(out.size()));
  for (int a = 0; a < out.size(); ++a)
    for (int b = 0; b < out.size(); ++b)
      e[static_cast<std::size_t>(a) * static_cast<std::size_t>(out.size()) + static_cast<std::size_t>(b)] =
          q.at(src(a), src(b));
  return Configuration(out, std::move(e));
}

}  // namespace

GenericEvaluator::GenericEvaluator(Theory theory, GroupPtr group, std::size_t node_cap)
    : theory_(theory), group_(std::move(group)), node_cap_(node_cap) {}

bool GenericEvaluator::eval(const GStructure& m, const Formula& phi, const Assignment& a) {
  if (m.group() != *group_) throw Error(Errc::SignatureMismatch, "structure is over a different group");
  std::vector<std::string> names;
  std::vector<int> xs;
  for (const auto& v : free_variables(phi)) {
    auto it = a.find(v);
    if (it == a.end()) throw Error(Errc::UnassignedVariable, "variable " + v + " has no value");
    names.push_back(v);
    xs.push_back(it->second);
  }
  return eval(configuration_of(m, xs, {}), names, phi);
}

bool GenericEvaluator::eval(const Configuration& q, const std::vector<std::string>& names, const Formula& phi) {
  if (theory_ == Theory::Empty && mentions_relation(phi))
    throw Error(Errc::SignatureMismatch, "formula uses R but the theory has no relation");
  if (static_cast<int>(names.size()) != q.terms().n() || q.terms().n_prime() != 0)
    throw Error(Errc::InvalidArgument, "one name per slot expected");
  if (seen_.empty() || seen_.back() != phi) seen_.push_back(phi);
  return rec(phi, names, q);
}

bool GenericEvaluator::rec(const Formula& f, const std::vector<std::string>& names, const Configuration& q) {
  if (++nodes_ > node_cap_) throw Error(Errc::BudgetExceeded, "generic evaluation exceeded its node budget");
  const TermSet& ts = q.terms();
  auto term = [&](const Term& t) { return ts.index(slot_of(names, t.var), t.element); };
  switch (f->kind) {
    case FormulaKind::True:
      return true;
    case FormulaKind::False:
      return false;
    case FormulaKind::Eq:
      return q.at(term(f->lhs), term(f->rhs)) == Entry::Eq;
    case FormulaKind::Rel:
      return q.at(term(f->lhs), term(f->rhs)) == Entry::R;
    case FormulaKind::Not:
      return !rec(f->kids[0], names, q);
    case FormulaKind::And:
      for (const auto& k : f->kids)
        if (!rec(k, names, q)) return false;
      return true;
    case FormulaKind::Or:
      for (const auto& k : f->kids)
        if (rec(k, names, q)) return true;
      return false;
    case FormulaKind::Implies:
      return !rec(f->kids[0], names, q) || rec(f->kids[1], names, q);
    case FormulaKind::Exists:
    case FormulaKind::Forall:
      return quantifier(f, names, q);
  }
  return false;
}

bool GenericEvaluator::quantifier(const Formula& f, const std::vector<std::string>& names, const Configuration& q) {
  const bool want = f->kind == FormulaKind::Exists;
  const std::string& y = f->var;
  const Formula& body = f->kids[0];
  auto fv = free_variables(body);

  // Keep only the slots the body still reads.
  std::vector<int> slots;
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == y || !fv.count(names[i])) continue;
    if (slot_of(names, names[i]) != static_cast<int>(i)) continue;
    slots.push_back(static_cast<int>(i));
    kept.push_back(names[i]);
  }
  Configuration qr = restrict_slots(q, slots);
  if (!fv.count(y)) return rec(body, kept, qr);

  std::string key = std::to_string(reinterpret_cast<std::uintptr_t>(f.get())) + "|";
  for (const auto& n : kept) key += n + ",";
  key += "|";
  for (Entry e : qr.upper_entries()) key += static_cast<char>('0' + static_cast<int>(e));
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  std::vector<std::string> ext = kept;
  ext.push_back(y);
  bool found = false;

  // y is one of the terms already present.
  const FiniteGroup& g = *group_;
  for (int s = 0; s < static_cast<int>(kept.size()) && !found; ++s)
    for (int k = 0; k < g.order() && !found; ++k)
      if (rec(body, ext, extend_by_term(qr, s, k)) == want) found = true;

  // y is a new element.
  if (!found) {
    TermSet ts(group_, static_cast<int>(kept.size()), 1);
    PartialConfig base(ts);
    base.pin_z0(qr);
    const std::uint8_t fresh = theory_ == Theory::Empty ? PartialConfig::kNR : PartialConfig::kR | PartialConfig::kNR;
    for (int a = 0; a < ts.z0_size(); ++a)
      for (int b = ts.z0_size(); b < ts.size(); ++b) base.restrict(a, b, fresh);
    if (theory_ == Theory::Empty)
      for (int a = ts.z0_size(); a < ts.size(); ++a)
        for (int b = ts.z0_size(); b < ts.size(); ++b)
          if (a != b) base.restrict(a, b, PartialConfig::kEq | PartialConfig::kNR);
    TermSet flat(group_, static_cast<int>(ext.size()), 0);

    if (is_quantifier_free(body)) {
      // Search directly for a completion satisfying (or refuting) the body.
      std::map<std::string, std::string> to_slot;
      for (std::size_t i = 0; i < kept.size(); ++i) to_slot[kept[i]] = ts.var_name(static_cast<int>(i));
      to_slot[y] = ts.var_name(ts.n());
      Dnf d = to_dnf(want ? body : f_not(body), g);
      for (const auto& conj : d) {
        PartialConfig p = base;
        for (auto lit : conj) {
          lit.lhs.var = to_slot.at(lit.lhs.var);
          lit.rhs.var = to_slot.at(lit.rhs.var);
          p.add(lit);
        }
        try {
          for_each_extension(p, [&](const Configuration&) {
            ++nodes_;
            found = true;
            return false;
          });
        } catch (const Error& e) {
          if (e.code() != Errc::ContradictoryBase) throw;
        }
        if (found) break;
      }
    } else {
      try {
        for_each_extension(base, [&](const Configuration& c) {
          if (rec(body, ext, Configuration(flat, c.entries())) == want) found = true;
          return !found;
        });
      } catch (const Error& e) {
        if (e.code() != Errc::ContradictoryBase) throw;
      }
    }
  }
  bool result = want ? found : !found;
  memo_.emplace(std::move(key), result);
  return result;
}

}  // namespace gact
