#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gact/formula.hpp"
#include "gact/generic.hpp"

namespace gact {

struct QEResult {
  Formula input;
  Formula output;
  /// One line per eliminated quantifier.
  std::vector<std::string> certificate;
};

struct QEOptions {
  /// Largest DNF (number of literal conjunctions) tolerated per matrix.
  std::size_t dnf_cap = 100'000;
};

using Dnf = std::vector<std::vector<Literal>>;

/// Canonical literal form: lhs carries the group element, lhs var <= rhs var,
/// and for same-variable literals the element is the smaller of k, k^-1.
/// Relations are treated as symmetric. Returns 1 / 0 for literals that are
/// valid / unsatisfiable outright, -1 otherwise.
int canonical_literal(Literal& lit, const FiniteGroup& g);

/// DNF of a quantifier-free formula with canonical, deduplicated literal
/// sets; syntactically contradictory conjunctions are dropped.
Dnf to_dnf(const Formula& qf, const FiniteGroup& g, std::size_t cap = 100'000);

Formula literal_formula(const Literal& lit);

/// Constant folding, flattening, canonical literals and duplicate removal.
Formula simplify(const Formula& qf, const FiniteGroup& g);

QEResult qe_graph(const Formula& phi, const GroupPtr& g, const QEOptions& opts = {});
QEResult qe_empty(const Formula& phi, const GroupPtr& g, const QEOptions& opts = {});
QEResult quantifier_eliminate(Theory theory, const Formula& phi, const GroupPtr& g, const QEOptions& opts = {});

bool decide_sentence(Theory theory, const GroupPtr& g, const Formula& sentence);

/// phi^G: evaluating it in M at invariant points agrees with evaluating phi in
/// the substructure of invariants. Throws Errc::NotGenerating.
Formula relativize_to_invariants(const Formula& phi, const FiniteGroup& g, const std::vector<int>& generators);

}  // namespace gact
