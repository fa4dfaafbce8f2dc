#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "gact/group.hpp"
#include "gact/structure.hpp"
#include "gact/term.hpp"

namespace gact {

enum class FormulaKind { True, False, Eq, Rel, Not, And, Or, Implies, Exists, Forall };

struct FormulaNode;
using Formula = std::shared_ptr<const FormulaNode>;

struct FormulaNode {
  FormulaKind kind = FormulaKind::True;
  Term lhs;
  Term rhs;
  /// Relation symbol of a Rel atom; always "R".
  std::string symbol;
  /// Bound variable of a quantifier.
  std::string var;
  std::vector<Formula> kids;
};

Formula f_true();
Formula f_false();
Formula f_eq(Term a, Term b);
Formula f_neq(Term a, Term b);
Formula f_rel(Term a, Term b);
Formula f_not(Formula a);
Formula f_and(std::vector<Formula> kids);
Formula f_or(std::vector<Formula> kids);
Formula f_implies(Formula a, Formula b);
Formula f_exists(std::string var, Formula body);
Formula f_forall(std::string var, Formula body);

/// sigma_g applied to a term: sigma_g(sigma_h(x)) = sigma_{g*h}(x).
Term apply(const FiniteGroup& g, int element, const Term& t);

bool formula_equal(const Formula& a, const Formula& b);
std::set<std::string> free_variables(const Formula& f);
int quantifier_depth(const Formula& f);
bool is_quantifier_free(const Formula& f);
bool mentions_relation(const Formula& f);
std::size_t formula_size(const Formula& f);

/// Renders in the parser's syntax; identity applications are omitted.
std::string to_string(const Formula& f, const FiniteGroup& g);
std::string to_string(const Term& t, const FiniteGroup& g);

/// Parses the formula grammar. With `free_vars` given, any other free
/// variable raises Errc::UnboundVariable.
Formula parse(std::string_view text, const FiniteGroup& g,
              const std::optional<std::vector<std::string>>& free_vars = std::nullopt);

using Assignment = std::map<std::string, int>;

/// Tarski semantics in a finite structure; R is read as the structure's
/// relation (the order for orders).
bool eval(const GStructure& m, const Formula& f, const Assignment& a);

/// Replaces free occurrences of `var` by `by` (sigma_g(var) becomes
/// sigma_g(by)). `by.var` must not be captured by a quantifier in f.
Formula substitute(const Formula& f, const std::string& var, const Term& by, const FiniteGroup& g);

}  // namespace gact
