#pragma once

#include <compare>
#include <string>

namespace gact {

/// sigma_element(var). Nested applications are folded into a single element,
/// so a term always carries exactly one group element.
struct Term {
  int element = 0;
  std::string var;

  friend bool operator==(const Term&, const Term&) = default;
  friend std::strong_ordering operator<=>(const Term& a, const Term& b) {
    if (auto c = a.var <=> b.var; c != 0) return c;
    return a.element <=> b.element;
  }
};

/// A ground literal between two terms.
struct Literal {
  enum class Kind { Eq, Neq, Rel, NotRel };
  Kind kind = Kind::Eq;
  Term lhs;
  Term rhs;

  friend bool operator==(const Literal&, const Literal&) = default;
  friend std::strong_ordering operator<=>(const Literal& a, const Literal& b) {
    if (auto c = static_cast<int>(a.kind) <=> static_cast<int>(b.kind); c != 0) return c;
    if (auto c = a.lhs <=> b.lhs; c != 0) return c;
    return a.rhs <=> b.rhs;
  }
};

}  // namespace gact
