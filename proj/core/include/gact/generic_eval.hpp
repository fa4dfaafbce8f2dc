#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "gact/config.hpp"
#include "gact/formula.hpp"
#include "gact/generic.hpp"

namespace gact {

/// Evaluates formulas in the generic model of a theory without building it.
/// The truth of a formula at a tuple depends only on the tuple's
/// configuration, and every consistent configuration over a tuple is
/// realized, so a quantifier ranges over the ways the new element can sit
/// relative to the variables the body still mentions.
class GenericEvaluator {
 public:
  GenericEvaluator(Theory theory, GroupPtr group, std::size_t node_cap = 50'000'000);

  /// Truth at the tuple assigned in m (m must embed in the generic model).
  bool eval(const GStructure& m, const Formula& phi, const Assignment& a);
  /// Truth at a tuple with configuration q; names[i] is the variable of slot i.
  bool eval(const Configuration& q, const std::vector<std::string>& names, const Formula& phi);

  std::size_t nodes() const noexcept { return nodes_; }

 private:
  bool rec(const Formula& f, const std::vector<std::string>& names, const Configuration& q);
  bool quantifier(const Formula& f, const std::vector<std::string>& names, const Configuration& q);

  Theory theory_;
  GroupPtr group_;
  std::size_t node_cap_;
  std::size_t nodes_ = 0;
  std::unordered_map<std::string, bool> memo_;
  // Memo keys use node addresses, so evaluated formulas are kept alive.
  std::vector<Formula> seen_;
};

}  // namespace gact
