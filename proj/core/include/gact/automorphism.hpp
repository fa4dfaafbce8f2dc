#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "gact/structure.hpp"

namespace gact {

struct AutSearchOptions {
  /// Points that must be fixed.
  ElementSet fixed;
  /// Forced images (x, f(x)).
  std::vector<std::pair<int, int>> prescribed;
  /// Restrict to maps commuting with every sigma_g.
  bool respect_action = false;
  /// Search nodes before Errc::BudgetExceeded is thrown.
  std::size_t node_cap = 2'000'000;
};

/// Calls `visit` for each automorphism of the relational reduct satisfying
/// the options, in lexicographic order of the image vector. Returning false
/// from `visit` stops the search. Returns the number of search nodes used.
std::size_t for_each_automorphism(const GStructure& m, const AutSearchOptions& opts,
                                  const std::function<bool(const std::vector<int>&)>& visit);

std::optional<std::vector<int>> find_automorphism(const GStructure& m, const AutSearchOptions& opts);

std::vector<std::vector<int>> all_automorphisms(const GStructure& m, const AutSearchOptions& opts,
                                                std::size_t limit = 100'000);

/// An isomorphism a -> b (same signature and group size) commuting with the
/// actions when `equivariant` is set, extending the given partial map.
std::optional<std::vector<int>> find_isomorphism(const GStructure& a, const GStructure& b, bool equivariant,
                                                 const std::vector<std::pair<int, int>>& prescribed = {},
                                                 std::size_t node_cap = 2'000'000);

}  // namespace gact
