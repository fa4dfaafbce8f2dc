#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gact/structure.hpp"

namespace gact {

/// A finite stand-in for an extension A within C inside an ambient structure.
struct FiniteExtension {
  GStructure ambient;
  ElementSet base;
  ElementSet whole;
};

/// Validates base within whole within the universe.
void validate_extension(const FiniteExtension& ext);

/// A permutation group on `domain`; permutations act on positions 0..n-1 of
/// the domain. Elements are sorted lexicographically (identity first).
struct PermGroup {
  ElementSet domain;
  std::vector<std::vector<int>> generators;
  std::vector<std::vector<int>> elements;

  std::size_t order() const noexcept { return elements.size(); }
  bool contains(const std::vector<int>& p) const;
  bool is_subgroup_of(const PermGroup& other) const;
};

constexpr std::size_t kDefaultGaloisBound = 12;
constexpr std::size_t kPermGroupCap = 50'000;

/// Closure of the generators; throws Errc::BoundExceeded past `cap` elements.
PermGroup generate_perm_group(const ElementSet& domain, const std::vector<std::vector<int>>& gens,
                              std::size_t cap = kPermGroupCap);

/// Greedy generators: scanning elements in lexicographic order, keep each one
/// not already generated by the earlier picks.
std::vector<std::vector<int>> lex_generators(const std::vector<std::vector<int>>& sorted_elements);

/// All subgroups, ordered by size then member list. Throws
/// Errc::BoundExceeded when there are more than `cap`.
std::vector<PermGroup> perm_subgroups(const PermGroup& g, std::size_t cap = 20'000);

/// Relation-preserving bijections of C fixing A pointwise (the action is
/// ignored unless `respect_action`).
PermGroup aut_group(const FiniteExtension& ext, std::size_t bound = kDefaultGaloisBound, bool respect_action = false);

/// Pointwise stabilizer of B in Aut(C/A).
PermGroup galois_alpha(const FiniteExtension& ext, const ElementSet& b, std::size_t bound = kDefaultGaloisBound);
/// Fixed points of H in C. Throws Errc::NotSubgroup unless H is a subgroup of Aut(C/A).
ElementSet galois_beta(const FiniteExtension& ext, const PermGroup& h, std::size_t bound = kDefaultGaloisBound);

struct GaloisReport {
  std::size_t intermediates = 0;
  std::size_t subgroups = 0;
  std::size_t aut_order = 0;
  /// alpha beta alpha = alpha on every intermediate set.
  bool alpha_law = true;
  /// beta alpha beta = beta on every subgroup.
  bool beta_law = true;
  /// alpha beta = id on subgroups and beta alpha = id on intermediates.
  bool full_correspondence = true;
  std::vector<std::string> law_failures;
  std::vector<std::string> correspondence_failures;
};

GaloisReport galois_connection_check(const FiniteExtension& ext, std::size_t bound = kDefaultGaloisBound);

/// Compares the orbit of b under Aut(ambient / invariants of N) with G.b.
/// `n` is a G-closed subset of the ambient universe containing b.
bool n_galois_orbit_check(const GStructure& ambient, const ElementSet& n, int b, std::size_t bound = 64);
/// Elements of n where the two orbits differ.
std::vector<int> n_galois_orbit_failures(const GStructure& ambient, const ElementSet& n, std::size_t bound = 64);

/// Whether the restrictions of the sigma_g generate Aut(F / base); base must
/// be the invariants of F.
bool generated_by_action_check(const GStructure& f, const ElementSet& base, std::size_t bound = kDefaultGaloisBound);

std::string perm_to_string(const std::vector<int>& p);

}  // namespace gact
