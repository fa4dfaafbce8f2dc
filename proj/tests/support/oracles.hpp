#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "gact/boolring.hpp"
#include "gact/config.hpp"
#include "gact/galois.hpp"
#include "gact/group.hpp"
#include "gact/structure.hpp"

// Slow, direct re-implementations used to cross-check the library.
namespace gact::oracle {

/// Subsets of G closed under the product, by scanning all 2^|G| subsets.
std::vector<std::vector<int>> subgroup_scan(const FiniteGroup& g);

/// Whether some proper subgroup of the source already maps onto the target.
bool proper_subgroup_surjects(const GroupHom& pi);

/// Intersection of the maximal members of `subgroup_scan(g)`.
std::vector<int> frattini(const FiniteGroup& g);

/// All consistent configurations on `terms`: G-invariant partitions of Z with
/// every G-invariant, loop-free edge set on the classes.
std::vector<Configuration> configurations(const TermSet& terms);

/// Relation-preserving bijections of C fixing A, by running through all |C|! maps.
std::vector<std::vector<int>> automorphisms(const FiniteExtension& ext);

/// f lies in the ideal iff at each atom its support is inside the union of
/// the generators' supports.
bool ideal_member(const BooleanRing& ring, const TransformalIdeal& ideal, const BoolPolynomial& f);

/// f evaluated at sigma-bar(r) with the ring written out as explicit sets.
RingElem orbit_value(const BooleanRing& ring, const BoolPolynomial& f, const std::vector<RingElem>& r);

/// First r in R^n on V(I) but off V(J), scanning points directly.
std::optional<std::vector<RingElem>> diamond_scan(const BooleanRing& ring, const TransformalIdeal& i,
                                                  const TransformalIdeal& j);

/// Checks that `pairs` is a bijection from dom (in m1) onto cod (in m2) that
/// preserves and reflects R and equality and commutes with every sigma_g.
bool is_equivariant_isomorphism(const GStructure& m1, const ElementSet& dom, const GStructure& m2,
                                const ElementSet& cod, const std::vector<std::pair<int, int>>& pairs);

}  // namespace gact::oracle
