#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gact/group.hpp"
#include "gact/term.hpp"

namespace gact {

enum class Signature { Empty, Graph, Order };

std::string_view signature_name(Signature s) noexcept;
Signature parse_signature(std::string_view s);

/// Sorted, duplicate-free list of element indices.
using ElementSet = std::vector<int>;

ElementSet make_set(std::vector<int> xs);
ElementSet set_union(const ElementSet& a, const ElementSet& b);
ElementSet set_intersection(const ElementSet& a, const ElementSet& b);
ElementSet set_difference(const ElementSet& a, const ElementSet& b);
bool is_subset(const ElementSet& a, const ElementSet& b);

/// A finite structure in one of the three supported signatures with a group
/// acting by automorphisms. Every invariant is validated on construction.
class GStructure {
 public:
  /// `pairs` lists the relation: for graphs each edge once or in both
  /// directions, for orders every pair (a, b) with a < b. `action[g]` is the
  /// permutation sigma_g of the universe.
  GStructure(Signature sig, GroupPtr group, std::vector<std::string> universe,
             std::vector<std::pair<int, int>> pairs, std::vector<std::vector<int>> action);

  /// Structure with the trivial action of `group`.
  static GStructure with_trivial_action(Signature sig, GroupPtr group, std::vector<std::string> universe,
                                        std::vector<std::pair<int, int>> pairs);
  static GStructure empty(Signature sig, GroupPtr group);

  Signature signature() const noexcept { return sig_; }
  const FiniteGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  int size() const noexcept { return static_cast<int>(labels_.size()); }

  const std::string& label(int x) const { return labels_[static_cast<std::size_t>(x)]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<int> find(std::string_view label) const;

  /// R(a, b) for graphs, a < b for orders, always false for the empty signature.
  bool related(int a, int b) const;
  /// Graph neighbours of x, sorted.
  const std::vector<int>& neighbors(int x) const { return adj_[static_cast<std::size_t>(x)]; }
  /// Position of x in the order (orders only).
  int rank(int x) const { return rank_[static_cast<std::size_t>(x)]; }

  int act(int g, int x) const { return perms_[static_cast<std::size_t>(g)][static_cast<std::size_t>(x)]; }
  const std::vector<int>& perm(int g) const { return perms_[static_cast<std::size_t>(g)]; }
  const std::vector<std::vector<int>>& action() const noexcept { return perms_; }

  /// Ordered relation pairs, sorted; graphs list both directions.
  std::vector<std::pair<int, int>> relation_pairs() const;
  std::size_t edge_count() const;

  bool contains(int x) const noexcept { return x >= 0 && x < size(); }

  friend bool operator==(const GStructure& a, const GStructure& b);

 private:
  friend class GStructureBuilder;
  GStructure() = default;
  void validate();

  Signature sig_ = Signature::Empty;
  GroupPtr group_;
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> rank_;
  std::vector<std::vector<int>> perms_;
};

/// Mutable working copy used to grow structures; `build` re-validates.
class GStructureBuilder {
 public:
  GStructureBuilder(Signature sig, GroupPtr group);
  explicit GStructureBuilder(const GStructure& m);

  Signature signature() const noexcept { return s_.sig_; }
  const FiniteGroup& group() const noexcept { return *s_.group_; }
  int size() const noexcept { return s_.size(); }
  bool related(int a, int b) const;
  const std::vector<int>& neighbors(int x) const { return s_.adj_[static_cast<std::size_t>(x)]; }
  int act(int g, int x) const { return s_.act(g, x); }

  /// Appends elements whose action images are all new elements of the same
  /// batch: `orbit_perm[g][i]` is the batch-local image of the i-th new element.
  int add_orbit_block(const std::vector<std::string>& labels, const std::vector<std::vector<int>>& orbit_perm);
  void add_edge(int a, int b);

  GStructure build() const;

 private:
  GStructure s_;
};

GStructure disjoint_union(const GStructure& a, const GStructure& b);
/// Induced substructure on a G-closed subset, keeping the action.
GStructure restrict_to(const GStructure& m, const ElementSet& subset);
/// Induced substructure on any subset, with the trivial group.
GStructure plain_substructure(const GStructure& m, const ElementSet& subset);

/// G.A; throws Errc::UnknownElement for indices outside the universe.
ElementSet orbit(const GStructure& m, std::span<const int> a);
ElementSet invariants(const GStructure& m);
/// Stabilizer {g : sigma_g(x) = x}.
Subgroup stabilizer(const GStructure& m, int x);
/// Orbits as sorted sets ordered by smallest member.
std::vector<ElementSet> orbits(const GStructure& m);

/// All (in)equality and (non)relation facts between the terms sigma_g(x_i),
/// for every ordered pair of terms. Variables are named x0, x1, ...
std::vector<Literal> atomic_diagram(const GStructure& m, std::span<const int> tuple);

/// The map sigma_g(a_i) -> sigma_g(b_i) between G.a and G.b when it is a
/// well-defined, injective, relation-preserving and reflecting map; pairs are
/// sorted by source.
std::optional<std::vector<std::pair<int, int>>> forced_equivariant_map(const GStructure& m, std::span<const int> a,
                                                                       const GStructure& n, std::span<const int> b);

struct ExtensionPair {
  GStructure small;
  GStructure big;
  std::vector<int> embedding;
};

/// Throws Errc::InvalidArgument unless the embedding is injective,
/// relation-preserving and reflecting, and equivariant.
void validate_extension(const ExtensionPair& pair);
ExtensionPair identity_extension(const GStructure& m);

struct EcResult {
  bool closed = true;
  /// Description of a quantifier-free type over the parameters, realized in
  /// the big structure but not in the small one.
  std::string witness;
  std::vector<int> params;
  std::size_t nodes = 0;
};

/// Exhaustive over witness tuples of length <= var_bound and parameter sets of
/// size <= param_bound (negative means all of the small structure).
EcResult is_existentially_closed(const ExtensionPair& pair, int var_bound, int param_bound = -1,
                                 std::size_t node_cap = 5'000'000);

/// dcl/acl provider for a fixed ambient.
class ClosureOracle {
 public:
  virtual ~ClosureOracle() = default;
  virtual ElementSet dcl(const ElementSet& a) const = 0;
  virtual ElementSet acl(const ElementSet& a) const = 0;
};

bool is_regular_extension(const ElementSet& e, const ElementSet& a, const ClosureOracle& closure);
bool is_normal_extension(const ElementSet& a, const ElementSet& c, const GStructure& ambient);

/// True iff every sigma_g is the identity (orders only).
bool order_rigidity_check(const GStructure& m);
/// Scans every permutation of chains of length 1..max_length whose order is at
/// most max_period and counts those that preserve the order without being the
/// identity. Also reports how many permutations passed the period filter.
struct RigidityScan {
  std::size_t permutations = 0;
  std::size_t periodic = 0;
  std::size_t counterexamples = 0;
};
RigidityScan scan_periodic_order_automorphisms(int max_length, int max_period);

}  // namespace gact
