#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gact/generic.hpp"
#include "gact/random.hpp"
#include "gact/structure.hpp"

namespace gact {

using IndepRelation =
    std::function<bool(const GStructure& m, const ElementSet& a, const ElementSet& e, const ElementSet& b)>;

/// A independent from B over E: G.A n G.B is contained in G.E.
bool indep(const GStructure& m, const ElementSet& a, const ElementSet& e, const ElementSet& b);

/// The same test without orbit closures (A n B within E). Kept as a
/// deliberately wrong relation for checking that the axiom harness bites.
bool indep_without_closure(const GStructure& m, const ElementSet& a, const ElementSet& e, const ElementSet& b);

struct AxiomOutcome {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  /// The first few failing queries.
  std::vector<std::string> examples;
};

struct AxiomReport {
  Theory theory = Theory::Graph;
  std::string group;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  /// invariance, local_character, finite_character, symmetry, transitivity,
  /// existence, then the closure law.
  std::vector<AxiomOutcome> axioms;

  const AxiomOutcome& axiom(std::string_view name) const;
  /// Failures over the six axioms, not counting the closure law.
  std::size_t axiom_failures() const;
};

struct AxiomCheckOptions {
  IndepRelation relation = indep;
  std::size_t examples_kept = 3;
  std::size_t node_cap = 200'000;
};

/// Runs `trials` sampled queries; trial t draws everything from
/// child_seed(seed, t), so reports are reproducible.
AxiomReport check_axioms(Theory theory, const GroupPtr& group, std::size_t trials, std::uint64_t seed,
                         const AxiomCheckOptions& opts = {});

/// A random G-structure: a few orbits G/H with random H, joined by random
/// orbits of edges in the graph case.
GStructure random_g_structure(Theory theory, const GroupPtr& group, Rng& rng, int max_orbits = 4);

/// Equality of the types of t1 over base1 (in m1) and t2 over base2 (in m2),
/// with base1[i] matched to base2[i]: an equivariant isomorphism between the
/// orbit closures extending base1 -> base2 and t1 -> t2. Returns it as pairs.
std::optional<std::vector<std::pair<int, int>>> same_type_over(const GStructure& m1, const std::vector<int>& base1,
                                                              const std::vector<int>& t1, const GStructure& m2,
                                                              const std::vector<int>& base2,
                                                              const std::vector<int>& t2);

struct IndependenceTheoremResult {
  GStructure amalgam;
  /// Positions of the model and the tuples inside the amalgam.
  ElementSet model;
  std::vector<int> a, b, c;
  /// Equivariant isomorphisms G.(M a c) -> G.(M a c1) and G.(M b c) -> G.(M b c2).
  std::vector<std::pair<int, int>> iso_a, iso_b;
  bool type_a = false;
  bool type_b = false;
  bool c_independent = false;

  bool ok() const noexcept { return type_a && type_b && c_independent; }
};

/// Amalgamates tp(c1/Ma) and tp(c2/Mb) into one c independent from ab over
/// M. All tuples live in `ambient`; `model` is G-closed. Throws
/// Errc::HypothesisViolated naming the failed hypothesis.
IndependenceTheoremResult independence_theorem_check(const GStructure& ambient, const ElementSet& model,
                                                     const std::vector<int>& a, const std::vector<int>& b,
                                                     const std::vector<int>& c1, const std::vector<int>& c2);

}  // namespace gact
