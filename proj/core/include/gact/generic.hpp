#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gact/config.hpp"
#include "gact/structure.hpp"

namespace gact {

/// The two theories with a worked-out model companion.
enum class Theory { Empty, Graph };

std::string_view theory_name(Theory t) noexcept;
Theory parse_theory(std::string_view s);
Signature theory_signature(Theory t) noexcept;

struct SaturationState {
  GStructure current;
  int round = 0;
  std::vector<int> birth_round;
  /// One JSON object per served axiom instance.
  std::vector<std::string> log;
  bool truncated = false;
};

SaturationState initial_state(Signature sig, GroupPtr group);
/// Every element of m counts as born in round 0.
SaturationState state_from(GStructure m);

struct SaturateOptions {
  int param_bound = 1;
  int witness_bound = 1;
  std::size_t size_cap = 200;
  bool keep_log = true;
};

/// Runs `rounds` rounds of the configuration axiom scheme. Round r serves the
/// parameter tuples born before r (one per G-orbit of tuples, oldest first)
/// and adds witnesses by free amalgamation only when none exists yet. Stops
/// early and sets `truncated` when the next witness would exceed size_cap.
SaturationState saturate_graph(const SaturationState& state, int rounds, const SaturateOptions& opts = {});

/// Adjoins `copies` fresh copies of G/H for every subgroup H.
SaturationState saturate_empty(const SaturationState& state, int copies);

/// The left-multiplication G-set on the cosets of h (empty signature).
GStructure coset_space(const GroupPtr& g, const Subgroup& h);

struct AmalgamResult {
  GStructure structure;
  std::vector<int> from_b;
  std::vector<int> from_c;
};

/// Free amalgam of b and c over the common part given as pairs (index in b,
/// index in c). The universe lists b first, then the rest of c. Throws
/// Errc::ActionMismatchOnBase when the actions disagree on the common part.
AmalgamResult free_amalgam(const GStructure& b, const GStructure& c, const std::vector<std::pair<int, int>>& common);

struct AxiomInstance {
  Configuration config;
  std::vector<int> params;
};

struct VerifyOptions {
  /// Parameters are drawn from this set when given, else from the whole universe.
  std::optional<ElementSet> param_pool;
  std::size_t instance_cap = 50'000'000;
};

/// Axiom instances (consistent Q with n <= param_bound, n' <= witness_bound,
/// parameters matching the Z0-part) that have no witness in m.
std::vector<AxiomInstance> verify_extension_axioms(const GStructure& m, Theory theory, int param_bound,
                                                   int witness_bound, const VerifyOptions& opts = {});

/// One-line description of an axiom instance.
std::string describe_instance(const GStructure& m, const AxiomInstance& inst);

/// dcl = acl = G.A, computed as a fixpoint under a generating set of G.
class OrbitClosureOracle final : public ClosureOracle {
 public:
  OrbitClosureOracle(Theory theory, const GStructure& m);

  ElementSet dcl(const ElementSet& a) const override;
  ElementSet acl(const ElementSet& a) const override { return dcl(a); }
  Theory theory() const noexcept { return theory_; }

 private:
  Theory theory_;
  std::vector<int> gens_;
  std::vector<std::vector<int>> perms_;
};

}  // namespace gact
