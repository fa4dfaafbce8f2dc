#pragma once

#include <string>
#include <vector>

#include "gact/boolring.hpp"
#include "gact/formula.hpp"
#include "gact/galois.hpp"
#include "gact/generic.hpp"
#include "gact/random.hpp"
#include "gact/structure.hpp"

namespace gact::gen {

/// Random formula over `vars` with at most `depth` nested quantifiers and
/// roughly `size` connectives; relation atoms only when `with_relation`.
Formula random_formula(const FiniteGroup& g, Rng& rng, std::vector<std::string> vars, int depth, int size,
                       bool with_relation);

struct IndependenceInstance {
  GStructure ambient;
  ElementSet model;
  std::vector<int> a, b, c1, c2;
};

/// Hypotheses hold by construction: a, b, c1, c2 sit in separate orbits
/// over a G-closed model, and c2 copies c1's diagram over the model.
IndependenceInstance random_independence_instance(Theory theory, const GroupPtr& group, Rng& rng);

/// A random graph on 1..max_size vertices (trivial group) with a random base.
FiniteExtension random_galois_instance(Rng& rng, int max_size);

/// Random multilinear polynomial with at most `terms` monomials of degree <= max_degree.
BoolPolynomial random_bool_polynomial(const BooleanRing& ring, int n, Rng& rng, int terms, int max_degree);

/// Random subset of 0..n-1 of size at most max_size, sorted.
ElementSet random_subset(Rng& rng, int n, int max_size);

}  // namespace gact::gen
