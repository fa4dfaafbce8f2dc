#include "gact/independence.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gact/automorphism.hpp"
#include "gact/error.hpp"

namespace gact {

namespace {

std::string show(const ElementSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

ElementSet image(const std::vector<int>& f, const ElementSet& s) {
  std::vector<int> out;
  out.reserve(s.size());
  for (int x : s) out.push_back(f[static_cast<std::size_t>(x)]);
  return make_set(std::move(out));
}

ElementSet random_subset(Rng& rng, const std::vector<int>& pool, int max_size) {
  std::vector<int> out;
  if (pool.empty()) return out;
  const int k = uniform_int(rng, 0, max_size);
  for (int i = 0; i < k; ++i) out.push_back(pool[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(pool.size()) - 1))]);
  return make_set(std::move(out));
}

ElementSet random_sub(Rng& rng, const ElementSet& s) {
  std::vector<int> out;
  for (int x : s)
    if (uniform_int(rng, 0, 1)) out.push_back(x);
  return out;
}

std::vector<ElementSet> all_subsets(const ElementSet& s) {
  std::vector<ElementSet> out;
  const std::size_t n = s.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    ElementSet sub;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) sub.push_back(s[i]);
    out.push_back(std::move(sub));
  }
  return out;
}

int local_index(const ElementSet& s, int x) {
  return static_cast<int>(std::lower_bound(s.begin(), s.end(), x) - s.begin());
}

}  // namespace

bool indep(const GStructure& m, const ElementSet& a, const ElementSet& e, const ElementSet& b) {
  return is_subset(set_intersection(orbit(m, a), orbit(m, b)), orbit(m, e));
}

bool indep_without_closure(const GStructure&, const ElementSet& a, const ElementSet& e, const ElementSet& b) {
  return is_subset(set_intersection(a, b), e);
}

const AxiomOutcome& AxiomReport::axiom(std::string_view name) const {
  for (const auto& a : axioms)
    if (a.name == name) return a;
  throw Error(Errc::InvalidArgument, "no axiom named " + std::string(name));
}

std::size_t AxiomReport::axiom_failures() const {
  std::size_t n = 0;
  for (const auto& a : axioms)
    if (a.name != "closure") n += a.failures;
  return n;
}

GStructure random_g_structure(Theory theory, const GroupPtr& group, Rng& rng, int max_orbits) {
  const auto subs = subgroups(*group);
  GStructureBuilder b(theory_signature(theory), group);
  const int k = uniform_int(rng, 1, max_orbits);
  for (int i = 0; i < k; ++i) {
    const auto& h = subs[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(subs.size()) - 1))];
    const GStructure cs = coset_space(group, h);
    std::vector<std::string> labels;
    for (int j = 0; j < cs.size(); ++j) labels.push_back("o" + std::to_string(i) + "_" + std::to_string(j));
    b.add_orbit_block(labels, cs.action());
  }
  if (theory == Theory::Graph) {
    const int n = b.size();
    std::set<std::pair<int, int>> decided;
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y) {
        if (decided.count({x, y})) continue;
        const bool edge = uniform_int(rng, 0, 1) == 1;
        for (int g = 0; g < group->order(); ++g) {
          int u = b.act(g, x), v = b.act(g, y);
          if (u > v) std::swap(u, v);
          decided.insert({u, v});
          if (edge) b.add_edge(u, v);
        }
      }
  }
  return b.build();
}

AxiomReport check_axioms(Theory theory, const GroupPtr& group, std::size_t trials, std::uint64_t seed,
                         const AxiomCheckOptions& opts) {
  AxiomReport rep;
  rep.theory = theory;
  rep.group = std::to_string(group->order());
  rep.seed = seed;
  rep.trials = trials;
  for (const char* n :
       {"invariance", "local_character", "finite_character", "symmetry", "transitivity", "existence", "closure"})
    rep.axioms.push_back({n, 0, 0, {}});
  auto outcome = [&](const char* name) -> AxiomOutcome& {
    for (auto& a : rep.axioms)
      if (a.name == name) return a;
    throw Error(Errc::InvalidArgument, name);
  };
  const IndepRelation& rel = opts.relation;
  const int ng = group->order();

  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(child_seed(seed, t));
    const GStructure m = random_g_structure(theory, group, rng);
    std::vector<int> pool(static_cast<std::size_t>(m.size()));
    for (int x = 0; x < m.size(); ++x) pool[static_cast<std::size_t>(x)] = x;
    const ElementSet a = random_subset(rng, pool, 3);
    const ElementSet e = random_subset(rng, pool, 3);
    const ElementSet b = random_subset(rng, pool, 3);
    const std::string query = "trial " + std::to_string(t) + ": A=" + show(a) + " E=" + show(e) + " B=" + show(b);
    auto record = [&](const char* name, bool ok, const std::string& detail) {
      AxiomOutcome& o = outcome(name);
      ++o.trials;
      if (ok) return;
      ++o.failures;
      if (o.examples.size() < opts.examples_kept) o.examples.push_back(query + (detail.empty() ? "" : "; " + detail));
    };
    const bool base = rel(m, a, e, b);

    // (i) invariance under an equivariant automorphism.
    {
      AutSearchOptions ao;
      ao.respect_action = true;
      ao.node_cap = opts.node_cap;
      std::vector<std::vector<int>> autos;
      for_each_automorphism(m, ao, [&](const std::vector<int>& f) {
        autos.push_back(f);
        return autos.size() < 16;
      });
      ao.prescribed = {{uniform_int(rng, 0, m.size() - 1), uniform_int(rng, 0, m.size() - 1)}};
      if (auto f = find_automorphism(m, ao)) autos.push_back(*f);
      const auto& f = autos[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(autos.size()) - 1))];
      record("invariance", rel(m, image(f, a), image(f, e), image(f, b)) == base, "");
    }

    // (ii) local character: some E' within B of size <= |A||G| works.
    {
      bool found = false;
      for (const auto& sub : all_subsets(b))
        if (sub.size() <= a.size() * static_cast<std::size_t>(ng) && rel(m, a, sub, b)) {
          found = true;
          break;
        }
      record("local_character", found, "");
    }

    // (iii) finite character over the sub-tuples of B.
    {
      bool all = true;
      for (const auto& sub : all_subsets(b)) all = all && rel(m, a, e, sub);
      record("finite_character", all == base, "");
    }

    // (iv) symmetry.
    record("symmetry", rel(m, b, e, a) == base, "");

    // (v) transitivity along E0 within E1 within E2.
    {
      const ElementSet e2 = random_subset(rng, pool, 4);
      const ElementSet e1 = random_sub(rng, e2);
      const ElementSet e0 = random_sub(rng, e1);
      const bool lhs = rel(m, a, e0, e2);
      const bool rhs = rel(m, a, e0, e1) && rel(m, a, e1, e2);
      record("transitivity", lhs == rhs, "E0=" + show(e0) + " E1=" + show(e1) + " E2=" + show(e2));
    }

    // (vi) existence: inside M amalgamated with a copy of itself over G.E,
    // look for an automorphism over E moving A to an independent position.
    {
      const ElementSet ge = orbit(m, e);
      std::vector<std::pair<int, int>> common;
      for (int x : ge) common.emplace_back(x, x);
      const AmalgamResult big = free_amalgam(m, m, common);
      AutSearchOptions ao;
      ao.respect_action = true;
      ao.fixed = e;
      ao.node_cap = opts.node_cap;
      for (int x : a) ao.prescribed.emplace_back(x, big.from_c[static_cast<std::size_t>(x)]);
      bool ok = false;
      std::string detail;
      try {
        if (auto f = find_automorphism(big.structure, ao)) {
          ok = rel(big.structure, image(*f, a), e, b);
          if (!ok) detail = "moved copy still dependent";
        }
        if (!ok) {
          ao.prescribed.clear();
          for_each_automorphism(big.structure, ao, [&](const std::vector<int>& f) {
            ok = rel(big.structure, image(f, a), e, b);
            return !ok;
          });
          if (!ok && detail.empty()) detail = "no automorphism over E separates A from B";
        }
      } catch (const Error& err) {
        if (err.code() != Errc::BudgetExceeded) throw;
        detail = "search budget exhausted";
      }
      record("existence", ok, detail);
    }

    // Closure law: the relation only sees orbit closures.
    {
      OrbitClosureOracle cl(theory, m);
      const bool closed = rel(m, cl.acl(a), cl.acl(e), cl.acl(b));
      const bool base_closed = rel(m, a, cl.acl(e), b);
      record("closure", closed == base && base_closed == base, "");
    }
  }
  return rep;
}

std::optional<std::vector<std::pair<int, int>>> same_type_over(const GStructure& m1, const std::vector<int>& base1,
                                                              const std::vector<int>& t1, const GStructure& m2,
                                                              const std::vector<int>& base2,
                                                              const std::vector<int>& t2) {
  if (base1.size() != base2.size() || t1.size() != t2.size())
    throw Error(Errc::InvalidArgument, "tuples of different lengths");
  if (m1.signature() != m2.signature() || !(m1.group() == m2.group())) return std::nullopt;
  std::vector<int> all1 = base1, all2 = base2;
  all1.insert(all1.end(), t1.begin(), t1.end());
  all2.insert(all2.end(), t2.begin(), t2.end());
  const ElementSet s1 = orbit(m1, all1), s2 = orbit(m2, all2);
  if (s1.size() != s2.size()) return std::nullopt;
  const GStructure r1 = restrict_to(m1, s1), r2 = restrict_to(m2, s2);
  std::vector<std::pair<int, int>> prescribed;
  for (std::size_t i = 0; i < all1.size(); ++i) prescribed.emplace_back(local_index(s1, all1[i]), local_index(s2, all2[i]));
  auto iso = find_isomorphism(r1, r2, true, prescribed);
  if (!iso) return std::nullopt;
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < s1.size(); ++i) out.emplace_back(s1[i], s2[static_cast<std::size_t>((*iso)[i])]);
  return out;
}

IndependenceTheoremResult independence_theorem_check(const GStructure& ambient, const ElementSet& model,
                                                     const std::vector<int>& a, const std::vector<int>& b,
                                                     const std::vector<int>& c1, const std::vector<int>& c2) {
  if (ambient.signature() == Signature::Order)
    throw Error(Errc::UnsupportedSignature, "amalgamation needs the graph or empty signature");
  for (const auto* t : {&model, &a, &b, &c1, &c2})
    for (int x : *t)
      if (!ambient.contains(x)) throw Error(Errc::UnknownElement, "element outside the ambient structure");
  if (orbit(ambient, model) != make_set(model)) throw Error(Errc::InvalidArgument, "the model must be G-closed");
  if (c1.size() != c2.size()) throw Error(Errc::InvalidArgument, "c1 and c2 must have the same length");
  const ElementSet M = make_set(model);
  const ElementSet A = make_set(a), B = make_set(b), C1 = make_set(c1), C2 = make_set(c2);
  if (!same_type_over(ambient, M, c1, ambient, M, c2))
    throw Error(Errc::HypothesisViolated, "c1 and c2 have different types over M");
  if (!indep(ambient, A, M, B)) throw Error(Errc::HypothesisViolated, "a is not independent from b over M");
  if (!indep(ambient, C1, M, A)) throw Error(Errc::HypothesisViolated, "c1 is not independent from a over M");
  if (!indep(ambient, C2, M, B)) throw Error(Errc::HypothesisViolated, "c2 is not independent from b over M");

  // D = G.(M a b) with c1's part over G.(M a) glued on freely.
  std::vector<int> mab = M;
  mab.insert(mab.end(), a.begin(), a.end());
  mab.insert(mab.end(), b.begin(), b.end());
  const ElementSet sd = orbit(ambient, mab);
  std::vector<int> ma = M;
  ma.insert(ma.end(), a.begin(), a.end());
  const ElementSet sma = orbit(ambient, ma);
  std::vector<int> mac1 = ma;
  mac1.insert(mac1.end(), c1.begin(), c1.end());
  const ElementSet sx1 = orbit(ambient, mac1);
  const GStructure d = restrict_to(ambient, sd), x1 = restrict_to(ambient, sx1);
  std::vector<std::pair<int, int>> common;
  for (int x : sma) common.emplace_back(local_index(sd, x), local_index(sx1, x));
  const AmalgamResult am = free_amalgam(d, x1, common);

  // Position in the amalgam of each element of G.c, and its c2 counterpart.
  const int ng = ambient.group().order();
  const ElementSet sm = orbit(ambient, M);
  std::map<int, int> c_to_c2;
  for (std::size_t i = 0; i < c1.size(); ++i)
    for (int g = 0; g < ng; ++g) {
      const int u = ambient.act(g, c1[i]);
      if (std::binary_search(sm.begin(), sm.end(), u)) continue;
      c_to_c2[am.from_c[static_cast<std::size_t>(local_index(sx1, u))]] = ambient.act(g, c2[i]);
    }
  GStructureBuilder builder(am.structure);
  if (ambient.signature() == Signature::Graph) {
    std::vector<int> bs(b.begin(), b.end());
    const ElementSet sb = orbit(ambient, bs);
    for (auto [z, w2] : c_to_c2)
      for (int v : sb) {
        if (std::binary_search(sm.begin(), sm.end(), v)) continue;
        if (ambient.related(w2, v)) builder.add_edge(z, local_index(sd, v));
      }
  }
  IndependenceTheoremResult res{builder.build(), {}, {}, {}, {}, {}, {}, false, false, false};
  for (int x : M) res.model.push_back(local_index(sd, x));
  for (int x : a) res.a.push_back(local_index(sd, x));
  for (int x : b) res.b.push_back(local_index(sd, x));
  for (int x : c1) res.c.push_back(am.from_c[static_cast<std::size_t>(local_index(sx1, x))]);
  res.model = make_set(res.model);

  std::vector<int> base_a = M, base_a_here = res.model;
  base_a.insert(base_a.end(), a.begin(), a.end());
  base_a_here.insert(base_a_here.end(), res.a.begin(), res.a.end());
  std::vector<int> base_b = M, base_b_here = res.model;
  base_b.insert(base_b.end(), b.begin(), b.end());
  base_b_here.insert(base_b_here.end(), res.b.begin(), res.b.end());
  if (auto iso = same_type_over(res.amalgam, base_a_here, res.c, ambient, base_a, c1)) {
    res.type_a = true;
    res.iso_a = std::move(*iso);
  }
  if (auto iso = same_type_over(res.amalgam, base_b_here, res.c, ambient, base_b, c2)) {
    res.type_b = true;
    res.iso_b = std::move(*iso);
  }
  std::vector<int> ab = res.a;
  ab.insert(ab.end(), res.b.begin(), res.b.end());
  res.c_independent = indep(res.amalgam, make_set(res.c), res.model, make_set(ab));
  return res;
}

}  // namespace gact
