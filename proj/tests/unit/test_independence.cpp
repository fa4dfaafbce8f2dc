#include <gtest/gtest.h>

#include "gact/independence.hpp"
#include "gact/io.hpp"
#include "expect_error.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace gact;
using gact::gen::code_of;

namespace {

ElementSet join(std::initializer_list<ElementSet> parts) {
  ElementSet out;
  for (const auto& p : parts) out = set_union(out, p);
  return out;
}

ElementSet as_set(const std::vector<int>& xs) { return make_set(xs); }

// Free orbits of z2 after a fixed point: 0 fixed, then pairs (1,2), (3,4), ...
GStructure fixed_plus_free_z2(int pairs) {
  auto z2 = named_group("z2");
  GStructureBuilder b(Signature::Empty, z2);
  b.add_orbit_block({"m"}, {{0}, {0}});
  for (int i = 0; i < pairs; ++i)
    b.add_orbit_block({"p" + std::to_string(i), "q" + std::to_string(i)}, {{0, 1}, {1, 0}});
  return b.build();
}

}  // namespace

TEST(Independence, Examples) {
  auto z2 = named_group("z2");
  GStructure swap(Signature::Empty, z2, {"a", "sa"}, {}, {{0, 1}, {1, 0}});
  EXPECT_TRUE(indep(swap, {0}, {0}, {0}));
  EXPECT_FALSE(indep(swap, {0}, {}, {1}));
  auto free = fixed_plus_free_z2(2);
  EXPECT_TRUE(indep(free, {1}, {}, {3}));
  EXPECT_TRUE(indep(free, {1, 0}, {0}, {4, 0}));
  EXPECT_FALSE(indep(free, {1, 0}, {}, {4, 0}));
}

TEST(Independence, MonotoneAndClosureInvariant) {
  for (const char* gname : {"z2", "z3", "z2xz2", "s3"}) {
    auto g = named_group(gname);
    for (int t = 0; t < 100; ++t) {
      Rng rng(child_seed(61, static_cast<std::uint64_t>(t)));
      const Theory th = t % 2 ? Theory::Graph : Theory::Empty;
      GStructure m = random_g_structure(th, g, rng);
      OrbitClosureOracle cl(th, m);
      const ElementSet a = gen::random_subset(rng, m.size(), 3);
      const ElementSet e = gen::random_subset(rng, m.size(), 2);
      const ElementSet b = gen::random_subset(rng, m.size(), 3);
      const bool base = indep(m, a, e, b);
      EXPECT_EQ(base, indep(m, cl.acl(a), cl.acl(e), cl.acl(b)));
      EXPECT_EQ(base, indep(m, a, cl.acl(e), b));
      EXPECT_EQ(base, indep(m, b, e, a));
      if (base && !b.empty()) {
        ElementSet smaller(b.begin(), b.end() - 1);
        EXPECT_TRUE(indep(m, a, e, smaller));
      }
    }
  }
}

TEST(Independence, AxiomsHoldForShippedTheories) {
  for (Theory th : {Theory::Empty, Theory::Graph})
    for (const char* gname : {"z2", "z3", "z2xz2"}) {
      auto rep = check_axioms(th, named_group(gname), 300, 7);
      ASSERT_EQ(rep.axioms.size(), 7u);
      for (const auto& a : rep.axioms) EXPECT_EQ(a.failures, 0u) << gname << " " << a.name;
      EXPECT_EQ(rep.axiom_failures(), 0u);
    }
}

TEST(Independence, MutantRelationIsCaught) {
  AxiomCheckOptions opts;
  opts.relation = indep_without_closure;
  std::size_t total = 0;
  for (const char* gname : {"z2", "z3", "z2xz2"}) {
    auto rep = check_axioms(Theory::Graph, named_group(gname), 300, 7, opts);
    total += rep.axiom_failures();
    EXPECT_EQ(rep.axiom("symmetry").failures, 0u) << gname;
    EXPECT_GT(rep.axiom("existence").failures, 0u) << gname;
    EXPECT_FALSE(rep.axiom("existence").examples.empty());
  }
  EXPECT_GT(total, 0u);
}

TEST(Independence, ReportsAreDeterministic) {
  auto z3 = named_group("z3");
  EXPECT_EQ(to_json(check_axioms(Theory::Graph, z3, 1, 99)), to_json(check_axioms(Theory::Graph, z3, 1, 99)));
  EXPECT_EQ(to_json(check_axioms(Theory::Empty, z3, 25, 4)), to_json(check_axioms(Theory::Empty, z3, 25, 4)));
}

TEST(Independence, TheoremFreeOrbitsInTheEmptyTheory) {
  auto m = fixed_plus_free_z2(4);
  auto r = independence_theorem_check(m, {0}, {1}, {3}, {5}, {7});
  EXPECT_TRUE(r.ok());
  ASSERT_EQ(r.c.size(), 1u);
  EXPECT_EQ(stabilizer(r.amalgam, r.c[0]).size(), 1u);
  EXPECT_TRUE(indep(r.amalgam, as_set(r.c), r.model, join({as_set(r.a), as_set(r.b)})));
}

TEST(Independence, TheoremRejectsDifferentTypesOverTheModel) {
  GStructureBuilder b(fixed_plus_free_z2(3));
  b.add_orbit_block({"f"}, {{0}, {0}});
  auto m = b.build();
  // c1 lies in a free orbit, c2 is a fixed point.
  EXPECT_EQ(code_of([&] { independence_theorem_check(m, {0}, {1}, {3}, {5}, {7}); }), Errc::HypothesisViolated);
}

TEST(Independence, TheoremFreeJoinOfIsolatedVertices) {
  auto z1 = named_group("z1");
  auto m = GStructure::with_trivial_action(Signature::Graph, z1, {"a", "b", "c1", "c2"}, {});
  auto r = independence_theorem_check(m, {}, {0}, {1}, {2}, {3});
  EXPECT_TRUE(r.type_a);
  EXPECT_TRUE(r.type_b);
  EXPECT_TRUE(r.c_independent);
  EXPECT_EQ(r.amalgam.edge_count(), 0u);
}

TEST(Independence, TheoremCertificatesReverify) {
  int done = 0;
  for (Theory th : {Theory::Empty, Theory::Graph})
    for (const char* gname : {"z1", "z2", "z3", "z2xz2", "s3"}) {
      auto g = named_group(gname);
      for (int t = 0; t < 20; ++t) {
        Rng rng(child_seed(67, static_cast<std::uint64_t>(t)));
        auto inst = gen::random_independence_instance(th, g, rng);
        auto r = independence_theorem_check(inst.ambient, inst.model, inst.a, inst.b, inst.c1, inst.c2);
        ASSERT_TRUE(r.ok()) << gname;
        const ElementSet mac = orbit(r.amalgam, join({r.model, as_set(r.a), as_set(r.c)}));
        const ElementSet mbc = orbit(r.amalgam, join({r.model, as_set(r.b), as_set(r.c)}));
        const ElementSet mac1 = orbit(inst.ambient, join({inst.model, as_set(inst.a), as_set(inst.c1)}));
        const ElementSet mbc2 = orbit(inst.ambient, join({inst.model, as_set(inst.b), as_set(inst.c2)}));
        EXPECT_TRUE(oracle::is_equivariant_isomorphism(r.amalgam, mac, inst.ambient, mac1, r.iso_a));
        EXPECT_TRUE(oracle::is_equivariant_isomorphism(r.amalgam, mbc, inst.ambient, mbc2, r.iso_b));
        EXPECT_TRUE(indep(r.amalgam, as_set(r.c), r.model, join({as_set(r.a), as_set(r.b)})));
        ++done;
      }
    }
  EXPECT_EQ(done, 200);
}
