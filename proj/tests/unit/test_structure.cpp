#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "gact/automorphism.hpp"
#include "gact/error.hpp"
#include "gact/generic.hpp"
#include "gact/independence.hpp"
#include "gact/structure.hpp"
#include "generators.hpp"
#include "expect_error.hpp"
#include "oracles.hpp"

using namespace gact;
using gact::gen::code_of;

namespace {

GStructure swap_pair_plus_fixed() {
  return GStructure(Signature::Graph, named_group("z2"), {"v0", "v1", "v2"}, {}, {{0, 1, 2}, {1, 0, 2}});
}

GStructure free_orbits(const GroupPtr& g, int copies) {
  SaturationState st = initial_state(Signature::Empty, g);
  GStructureBuilder b(st.current);
  const GStructure regular = coset_space(g, trivial_subgroup(*g));
  for (int c = 0; c < copies; ++c) {
    std::vector<std::string> labels;
    for (int i = 0; i < regular.size(); ++i) labels.push_back("f" + std::to_string(c) + "_" + std::to_string(i));
    b.add_orbit_block(labels, regular.action());
  }
  return b.build();
}

std::vector<int> all_of(const GStructure& m) {
  std::vector<int> v(static_cast<std::size_t>(m.size()));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

TEST(Structure, ValidatesActionAndSignature) {
  auto z2 = named_group("z2");
  // sigma_s is not an involution on three points.
  EXPECT_EQ(code_of([&] { GStructure(Signature::Empty, z2, {"a", "b", "c"}, {}, {{0, 1, 2}, {1, 2, 0}}); }),
            Errc::InvalidStructure);
  // Swapping a and b does not preserve the single edge a-c.
  EXPECT_EQ(code_of([&] { GStructure(Signature::Graph, z2, {"a", "b", "c"}, {{0, 2}}, {{0, 1, 2}, {1, 0, 2}}); }),
            Errc::InvalidStructure);
  EXPECT_EQ(code_of([&] { GStructure::with_trivial_action(Signature::Graph, z2, {"a"}, {{0, 0}}); }),
            Errc::InvalidStructure);
  // A non-identity action on a chain cannot preserve the order.
  EXPECT_EQ(code_of([&] { GStructure(Signature::Order, z2, {"a", "b"}, {{0, 1}}, {{0, 1}, {1, 0}}); }),
            Errc::InvalidStructure);
}

TEST(Structure, GraphPairsMaySymmetricOrSingle) {
  auto z1 = named_group("z1");
  auto once = GStructure::with_trivial_action(Signature::Graph, z1, {"a", "b"}, {{0, 1}});
  auto twice = GStructure::with_trivial_action(Signature::Graph, z1, {"a", "b"}, {{0, 1}, {1, 0}});
  EXPECT_EQ(once, twice);
  EXPECT_TRUE(once.related(1, 0));
  EXPECT_EQ(once.edge_count(), 1u);
}

TEST(Structure, OrbitExamples) {
  auto m = swap_pair_plus_fixed();
  EXPECT_EQ(orbit(m, std::vector<int>{0}), (ElementSet{0, 1}));
  EXPECT_EQ(orbit(m, std::vector<int>{}), ElementSet{});
  EXPECT_EQ(code_of([&] { orbit(m, std::vector<int>{7}); }), Errc::UnknownElement);
  auto s3 = named_group("s3");
  auto sat = saturate_empty(initial_state(Signature::Empty, s3), 1).current;
  for (int x = 0; x < sat.size(); ++x) {
    if (stabilizer(sat, x).size() == 1) {
      EXPECT_EQ(orbit(sat, std::vector<int>{x}).size(), 6u);
      return;
    }
  }
  FAIL() << "no free orbit";
}

TEST(Structure, InvariantsExamples) {
  auto z1 = named_group("z1");
  auto triv = GStructure::with_trivial_action(Signature::Graph, z1, {"a", "b", "c"}, {{0, 1}});
  EXPECT_EQ(invariants(triv), (ElementSet{0, 1, 2}));
  EXPECT_EQ(invariants(swap_pair_plus_fixed()), (ElementSet{2}));
  EXPECT_EQ(invariants(free_orbits(named_group("z3"), 1)), ElementSet{});
}

TEST(Structure, OrbitIsAClosureOperator) {
  for (const char* gname : {"z2", "z3", "z2xz2", "s3"}) {
    auto g = named_group(gname);
    for (int t = 0; t < 50; ++t) {
      Rng rng(child_seed(11, static_cast<std::uint64_t>(t)));
      const GStructure m = random_g_structure(Theory::Graph, g, rng);
      const ElementSet a = gen::random_subset(rng, m.size(), 3);
      ElementSet b = set_union(a, gen::random_subset(rng, m.size(), 2));
      const ElementSet ga = orbit(m, a);
      EXPECT_TRUE(is_subset(a, ga));
      EXPECT_EQ(orbit(m, ga), ga);
      EXPECT_TRUE(is_subset(ga, orbit(m, b)));
      for (int x : ga)
        for (int h = 0; h < g->order(); ++h) EXPECT_TRUE(std::binary_search(ga.begin(), ga.end(), m.act(h, x)));
      // Fixed points plus the nontrivial orbits account for the whole universe.
      std::size_t moving = 0;
      for (const auto& o : orbits(m))
        if (o.size() > 1) moving += o.size();
      EXPECT_EQ(invariants(m).size() + moving, static_cast<std::size_t>(m.size()));
    }
  }
}

TEST(Structure, AtomicDiagramExamples) {
  auto z1 = named_group("z1");
  auto point = GStructure::with_trivial_action(Signature::Empty, z1, {"a"}, {});
  auto d = atomic_diagram(point, std::vector<int>{0});
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].kind, Literal::Kind::Eq);

  auto edge = GStructure::with_trivial_action(Signature::Graph, z1, {"v0", "v1"}, {{0, 1}});
  auto de = atomic_diagram(edge, std::vector<int>{0, 1});
  auto has = [](const std::vector<Literal>& lits, Literal l) { return std::find(lits.begin(), lits.end(), l) != lits.end(); };
  Term x0{0, "x0"}, x1{0, "x1"};
  EXPECT_TRUE(has(de, {Literal::Kind::Rel, x0, x1}));
  EXPECT_TRUE(has(de, {Literal::Kind::Rel, x1, x0}));
  EXPECT_TRUE(has(de, {Literal::Kind::Neq, x0, x1}));

  auto z2 = named_group("z2");
  auto swapped = GStructure(Signature::Graph, z2, {"v0", "v1"}, {{0, 1}}, {{0, 1}, {1, 0}});
  auto ds = atomic_diagram(swapped, std::vector<int>{0});
  EXPECT_TRUE(has(ds, {Literal::Kind::Rel, x0, Term{1, "x0"}}));
}

TEST(Structure, EqualDiagramsGiveEquivariantIsomorphisms) {
  int matches = 0;
  for (const char* gname : {"z2", "z3", "z2xz2"}) {
    auto g = named_group(gname);
    for (int t = 0; t < 80; ++t) {
      Rng rng(child_seed(23, static_cast<std::uint64_t>(t)));
      const GStructure m = random_g_structure(Theory::Graph, g, rng, 5);
      std::vector<int> t1{uniform_int(rng, 0, m.size() - 1), uniform_int(rng, 0, m.size() - 1)};
      std::vector<int> t2{uniform_int(rng, 0, m.size() - 1), uniform_int(rng, 0, m.size() - 1)};
      if (atomic_diagram(m, t1) != atomic_diagram(m, t2)) continue;
      ++matches;
      const ElementSet o1 = orbit(m, t1), o2 = orbit(m, t2);
      auto pairs = forced_equivariant_map(m, t1, m, t2);
      ASSERT_TRUE(pairs) << gname;
      EXPECT_TRUE(oracle::is_equivariant_isomorphism(m, o1, m, o2, *pairs));
      auto iso = find_isomorphism(restrict_to(m, o1), restrict_to(m, o2), true);
      EXPECT_TRUE(iso.has_value());
    }
  }
  EXPECT_GT(matches, 20);
}

TEST(Structure, ExistentialClosednessExamples) {
  auto z2 = named_group("z2");
  auto m = free_orbits(z2, 2);
  EXPECT_TRUE(is_existentially_closed(identity_extension(m), 1).closed);

  // One free orbit inside two: a fresh free orbit over a parameter is missing.
  auto small = free_orbits(z2, 1), big = free_orbits(z2, 2);
  auto r = is_existentially_closed(ExtensionPair{small, big, {0, 1}}, 1, 1);
  EXPECT_FALSE(r.closed);
  EXPECT_FALSE(r.witness.empty());

  // Two free orbits inside three: every one-parameter type is already there.
  auto three = free_orbits(z2, 3);
  EXPECT_TRUE(is_existentially_closed(ExtensionPair{big, three, {0, 1, 2, 3}}, 1, 1).closed);

  // A G/H orbit with H proper and nontrivial has no counterpart in a free orbit.
  auto s3 = named_group("s3");
  GStructureBuilder b(free_orbits(s3, 1));
  const GStructure cs = coset_space(s3, Subgroup{{0, 3}});
  b.add_orbit_block({"h0", "h1", "h2"}, cs.action());
  auto with_h = b.build();
  std::vector<int> emb(6);
  std::iota(emb.begin(), emb.end(), 0);
  auto rs = is_existentially_closed(ExtensionPair{free_orbits(s3, 1), with_h, emb}, 1, 0);
  EXPECT_FALSE(rs.closed);
}

TEST(Structure, ExtensionPairValidation) {
  auto z2 = named_group("z2");
  auto small = free_orbits(z2, 1), big = free_orbits(z2, 2);
  EXPECT_EQ(code_of([&] { validate_extension(ExtensionPair{small, big, {0, 0}}); }), Errc::InvalidArgument);
  EXPECT_EQ(code_of([&] { validate_extension(ExtensionPair{small, big, {0, 3}}); }), Errc::InvalidArgument);
  EXPECT_NO_THROW(validate_extension(ExtensionPair{small, big, {2, 3}}));
}

TEST(Structure, RegularExtensions) {
  for (const char* gname : {"z2", "z3", "s3"}) {
    auto g = named_group(gname);
    for (int t = 0; t < 40; ++t) {
      Rng rng(child_seed(31, static_cast<std::uint64_t>(t)));
      const GStructure m = random_g_structure(Theory::Empty, g, rng);
      OrbitClosureOracle oracle(Theory::Empty, m);
      const ElementSet e = gen::random_subset(rng, m.size(), 2);
      const ElementSet a = set_union(e, gen::random_subset(rng, m.size(), 3));
      EXPECT_TRUE(is_regular_extension(e, a, oracle));
      EXPECT_TRUE(is_regular_extension(oracle.acl(e), set_union(oracle.acl(e), a), oracle));
      EXPECT_TRUE(is_regular_extension(e, oracle.dcl(e), oracle));
    }
  }
}

TEST(Structure, NormalExtensions) {
  auto z1 = named_group("z1");
  auto pure = GStructure::with_trivial_action(Signature::Empty, z1, {"a", "b", "c", "d"}, {});
  EXPECT_TRUE(is_normal_extension({}, all_of(pure), pure));
  EXPECT_TRUE(is_normal_extension({0, 1}, {0, 1}, pure));
  EXPECT_FALSE(is_normal_extension({}, {0, 1}, pure));
  // In a path a-b-c the ends are swapped by the only nontrivial automorphism.
  auto path = GStructure::with_trivial_action(Signature::Graph, z1, {"a", "b", "c"}, {{0, 1}, {1, 2}});
  EXPECT_TRUE(is_normal_extension({}, {1}, path));
  EXPECT_FALSE(is_normal_extension({}, {0}, path));
  EXPECT_TRUE(is_normal_extension({}, {0, 2}, path));
}

TEST(Structure, OrderRigidity) {
  auto z3 = named_group("z3");
  auto chain = GStructure::with_trivial_action(Signature::Order, z3, {"1", "2", "3", "4", "5"},
                                               {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3},
                                                {2, 4}, {3, 4}});
  EXPECT_TRUE(order_rigidity_check(chain));
  auto scan = scan_periodic_order_automorphisms(7, 12);
  EXPECT_EQ(scan.counterexamples, 0u);
  // 1! + 2! + ... + 7!
  EXPECT_EQ(scan.permutations, 5913u);
  EXPECT_GT(scan.periodic, 0u);
}

TEST(Structure, AutomorphismSearchMatchesBruteForce) {
  for (int t = 0; t < 60; ++t) {
    Rng rng(child_seed(41, static_cast<std::uint64_t>(t)));
    FiniteExtension ext = gen::random_galois_instance(rng, 6);
    AutSearchOptions opts;
    opts.fixed = ext.base;
    auto got = all_automorphisms(ext.ambient, opts);
    EXPECT_EQ(got, oracle::automorphisms(ext));
  }
}
