#include <gtest/gtest.h>

#include "gact/boolring.hpp"
#include "gact/generic.hpp"
#include "expect_error.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace gact;
using gact::gen::code_of;

namespace {

// Z/2 swapping the two atoms of P({1,2}).
BooleanRing swapped_pair() { return BooleanRing({"1", "2"}, named_group("z2"), {{0, 1}, {1, 0}}); }

// S3 permuting three atoms as it permutes the cosets of {e, s}.
BooleanRing s3_on_three() {
  auto g = named_group("s3");
  return BooleanRing({"a", "b", "c"}, g, coset_space(g, Subgroup{{0, 3}}).action());
}

std::vector<std::vector<RingElem>> all_points(const BooleanRing& ring, int count) {
  std::vector<std::vector<RingElem>> out{{}};
  for (int i = 0; i < count; ++i) {
    std::vector<std::vector<RingElem>> next;
    for (const auto& p : out)
      for (RingElem x = 0; x <= ring.one(); ++x) {
        auto q = p;
        q.push_back(x);
        next.push_back(q);
      }
    out = next;
  }
  return out;
}

TransformalIdeal ideal_of(const BooleanRing& ring, int n, std::vector<std::string> gens) {
  TransformalIdeal id{ring.group().order(), n, {}};
  for (const auto& g : gens) id.generators.push_back(parse_bool_polynomial(g, ring, n));
  return id;
}

}  // namespace

TEST(Boolring, RingBasics) {
  auto r = BooleanRing::trivial_action(3, named_group("z2"));
  EXPECT_EQ(r.size(), 8u);
  EXPECT_EQ(r.one(), 7u);
  EXPECT_EQ(r.to_string(0), "0");
  EXPECT_EQ(r.to_string(7), "1");
  EXPECT_EQ(r.to_string(5), "{1,3}");
  for (RingElem x = 0; x <= r.one(); ++x) EXPECT_EQ(r.parse_element(r.to_string(x)), x);
  EXPECT_EQ(code_of([] { BooleanRing({"1", "2"}, named_group("z3"), {{0, 1}, {1, 0}, {1, 0}}); }),
            Errc::InvalidArgument);
}

TEST(Boolring, SigmaIsAnActionByAutomorphisms) {
  auto g = named_group("s3");
  BooleanRing ring = s3_on_three();
  for (int k = 0; k < 6; ++k)
    for (int h = 0; h < 6; ++h)
      for (RingElem x = 0; x <= ring.one(); ++x) {
        EXPECT_EQ(ring.sigma(k, ring.sigma(h, x)), ring.sigma(g->mul(k, h), x));
        for (RingElem y = 0; y <= ring.one(); ++y) {
          EXPECT_EQ(ring.sigma(k, BooleanRing::mul(x, y)), BooleanRing::mul(ring.sigma(k, x), ring.sigma(k, y)));
          EXPECT_EQ(ring.sigma(k, BooleanRing::add(x, y)), BooleanRing::add(ring.sigma(k, x), ring.sigma(k, y)));
        }
      }
}

TEST(Boolring, TruncateExamples) {
  auto ring = BooleanRing::trivial_action(2, named_group("z1"));
  Polynomial sq{1, 1, {{{2}, 3}, {{1}, 3}}};
  EXPECT_TRUE(truncate(sq).is_zero());
  Polynomial lin{1, 2, {{{1, 0}, 1}, {{0, 1}, 2}}};
  BoolPolynomial want = poly_add(poly_variable(1, 2, 1, 1, 1), poly_mul(poly_constant(1, 2, 2), poly_variable(1, 2, 1, 2, 3)));
  EXPECT_EQ(truncate(lin), want);
  Polynomial cube{1, 2, {{{3, 3}, 3}, {{1, 0}, 2}}};
  EXPECT_EQ(truncate(cube), parse_bool_polynomial("t[1,1]*t[1,2] + {2}*t[1,1]", ring, 2));
  for (const auto& p : all_points(ring, 2)) EXPECT_EQ(evaluate(cube, p), evaluate(truncate(cube), p));
}

TEST(Boolring, TruncatePreservesEvaluation) {
  auto ring = BooleanRing::trivial_action(3, named_group("z1"));
  const auto points = all_points(ring, 2);
  for (int t = 0; t < 100; ++t) {
    Rng rng(child_seed(89, static_cast<std::uint64_t>(t)));
    Polynomial f{1, 2, {}};
    for (int k = uniform_int(rng, 0, 4); k > 0; --k)
      f.terms.push_back({{uniform_int(rng, 0, 3), uniform_int(rng, 0, 3)},
                         static_cast<RingElem>(uniform_int(rng, 0, 7))});
    const BoolPolynomial tf = truncate(f);
    for (const auto& p : points) ASSERT_EQ(evaluate(f, p), evaluate(tf, p));
  }
}

TEST(Boolring, SigmaOnPolynomials) {
  auto ring = BooleanRing::trivial_action(1, named_group("z2"));
  auto t11 = parse_bool_polynomial("t[1,1]", ring, 1);
  EXPECT_EQ(sigma_on_poly(ring, 0, t11), t11);
  EXPECT_EQ(sigma_on_poly(ring, 1, t11), parse_bool_polynomial("t[2,1]", ring, 1));

  auto g = named_group("s3");
  BooleanRing r3 = s3_on_three();
  for (int t = 0; t < 100; ++t) {
    Rng rng(child_seed(97, static_cast<std::uint64_t>(t)));
    auto f = gen::random_bool_polynomial(r3, 1, rng, 4, 3);
    for (int k = 0; k < 6; ++k)
      for (int h = 0; h < 6; ++h)
        EXPECT_EQ(sigma_on_poly(r3, k, sigma_on_poly(r3, h, f)), sigma_on_poly(r3, g->mul(k, h), f));
  }
}

TEST(Boolring, EvaluationIsAHomomorphism) {
  auto ring = swapped_pair();
  const auto points = all_points(ring, 1);
  for (int t = 0; t < 60; ++t) {
    Rng rng(child_seed(101, static_cast<std::uint64_t>(t)));
    auto f = gen::random_bool_polynomial(ring, 1, rng, 3, 2);
    auto h = gen::random_bool_polynomial(ring, 1, rng, 3, 2);
    for (const auto& r : points) {
      const RingElem ef = evaluate_at_orbit(ring, f, r), eh = evaluate_at_orbit(ring, h, r);
      EXPECT_EQ(evaluate_at_orbit(ring, poly_add(f, h), r), BooleanRing::add(ef, eh));
      EXPECT_EQ(evaluate_at_orbit(ring, poly_mul(f, h), r), BooleanRing::mul(ef, eh));
      EXPECT_EQ(ef, oracle::orbit_value(ring, f, r));
    }
  }
}

TEST(Boolring, InvarianceExamples) {
  auto ring = BooleanRing::trivial_action(1, named_group("z2"));
  EXPECT_TRUE(is_g_invariant_ideal(ring, ideal_of(ring, 1, {"0"})));
  EXPECT_FALSE(is_g_invariant_ideal(ring, ideal_of(ring, 1, {"t[1,1]"})));
  EXPECT_TRUE(is_g_invariant_ideal(ring, ideal_of(ring, 1, {"t[1,1]*t[2,1]"})));
  EXPECT_TRUE(is_g_invariant_ideal(ring, ideal_of(ring, 1, {"t[1,1]", "t[2,1]"})));
}

TEST(Boolring, MembershipMatchesSupportOracle) {
  for (auto ring : {BooleanRing::trivial_action(2, named_group("z2")), swapped_pair()}) {
    for (int t = 0; t < 150; ++t) {
      Rng rng(child_seed(103, static_cast<std::uint64_t>(t)));
      TransformalIdeal id{2, 1, {}};
      for (int k = uniform_int(rng, 1, 2); k > 0; --k) id.generators.push_back(gen::random_bool_polynomial(ring, 1, rng, 3, 2));
      auto f = gen::random_bool_polynomial(ring, 1, rng, 3, 2);
      EXPECT_EQ(in_ideal(ring, id, f), oracle::ideal_member(ring, id, f));
      for (const auto& g : id.generators) EXPECT_TRUE(in_ideal(ring, id, g));
      // Ideals absorb products.
      EXPECT_TRUE(in_ideal(ring, id, poly_mul(f, id.generators[0])));
    }
  }
}

TEST(Boolring, VarietyExamples) {
  auto ring = BooleanRing::trivial_action(2, named_group("z2"));
  EXPECT_EQ(variety_points(ideal_of(ring, 1, {"0"}), ring).size(), 4u);
  EXPECT_TRUE(variety_points(ideal_of(ring, 1, {"1"}), ring).empty());
  EXPECT_EQ(variety_points(ideal_of(ring, 1, {"t[1,1] + t[2,1]"}), ring).size(), 4u);
  auto swapped = swapped_pair();
  auto pts = variety_points(ideal_of(swapped, 1, {"t[1,1] + t[2,1]"}), swapped);
  EXPECT_EQ(pts, (std::vector<std::vector<RingElem>>{{0}, {3}}));
  EXPECT_EQ(code_of([&] { variety_points(ideal_of(ring, 3, {"0"}), ring, 10); }), Errc::SearchTooLarge);
}

TEST(Boolring, DiamondExamples) {
  auto ring = BooleanRing::trivial_action(1, named_group("z1"));
  auto w = check_diamond_axiom(ring, ideal_of(ring, 1, {"0"}), ideal_of(ring, 1, {"1"}));
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, std::vector<RingElem>{0});
  auto w2 = check_diamond_axiom(ring, ideal_of(ring, 1, {"0"}), ideal_of(ring, 1, {"t[1,1]"}));
  ASSERT_TRUE(w2);
  EXPECT_EQ(ring.to_string((*w2)[0]), "1");
  auto same = ideal_of(ring, 1, {"t[1,1]"});
  EXPECT_EQ(code_of([&] { check_diamond_axiom(ring, same, same); }), Errc::NotProperlyContained);
  auto z2 = BooleanRing::trivial_action(1, named_group("z2"));
  EXPECT_EQ(code_of([&] { check_diamond_axiom(z2, ideal_of(z2, 1, {"t[1,1]"}), ideal_of(z2, 1, {"1"})); }),
            Errc::NotInvariant);
}

TEST(Boolring, DiamondMatchesBruteForce) {
  auto ring = BooleanRing::trivial_action(2, named_group("z2"));
  int checked = 0;
  for (int t = 0; t < 300; ++t) {
    Rng rng(child_seed(107, static_cast<std::uint64_t>(t)));
    TransformalIdeal i{2, 1, {gen::random_bool_polynomial(ring, 1, rng, 3, 2)}};
    i.generators.push_back(sigma_on_poly(ring, 1, i.generators[0]));
    TransformalIdeal j = i;
    j.generators.push_back(gen::random_bool_polynomial(ring, 1, rng, 3, 2));
    if (!is_g_invariant_ideal(ring, i) || ideal_contains(ring, i, j)) continue;
    auto got = check_diamond_axiom(ring, i, j);
    EXPECT_EQ(got, oracle::diamond_scan(ring, i, j));
    if (got) {
      for (const auto& g : i.generators) EXPECT_EQ(evaluate_at_orbit(ring, g, *got), 0u);
      bool some = false;
      for (const auto& g : j.generators) some |= evaluate_at_orbit(ring, g, *got) != 0;
      EXPECT_TRUE(some);
    }
    ++checked;
  }
  EXPECT_GT(checked, 50);
}

TEST(Boolring, NonAtomWitnessExamples) {
  auto ring = BooleanRing::trivial_action(1, named_group("z1"));
  auto w = find_non_atom_witness(ring, 1);
  EXPECT_EQ(w.extended.atom_count(), 2);
  EXPECT_EQ(BooleanRing::mul(w.r_image, w.y), w.y);
  EXPECT_NE(w.r_image, w.y);
  EXPECT_NE(w.y, 0u);
  EXPECT_EQ(code_of([&] { find_non_atom_witness(ring, 0); }), Errc::ZeroElement);
}

TEST(Boolring, NonAtomWitnessesEmbedEquivariantly) {
  std::vector<BooleanRing> rings = {BooleanRing::trivial_action(1, named_group("z2")),
                                    BooleanRing::trivial_action(2, named_group("z2")), swapped_pair(),
                                    BooleanRing::trivial_action(2, named_group("z3"))};
  for (const auto& ring : rings)
    for (RingElem r = 1; r <= ring.one(); ++r) {
      auto w = find_non_atom_witness(ring, r);
      const auto& ext = w.extended;
      EXPECT_EQ(w.r_image, w.embed(r));
      EXPECT_EQ(BooleanRing::mul(w.r_image, w.y), w.y);
      EXPECT_NE(w.r_image, w.y);
      EXPECT_EQ(w.embed(ring.one()), ext.one());
      for (RingElem a = 0; a <= ring.one(); ++a) {
        for (int g = 0; g < ring.group().order(); ++g) EXPECT_EQ(w.embed(ring.sigma(g, a)), ext.sigma(g, w.embed(a)));
        for (RingElem b = 0; b <= ring.one(); ++b) {
          EXPECT_EQ(w.embed(BooleanRing::add(a, b)), BooleanRing::add(w.embed(a), w.embed(b)));
          EXPECT_EQ(w.embed(BooleanRing::mul(a, b)), BooleanRing::mul(w.embed(a), w.embed(b)));
          if (a != b) {
            EXPECT_NE(w.embed(a), w.embed(b));
          }
        }
      }
    }
}

TEST(Boolring, PolynomialTextRoundTrip) {
  auto ring = swapped_pair();
  EXPECT_EQ(code_of([&] { parse_bool_polynomial("t[3,1]", ring, 1); }), Errc::SyntaxError);
  EXPECT_EQ(code_of([&] { parse_bool_polynomial("{1*t[1,1]", ring, 1); }), Errc::SyntaxError);
  for (int t = 0; t < 100; ++t) {
    Rng rng(child_seed(109, static_cast<std::uint64_t>(t)));
    auto f = gen::random_bool_polynomial(ring, 2, rng, 4, 3);
    EXPECT_EQ(parse_bool_polynomial(to_string(f, ring), ring, 2), f) << to_string(f, ring);
  }
}
