#include <gtest/gtest.h>

#include "gact/formula.hpp"
#include "gact/independence.hpp"
#include "expect_error.hpp"
#include "generators.hpp"

using namespace gact;
using gact::gen::code_of;

namespace {

Formula p(const char* text, const char* group = "z2") { return parse(text, *named_group(group)); }

}  // namespace

TEST(Logic, ParseExamples) {
  auto z2 = named_group("z2");
  Term y{0, "y"}, sx{1, "x"}, sy{1, "y"};
  EXPECT_TRUE(formula_equal(p("E y. R(y, s·x) & s·y = y"), f_exists("y", f_and({f_rel(y, sx), f_eq(sy, y)}))));
  EXPECT_TRUE(formula_equal(p("s·(s·x) = x"), f_eq(Term{0, "x"}, Term{0, "x"})));
  EXPECT_TRUE(formula_equal(p("A x. E y. R(x,y)"), f_forall("x", f_exists("y", f_rel(Term{0, "x"}, y)))));
  EXPECT_TRUE(formula_equal(p("s*y = y"), p("s·y = y")));
  EXPECT_EQ(to_string(p("s·(s·x) = x"), *z2), "x = x");
}

TEST(Logic, ParseUnicodeConnectives) {
  EXPECT_TRUE(formula_equal(p("¬(x ≠ y) ∧ R(x,y) ∨ false"), p("!(x != y) & R(x,y) | false")));
}

TEST(Logic, ParseErrors) {
  auto z2 = named_group("z2");
  EXPECT_EQ(code_of([&] { parse("E y. R(y, x", *z2); }), Errc::SyntaxError);
  EXPECT_EQ(code_of([&] { parse("x = ", *z2); }), Errc::SyntaxError);
  EXPECT_EQ(code_of([&] { parse("q·x = x", *z2); }), Errc::UnknownGroupElement);
  EXPECT_EQ(code_of([&] { parse("x = y", *z2, std::vector<std::string>{"x"}); }), Errc::UnboundVariable);
  EXPECT_NO_THROW(parse("E y. x = y", *z2, std::vector<std::string>{"x"}));
  try {
    parse("x = = y", *z2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find('4'), std::string::npos) << e.what();
  }
}

TEST(Logic, PrintParseRoundTrip) {
  for (const char* gname : {"z2", "z3", "s3", "z2xz2"}) {
    auto g = named_group(gname);
    for (int t = 0; t < 200; ++t) {
      Rng rng(child_seed(3, static_cast<std::uint64_t>(t)));
      Formula f = gen::random_formula(*g, rng, {"x0", "x1"}, 2, 8, true);
      EXPECT_TRUE(formula_equal(parse(to_string(f, *g), *g), f)) << to_string(f, *g);
    }
  }
}

TEST(Logic, TermNormalizationIsAnAction) {
  for (const auto& [name, g] : group_corpus(8))
    for (int a = 0; a < g->order(); ++a)
      for (int b = 0; b < g->order(); ++b)
        for (int c = 0; c < g->order(); ++c) {
          Term t{c, "x"};
          EXPECT_EQ(apply(*g, a, apply(*g, b, t)), apply(*g, g->mul(a, b), t)) << name;
        }
}

TEST(Logic, EvalExamples) {
  auto z1 = named_group("z1"), z2 = named_group("z2");
  auto edge = GStructure::with_trivial_action(Signature::Graph, z1, {"v0", "v1"}, {{0, 1}});
  EXPECT_TRUE(eval(edge, p("R(x,y)", "z1"), {{"x", 0}, {"y", 1}}));
  EXPECT_TRUE(eval(edge, p("x = x", "z1"), {{"x", 1}}));
  GStructure swap(Signature::Empty, z2, {"a", "b"}, {}, {{0, 1}, {1, 0}});
  EXPECT_FALSE(eval(swap, p("s·x = x"), {{"x", 0}}));
  EXPECT_TRUE(eval(swap, p("A x. E y. y != x & s·y = y -> false"), {}));
  EXPECT_EQ(code_of([&] { eval(swap, p("x = y"), {{"x", 0}}); }), Errc::UnassignedVariable);
  EXPECT_EQ(code_of([&] { eval(swap, p("R(x,x)"), {{"x", 0}}); }), Errc::SignatureMismatch);
}

TEST(Logic, EvalOrderReadsLessThan) {
  auto z1 = named_group("z1");
  auto chain = GStructure::with_trivial_action(Signature::Order, z1, {"a", "b", "c"}, {{0, 1}, {0, 2}, {1, 2}});
  EXPECT_TRUE(eval(chain, p("R(x,y)", "z1"), {{"x", 0}, {"y", 2}}));
  EXPECT_FALSE(eval(chain, p("R(x,y)", "z1"), {{"x", 2}, {"y", 0}}));
  EXPECT_TRUE(eval(chain, p("E x. A y. x = y | R(x,y)", "z1"), {}));
}

TEST(Logic, EvalRespectsDeMorganAndQuantifierDuality) {
  for (const char* gname : {"z2", "z3"}) {
    auto g = named_group(gname);
    for (int t = 0; t < 60; ++t) {
      Rng rng(child_seed(9, static_cast<std::uint64_t>(t)));
      GStructure m = random_g_structure(Theory::Graph, g, rng, 3);
      Formula f = gen::random_formula(*g, rng, {"x0"}, 1, 5, true);
      Formula h = gen::random_formula(*g, rng, {"x0"}, 1, 5, true);
      for (int x = 0; x < m.size(); ++x) {
        Assignment a{{"x0", x}};
        EXPECT_EQ(eval(m, f_not(f_and({f, h})), a), eval(m, f_or({f_not(f), f_not(h)}), a));
        EXPECT_EQ(eval(m, f_implies(f, h), a), eval(m, f_or({f_not(f), h}), a));
        EXPECT_EQ(eval(m, f_forall("z", f), a), eval(m, f_not(f_exists("z", f_not(f))), a));
      }
    }
  }
}

TEST(Logic, SubstitutionAgreesWithAssignment) {
  auto g = named_group("s3");
  for (int t = 0; t < 80; ++t) {
    Rng rng(child_seed(13, static_cast<std::uint64_t>(t)));
    GStructure m = random_g_structure(Theory::Graph, g, rng, 3);
    Formula f = gen::random_formula(*g, rng, {"x0", "x1"}, 1, 6, true);
    const int k = uniform_int(rng, 0, 5);
    Formula sub = substitute(f, "x1", Term{k, "x0"}, *g);
    EXPECT_FALSE(free_variables(sub).count("x1"));
    for (int x = 0; x < m.size(); ++x)
      EXPECT_EQ(eval(m, sub, {{"x0", x}}), eval(m, f, {{"x0", x}, {"x1", m.act(k, x)}}));
  }
}

TEST(Logic, SyntacticHelpers) {
  Formula f = p("A x. (E y. R(x,y)) & z = z");
  EXPECT_EQ(free_variables(f), (std::set<std::string>{"z"}));
  EXPECT_EQ(quantifier_depth(f), 2);
  EXPECT_FALSE(is_quantifier_free(f));
  EXPECT_TRUE(mentions_relation(f));
  EXPECT_TRUE(is_quantifier_free(p("x = y | !R(x,y)")));
  EXPECT_FALSE(mentions_relation(p("E y. s·y != y")));
}
