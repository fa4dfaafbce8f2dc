#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "gact/error.hpp"
#include "gact/group.hpp"
#include "expect_error.hpp"
#include "oracles.hpp"

using namespace gact;
using gact::gen::code_of;

namespace {

std::vector<std::vector<int>> members(const std::vector<Subgroup>& subs) {
  std::vector<std::vector<int>> out;
  for (const auto& s : subs) out.push_back(s.members);
  return out;
}

}  // namespace

TEST(Group, NamedGroupsHaveExpectedOrders) {
  EXPECT_EQ(named_group("z2")->order(), 2);
  EXPECT_EQ(named_group("z3")->order(), 3);
  EXPECT_EQ(named_group("z4")->order(), 4);
  EXPECT_EQ(named_group("z2xz2")->order(), 4);
  EXPECT_EQ(named_group("s3")->order(), 6);
  EXPECT_EQ(code_of([] { named_group("nope"); }), Errc::InvalidArgument);
}

TEST(Group, RejectsNonAssociativeOrNonLatinTables) {
  EXPECT_EQ(code_of([] { make_group({"e", "a"}, {{0, 1}, {1, 1}}); }), Errc::InvalidGroup);
  // A Latin square with identity that is not associative (order 5 loop).
  std::vector<std::vector<int>> loop = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  EXPECT_EQ(code_of([&] { make_group({"e", "a", "b", "c", "d"}, loop); }), Errc::InvalidGroup);
}

TEST(Group, SubgroupCounts) {
  EXPECT_EQ(subgroups(*named_group("z2")).size(), 2u);
  EXPECT_EQ(subgroups(*named_group("z2xz2")).size(), 5u);
  EXPECT_EQ(subgroups(*named_group("s3")).size(), 6u);
  EXPECT_EQ(subgroups(*named_group("d4")).size(), 10u);
  EXPECT_EQ(subgroups(*named_group("q8")).size(), 6u);
}

TEST(Group, SubgroupsMatchSubsetScanOnCorpus) {
  for (const auto& [name, g] : group_corpus(12)) {
    auto got = members(subgroups(*g));
    auto want = oracle::subgroup_scan(*g);
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    EXPECT_EQ(got, want) << name;
  }
}

TEST(Group, SubgroupsAreClosedAndCanonicallyOrdered) {
  for (const auto& [name, g] : group_corpus(16)) {
    const auto subs = subgroups(*g);
    EXPECT_TRUE(std::is_sorted(subs.begin(), subs.end())) << name;
    EXPECT_EQ(subs.front().size(), 1u);
    EXPECT_EQ(static_cast<int>(subs.back().size()), g->order());
    for (const auto& h : subs)
      for (int a : h.members)
        for (int b : h.members) ASSERT_TRUE(h.contains(g->mul(a, b))) << name;
  }
}

TEST(Group, Cosets) {
  auto z4 = named_group("z4");
  Subgroup h{{0, 2}};
  EXPECT_EQ(cosets(*z4, h), (std::vector<std::vector<int>>{{0, 2}, {1, 3}}));
  auto s3 = named_group("s3");
  EXPECT_EQ(cosets(*s3, whole_group(*s3)).size(), 1u);
  auto singletons = cosets(*s3, trivial_subgroup(*s3));
  EXPECT_EQ(singletons.size(), 6u);
  for (const auto& c : singletons) EXPECT_EQ(c.size(), 1u);
}

TEST(Group, CosetsPartitionTheGroup) {
  for (const auto& [name, g] : group_corpus(12))
    for (const auto& h : subgroups(*g)) {
      const auto cs = cosets(*g, h);
      EXPECT_EQ(cs.size() * h.size(), static_cast<std::size_t>(g->order()));
      EXPECT_EQ(cs.front(), h.members);
      std::vector<int> all;
      for (const auto& c : cs) all.insert(all.end(), c.begin(), c.end());
      std::sort(all.begin(), all.end());
      std::vector<int> want(static_cast<std::size_t>(g->order()));
      std::iota(want.begin(), want.end(), 0);
      EXPECT_EQ(all, want) << name;
    }
}

TEST(Group, FrattiniCoverExamples) {
  auto z4 = named_group("z4"), z2 = named_group("z2"), v4 = named_group("z2xz2");
  EXPECT_TRUE(is_frattini_cover(GroupHom(z4, z2, {0, 1, 0, 1})));
  // First projection: e, a, b, ab with a the first factor.
  EXPECT_FALSE(is_frattini_cover(GroupHom(v4, z2, {0, 1, 0, 1})));
  for (const auto& [name, g] : group_corpus(8)) {
    std::vector<int> id(static_cast<std::size_t>(g->order()));
    std::iota(id.begin(), id.end(), 0);
    EXPECT_TRUE(is_frattini_cover(GroupHom(g, g, id))) << name;
  }
  EXPECT_EQ(code_of([&] { is_frattini_cover(GroupHom(z4, z2, {0, 0, 0, 0})); }), Errc::NotSurjective);
}

TEST(Group, HomomorphismLawIsChecked) {
  auto z4 = named_group("z4"), z2 = named_group("z2");
  EXPECT_THROW(GroupHom(z4, z2, {0, 1, 1, 0}), Error);
}

TEST(Group, FrattiniCoverAgreesWithOraclesOnAllEpimorphisms) {
  const auto corpus = group_corpus(8);
  int epis = 0;
  for (const auto& [sn, s] : corpus)
    for (const auto& [tn, t] : corpus) {
      if (s->order() % t->order() != 0) continue;
      for (const auto& h : homomorphisms(s, t)) {
        if (!h.is_surjective()) continue;
        ++epis;
        const bool cover = is_frattini_cover(h);
        EXPECT_EQ(cover, !oracle::proper_subgroup_surjects(h)) << sn << " -> " << tn;
        const auto phi = oracle::frattini(*s);
        const auto ker = h.kernel().members;
        EXPECT_EQ(cover, std::includes(phi.begin(), phi.end(), ker.begin(), ker.end())) << sn << " -> " << tn;
      }
    }
  EXPECT_GT(epis, 100);
}

TEST(Group, FrattiniSubgroups) {
  EXPECT_EQ(frattini_subgroup(*named_group("z4")).members, (std::vector<int>{0, 2}));
  EXPECT_EQ(frattini_subgroup(*named_group("z2xz2")).members, (std::vector<int>{0}));
  EXPECT_EQ(frattini_subgroup(*named_group("q8")).size(), 2u);
  for (const auto& [name, g] : group_corpus(12))
    EXPECT_EQ(frattini_subgroup(*g).members, oracle::frattini(*g)) << name;
}

TEST(Group, ProperSupplements) {
  auto v4 = named_group("z2xz2");
  // {e, b} is {0} x Z/2; the answer is Z/2 x {0} = {e, a}.
  auto sup = exists_proper_supplement(*v4, Subgroup{{0, 2}});
  ASSERT_TRUE(sup);
  EXPECT_EQ(sup->members, (std::vector<int>{0, 1}));
  EXPECT_FALSE(exists_proper_supplement(*named_group("z4"), Subgroup{{0, 2}}));
  auto s3 = named_group("s3");
  EXPECT_EQ(code_of([&] { exists_proper_supplement(*s3, Subgroup{{0, 3}}); }), Errc::NotNormal);
  // N = G: the trivial subgroup already supplements.
  auto all = exists_proper_supplement(*s3, whole_group(*s3));
  ASSERT_TRUE(all);
  EXPECT_EQ(all->members, (std::vector<int>{0}));
}

TEST(Group, SupplementsAgreeWithExhaustiveScan) {
  for (const auto& [name, g] : group_corpus(12)) {
    const auto subs = subgroups(*g);
    for (const auto& n : subs) {
      if (!is_normal(*g, n)) continue;
      std::optional<Subgroup> want;
      for (const auto& h : subs) {
        if (static_cast<int>(h.size()) == g->order()) continue;
        if (static_cast<int>(product_set(*g, h.members, n.members).size()) == g->order()) {
          want = h;
          break;
        }
      }
      auto got = exists_proper_supplement(*g, n);
      ASSERT_EQ(got.has_value(), want.has_value()) << name;
      if (got) {
        EXPECT_EQ(got->members, want->members) << name;
      }
    }
  }
}

TEST(Group, SubgroupsOfIndex) {
  auto s3 = named_group("s3");
  EXPECT_EQ(count_subgroups_of_index(*s3, 2), 1u);
  EXPECT_EQ(count_subgroups_of_index(*s3, 3), 3u);
  EXPECT_EQ(count_subgroups_of_index(*s3, 1), 1u);
  EXPECT_EQ(count_subgroups_of_index(*s3, 4), 0u);
  for (const auto& [name, g] : group_corpus(16)) {
    std::size_t total = 0;
    for (int n = 1; n <= g->order(); ++n) total += count_subgroups_of_index(*g, n);
    EXPECT_EQ(total, subgroups(*g).size()) << name;
  }
}

TEST(Group, GreedyGeneratorsGenerate) {
  for (const auto& [name, g] : group_corpus(16)) {
    auto gens = greedy_generators(*g);
    EXPECT_EQ(static_cast<int>(generated_subgroup(*g, gens).size()), g->order()) << name;
  }
}
