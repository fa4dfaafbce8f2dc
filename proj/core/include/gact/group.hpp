#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gact {

/// A finite group given by its multiplication table. Elements are the indices
/// 0..order-1; `mul(a, b)` is the table entry in row a, column b.
class FiniteGroup {
 public:
  /// Validates the Latin-square, identity and associativity laws.
  FiniteGroup(std::vector<std::string> names, std::vector<std::vector<int>> table);

  int order() const noexcept { return static_cast<int>(names_.size()); }
  int identity() const noexcept { return identity_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int inverse(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  int element_order(int a) const;

  const std::string& name(int a) const { return names_[static_cast<std::size_t>(a)]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<std::vector<int>>& table() const noexcept { return table_; }
  std::optional<int> find(std::string_view name) const;

  bool contains(int a) const noexcept { return a >= 0 && a < order(); }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.names_ == b.names_ && a.table_ == b.table_;
  }

  static constexpr int kMaxOrder = 256;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  int identity_ = 0;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

GroupPtr make_group(std::vector<std::string> names, std::vector<std::vector<int>> table);

GroupPtr cyclic_group(int n);
/// Dihedral group of order 2n; elements s^j r^i named e, r, r2, .., s, sr, sr2, ..
GroupPtr dihedral_group(int n);
GroupPtr quaternion_group();
/// Elementary abelian 2-group of rank k; element names are subsets of a, b, c, ..
GroupPtr elementary_abelian_2_group(int k);
GroupPtr direct_product(const FiniteGroup& g, const FiniteGroup& h);
/// Closure of the given permutations (all of the same degree) under composition.
/// Element 0 is the identity; `(p * q)(x) = p(q(x))`.
GroupPtr group_from_permutations(const std::vector<std::vector<int>>& generators,
                                 std::string_view prefix = "p");
GroupPtr symmetric_group(int n);
GroupPtr alternating_group(int n);

/// Resolves "z<n>", "d<n>", "s<n>", "a<n>", "q8", and products such as
/// "z2xz2" or "z3xs3". Throws Errc::InvalidArgument for unknown names.
GroupPtr named_group(std::string_view name);

/// The groups of order <= max_order exercised by the test corpora.
std::vector<std::pair<std::string, GroupPtr>> group_corpus(int max_order);

/// A subgroup, represented by its sorted member list. Ordered canonically:
/// by size, then lexicographically by members.
struct Subgroup {
  std::vector<int> members;

  std::size_t size() const noexcept { return members.size(); }
  bool contains(int g) const;

  friend bool operator==(const Subgroup&, const Subgroup&) = default;
  friend std::strong_ordering operator<=>(const Subgroup& a, const Subgroup& b) {
    if (auto c = a.members.size() <=> b.members.size(); c != 0) return c;
    return a.members <=> b.members;
  }
};

Subgroup generated_subgroup(const FiniteGroup& g, std::span<const int> generators);
bool is_subgroup(const FiniteGroup& g, std::span<const int> members);
Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup whole_group(const FiniteGroup& g);

/// Every subgroup exactly once, in canonical order.
std::vector<Subgroup> subgroups(const FiniteGroup& g);

/// Left cosets gH as sorted member lists; the coset of the identity comes first,
/// the rest are ordered by their smallest member.
std::vector<std::vector<int>> cosets(const FiniteGroup& g, const Subgroup& h);

bool is_normal(const FiniteGroup& g, const Subgroup& n);
/// The set {a*b : a in A, b in B}, sorted.
std::vector<int> product_set(const FiniteGroup& g, std::span<const int> a, std::span<const int> b);

std::vector<Subgroup> maximal_subgroups(const FiniteGroup& g);
/// Intersection of the maximal subgroups (the whole group when it is trivial).
Subgroup frattini_subgroup(const FiniteGroup& g);

std::optional<Subgroup> exists_proper_supplement(const FiniteGroup& g, const Subgroup& n);
std::size_t count_subgroups_of_index(const FiniteGroup& g, int index);

/// A homomorphism between finite groups; construction checks the
/// homomorphism law on all pairs.
class GroupHom {
 public:
  GroupHom(GroupPtr source, GroupPtr target, std::vector<int> map);

  const FiniteGroup& source() const noexcept { return *source_; }
  const FiniteGroup& target() const noexcept { return *target_; }
  const GroupPtr& source_ptr() const noexcept { return source_; }
  const GroupPtr& target_ptr() const noexcept { return target_; }
  int operator()(int g) const { return map_[static_cast<std::size_t>(g)]; }
  const std::vector<int>& map() const noexcept { return map_; }

  std::vector<int> image(std::span<const int> members) const;
  Subgroup kernel() const;
  bool is_surjective() const;

 private:
  GroupPtr source_;
  GroupPtr target_;
  std::vector<int> map_;
};

/// True iff no proper subgroup of the source maps onto the target. The
/// kernel-inside-Frattini criterion is evaluated as well and must agree.
/// Throws Errc::NotSurjective.
bool is_frattini_cover(const GroupHom& pi);

/// All homomorphisms source -> target, ordered lexicographically by map.
std::vector<GroupHom> homomorphisms(const GroupPtr& source, const GroupPtr& target);

/// A minimal generating set chosen greedily in element order.
std::vector<int> greedy_generators(const FiniteGroup& g);

}  // namespace gact
