#include "gact/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include <boost/dynamic_bitset.hpp>

#include "gact/error.hpp"

namespace gact {

namespace {

using Bits = boost::dynamic_bitset<>;

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

bool reserved_name(const std::string& s) {
  return s == "E" || s == "A" || s == "R" || s == "true" || s == "false";
}

std::vector<int> bits_to_list(const Bits& b) {
  std::vector<int> out;
  out.reserve(b.count());
  for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) out.push_back(static_cast<int>(i));
  return out;
}

Bits list_to_bits(int n, std::span<const int> xs) {
  Bits b(static_cast<std::size_t>(n));
  for (int x : xs) b.set(static_cast<std::size_t>(x));
  return b;
}

// Closure of `start` under right multiplication by the generators.
Bits close_under(const FiniteGroup& g, Bits start, std::span<const int> gens) {
  std::vector<int> queue = bits_to_list(start);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int x = queue[qi];
    for (int s : gens) {
      int y = g.mul(x, s);
      if (!start.test(static_cast<std::size_t>(y))) {
        start.set(static_cast<std::size_t>(y));
        queue.push_back(y);
      }
    }
  }
  return start;
}

std::string power_name(std::string_view base, int k) {
  if (k == 0) return "";
  if (k == 1) return std::string(base);
  return std::string(base) + std::to_string(k);
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::string> names, std::vector<std::vector<int>> table)
    : names_(std::move(names)), table_(std::move(table)) {
  const int n = static_cast<int>(names_.size());
  if (n < 1) throw Error(Errc::InvalidGroup, "group must have at least one element");
  if (n > kMaxOrder) throw Error(Errc::InvalidGroup, "group order exceeds " + std::to_string(kMaxOrder));
  std::set<std::string> seen;
  for (const auto& s : names_) {
    if (!is_identifier(s) || reserved_name(s))
      throw Error(Errc::InvalidGroup, "invalid element name '" + s + "'");
    if (!seen.insert(s).second) throw Error(Errc::InvalidGroup, "duplicate element name '" + s + "'");
  }
  if (static_cast<int>(table_.size()) != n) throw Error(Errc::InvalidGroup, "table has wrong number of rows");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) throw Error(Errc::InvalidGroup, "table row has wrong length");
    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    for (int v : row) {
      if (v < 0 || v >= n) throw Error(Errc::InvalidGroup, "table entry out of range");
      if (hit[static_cast<std::size_t>(v)]++) throw Error(Errc::InvalidGroup, "table row is not a permutation");
    }
  }
  for (int c = 0; c < n; ++c) {
    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    for (int r = 0; r < n; ++r)
      if (hit[static_cast<std::size_t>(mul(r, c))]++)
        throw Error(Errc::InvalidGroup, "table column is not a permutation");
  }
  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw Error(Errc::InvalidGroup, "table has no identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ab = mul(a, b);
      for (int c = 0; c < n; ++c)
        if (mul(ab, c) != mul(a, mul(b, c))) throw Error(Errc::InvalidGroup, "table is not associative");
    }
  inverse_.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (mul(a, b) == identity_) inverse_[static_cast<std::size_t>(a)] = b;
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

std::optional<int> FiniteGroup::find(std::string_view name) const {
  for (int i = 0; i < order(); ++i)
    if (names_[static_cast<std::size_t>(i)] == name) return i;
  return std::nullopt;
}

GroupPtr make_group(std::vector<std::string> names, std::vector<std::vector<int>> table) {
  return std::make_shared<const FiniteGroup>(std::move(names), std::move(table));
}

GroupPtr cyclic_group(int n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "cyclic group order must be positive");
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(i == 0 ? "e" : (n == 2 ? "s" : power_name("r", i)));
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  return make_group(std::move(names), std::move(t));
}

GroupPtr dihedral_group(int n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "dihedral group parameter must be positive");
  // element index j*n + i stands for s^j r^i, and r^i s = s r^{-i}
  const int order = 2 * n;
  std::vector<std::string> names;
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < n; ++i) {
      std::string nm = (j ? "s" : "") + power_name("r", i);
      names.push_back(nm.empty() ? "e" : nm);
    }
  std::vector<std::vector<int>> t(static_cast<std::size_t>(order), std::vector<int>(static_cast<std::size_t>(order)));
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y) {
      int a = x / n, b = x % n, c = y / n, d = y % n;
      int rot = ((c ? -b : b) + d) % n;
      if (rot < 0) rot += n;
      t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = ((a + c) % 2) * n + rot;
    }
  return make_group(std::move(names), std::move(t));
}

GroupPtr quaternion_group() {
  // index = 2*unit + sign with units 1, i, j, k
  static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_mul[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::string> names = {"e", "m", "i", "mi", "j", "mj", "k", "mk"};
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      int u = unit_mul[x / 2][y / 2];
      int s = (x % 2) ^ (y % 2) ^ sign_mul[x / 2][y / 2];
      t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = 2 * u + s;
    }
  return make_group(std::move(names), std::move(t));
}

GroupPtr elementary_abelian_2_group(int k) {
  if (k < 0 || k > 8) throw Error(Errc::InvalidArgument, "rank out of range");
  const int n = 1 << k;
  std::vector<std::string> names;
  for (int m = 0; m < n; ++m) {
    std::string nm;
    for (int b = 0; b < k; ++b)
      if (m & (1 << b)) nm.push_back(static_cast<char>('a' + b));
    names.push_back(nm.empty() ? "e" : nm);
  }
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = a ^ b;
  return make_group(std::move(names), std::move(t));
}

GroupPtr direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const int ng = g.order(), nh = h.order();
  // index = a + ng*b for (a, b)
  std::vector<std::string> names;
  for (int b = 0; b < nh; ++b)
    for (int a = 0; a < ng; ++a) {
      if (a == g.identity() && b == h.identity())
        names.push_back("e");
      else
        names.push_back(g.name(a) + "_" + h.name(b));
    }
  const int n = ng * nh;
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
          g.mul(x % ng, y % ng) + ng * h.mul(x / ng, y / ng);
  return make_group(std::move(names), std::move(t));
}

GroupPtr group_from_permutations(const std::vector<std::vector<int>>& generators, std::string_view prefix) {
  if (generators.empty()) return cyclic_group(1);
  const std::size_t deg = generators.front().size();
  for (const auto& p : generators) {
    if (p.size() != deg) throw Error(Errc::InvalidArgument, "generators have different degrees");
    std::vector<int> s = p;
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < deg; ++i)
      if (s[i] != static_cast<int>(i)) throw Error(Errc::InvalidArgument, "generator is not a permutation");
  }
  std::vector<int> id(deg);
  std::iota(id.begin(), id.end(), 0);
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> elems;
  index[id] = 0;
  elems.push_back(id);
  auto compose = [deg](const std::vector<int>& p, const std::vector<int>& q) {
    std::vector<int> r(deg);
    for (std::size_t i = 0; i < deg; ++i) r[i] = p[static_cast<std::size_t>(q[i])];
    return r;
  };
  for (std::size_t qi = 0; qi < elems.size(); ++qi) {
    for (const auto& s : generators) {
      auto r = compose(elems[qi], s);
      if (!index.count(r)) {
        if (static_cast<int>(elems.size()) >= FiniteGroup::kMaxOrder)
          throw Error(Errc::InvalidGroup, "generated group is too large");
        index[r] = static_cast<int>(elems.size());
        elems.push_back(std::move(r));
      }
    }
  }
  const int n = static_cast<int>(elems.size());
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(i == 0 ? "e" : std::string(prefix) + std::to_string(i));
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          index.at(compose(elems[static_cast<std::size_t>(a)], elems[static_cast<std::size_t>(b)]));
  return make_group(std::move(names), std::move(t));
}

GroupPtr symmetric_group(int n) {
  if (n < 1 || n > 5) throw Error(Errc::InvalidArgument, "symmetric group degree must be in 1..5");
  if (n == 3) return dihedral_group(3);
  if (n == 1) return cyclic_group(1);
  std::vector<int> swap(static_cast<std::size_t>(n)), cyc(static_cast<std::size_t>(n));
  std::iota(swap.begin(), swap.end(), 0);
  std::swap(swap[0], swap[1]);
  for (int i = 0; i < n; ++i) cyc[static_cast<std::size_t>(i)] = (i + 1) % n;
  return group_from_permutations({swap, cyc});
}

GroupPtr alternating_group(int n) {
  if (n < 1 || n > 5) throw Error(Errc::InvalidArgument, "alternating group degree must be in 1..5");
  if (n < 3) return cyclic_group(1);
  std::vector<std::vector<int>> gens;
  for (int i = 2; i < n; ++i) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    p[0] = 1;
    p[1] = i;
    p[static_cast<std::size_t>(i)] = 0;
    gens.push_back(p);
  }
  return group_from_permutations(gens);
}

GroupPtr named_group(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find('x', start);
    parts.push_back(s.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  auto fail = [&]() -> GroupPtr { throw Error(Errc::InvalidArgument, "unknown group '" + std::string(name) + "'"); };
  auto number = [&](const std::string& p) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(p.data() + 1, p.data() + p.size(), v);
    if (ec != std::errc() || ptr != p.data() + p.size() || p.size() < 2) fail();
    return v;
  };
  auto single = [&](const std::string& p) -> GroupPtr {
    if (p.empty()) return fail();
    if (p == "q8") return quaternion_group();
    int v = number(p);
    switch (p[0]) {
      case 'z':
        if (v < 1 || v > FiniteGroup::kMaxOrder) return fail();
        return cyclic_group(v);
      case 'd':
        if (v < 1 || 2 * v > FiniteGroup::kMaxOrder) return fail();
        return dihedral_group(v);
      case 's':
        if (v < 1 || v > 5) return fail();
        return symmetric_group(v);
      case 'a':
        if (v < 1 || v > 5) return fail();
        return alternating_group(v);
      default:
        return fail();
    }
  };
  if (parts.size() > 1 && std::all_of(parts.begin(), parts.end(), [](const std::string& p) { return p == "z2"; }))
    return elementary_abelian_2_group(static_cast<int>(parts.size()));
  GroupPtr g = single(parts[0]);
  for (std::size_t i = 1; i < parts.size(); ++i) {
    GroupPtr h = single(parts[i]);
    if (g->order() * h->order() > FiniteGroup::kMaxOrder) return fail();
    g = direct_product(*g, *h);
  }
  return g;
}

std::vector<std::pair<std::string, GroupPtr>> group_corpus(int max_order) {
  static const char* const kNames[] = {"z1",   "z2",    "z3",     "z4",    "z2xz2", "z5",   "z6",  "s3",
                                       "z7",   "z8",    "z2xz4",  "z2xz2xz2", "d4", "q8",   "z9",  "z3xz3",
                                       "z10",  "d5",    "z11",    "z12",   "z2xz6", "d6",   "a4",  "z13",
                                       "z14",  "d7",    "z15",    "z16",   "z4xz4", "z2xz8", "z2xz2xz2xz2", "d8",
                                       "z2xd4", "z2xq8", "s4",    "z3xs3"};
  std::vector<std::pair<std::string, GroupPtr>> out;
  for (const char* nm : kNames) {
    GroupPtr g = named_group(nm);
    if (g->order() <= max_order) out.emplace_back(nm, std::move(g));
  }
  return out;
}

bool Subgroup::contains(int g) const { return std::binary_search(members.begin(), members.end(), g); }

Subgroup generated_subgroup(const FiniteGroup& g, std::span<const int> generators) {
  for (int x : generators)
    if (!g.contains(x)) throw Error(Errc::UnknownElement, "generator out of range");
  Bits start(static_cast<std::size_t>(g.order()));
  start.set(static_cast<std::size_t>(g.identity()));
  return Subgroup{bits_to_list(close_under(g, std::move(start), generators))};
}

bool is_subgroup(const FiniteGroup& g, std::span<const int> members) {
  if (members.empty()) return false;
  for (int x : members)
    if (!g.contains(x)) return false;
  Bits b = list_to_bits(g.order(), members);
  if (!b.test(static_cast<std::size_t>(g.identity()))) return false;
  for (int x : members) {
    if (!b.test(static_cast<std::size_t>(g.inverse(x)))) return false;
    for (int y : members)
      if (!b.test(static_cast<std::size_t>(g.mul(x, y)))) return false;
  }
  return true;
}

Subgroup trivial_subgroup(const FiniteGroup& g) { return Subgroup{{g.identity()}}; }

Subgroup whole_group(const FiniteGroup& g) {
  Subgroup s;
  s.members.resize(static_cast<std::size_t>(g.order()));
  std::iota(s.members.begin(), s.members.end(), 0);
  return s;
}

std::vector<Subgroup> subgroups(const FiniteGroup& g) {
  // Every subgroup is the join of the cyclic subgroups it contains, so closing
  // the set of cyclic subgroups under joins with a cyclic subgroup is complete.
  const int n = g.order();
  struct Node {
    Bits members;
    std::vector<int> gens;
  };
  std::map<std::vector<int>, std::size_t> seen;
  std::vector<Node> nodes;
  std::vector<int> cyclic_gens;
  std::vector<Bits> cyclic_sets;
  for (int x = 0; x < n; ++x) {
    int gx[] = {x};
    Subgroup c = generated_subgroup(g, gx);
    if (seen.emplace(c.members, nodes.size()).second) {
      nodes.push_back({list_to_bits(n, c.members), {x}});
      cyclic_gens.push_back(x);
      cyclic_sets.push_back(nodes.back().members);
    }
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t c = 0; c < cyclic_gens.size(); ++c) {
      if (cyclic_sets[c].is_subset_of(nodes[i].members)) continue;
      std::vector<int> gens = nodes[i].gens;
      gens.push_back(cyclic_gens[c]);
      Bits joined = close_under(g, nodes[i].members, gens);
      auto key = bits_to_list(joined);
      if (seen.emplace(key, nodes.size()).second) nodes.push_back({std::move(joined), std::move(gens)});
    }
  }
  std::vector<Subgroup> out;
  out.reserve(nodes.size());
  for (const auto& nd : nodes) out.push_back(Subgroup{bits_to_list(nd.members)});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> cosets(const FiniteGroup& g, const Subgroup& h) {
  if (!is_subgroup(g, h.members)) throw Error(Errc::NotSubgroup, "not a subgroup");
  std::vector<int> owner(static_cast<std::size_t>(g.order()), -1);
  std::vector<std::vector<int>> out;
  // identity first, then by smallest member; the identity coset is h itself
  std::vector<int> order(static_cast<std::size_t>(g.order()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_partition(order.begin(), order.end(), [&](int x) { return x == g.identity(); });
  for (int x : order) {
    if (owner[static_cast<std::size_t>(x)] >= 0) continue;
    std::vector<int> block;
    for (int y : h.members) block.push_back(g.mul(x, y));
    std::sort(block.begin(), block.end());
    for (int y : block) owner[static_cast<std::size_t>(y)] = static_cast<int>(out.size());
    out.push_back(std::move(block));
  }
  return out;
}

bool is_normal(const FiniteGroup& g, const Subgroup& n) {
  for (int x = 0; x < g.order(); ++x)
    for (int y : n.members)
      if (!n.contains(g.mul(g.mul(x, y), g.inverse(x)))) return false;
  return true;
}

std::vector<int> product_set(const FiniteGroup& g, std::span<const int> a, std::span<const int> b) {
  Bits out(static_cast<std::size_t>(g.order()));
  for (int x : a)
    for (int y : b) out.set(static_cast<std::size_t>(g.mul(x, y)));
  return bits_to_list(out);
}

std::vector<Subgroup> maximal_subgroups(const FiniteGroup& g) {
  auto subs = subgroups(g);
  std::vector<Subgroup> out;
  const std::size_t n = static_cast<std::size_t>(g.order());
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (subs[i].size() == n) continue;
    bool maximal = true;
    for (std::size_t j = 0; j < subs.size() && maximal; ++j) {
      if (i == j || subs[j].size() == n || subs[j].size() <= subs[i].size()) continue;
      if (std::includes(subs[j].members.begin(), subs[j].members.end(), subs[i].members.begin(),
                        subs[i].members.end()))
        maximal = false;
    }
    if (maximal) out.push_back(subs[i]);
  }
  return out;
}

Subgroup frattini_subgroup(const FiniteGroup& g) {
  Subgroup phi = whole_group(g);
  for (const auto& m : maximal_subgroups(g)) {
    std::vector<int> meet;
    std::set_intersection(phi.members.begin(), phi.members.end(), m.members.begin(), m.members.end(),
                          std::back_inserter(meet));
    phi.members = std::move(meet);
  }
  return phi;
}

std::optional<Subgroup> exists_proper_supplement(const FiniteGroup& g, const Subgroup& n) {
  if (!is_subgroup(g, n.members)) throw Error(Errc::NotSubgroup, "not a subgroup");
  if (!is_normal(g, n)) throw Error(Errc::NotNormal, "subgroup is not normal");
  for (const auto& h : subgroups(g)) {
    if (static_cast<int>(h.size()) == g.order()) continue;
    if (static_cast<int>(product_set(g, h.members, n.members).size()) == g.order()) return h;
  }
  return std::nullopt;
}

std::size_t count_subgroups_of_index(const FiniteGroup& g, int index) {
  if (index < 1) throw Error(Errc::InvalidArgument, "index must be positive");
  if (g.order() % index != 0) return 0;
  const auto target = static_cast<std::size_t>(g.order() / index);
  std::size_t count = 0;
  for (const auto& h : subgroups(g))
    if (h.size() == target) ++count;
  return count;
}

GroupHom::GroupHom(GroupPtr source, GroupPtr target, std::vector<int> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  if (!source_ || !target_) throw Error(Errc::InvalidArgument, "null group");
  if (static_cast<int>(map_.size()) != source_->order())
    throw Error(Errc::InvalidArgument, "homomorphism map has wrong length");
  for (int v : map_)
    if (!target_->contains(v)) throw Error(Errc::InvalidArgument, "homomorphism image out of range");
  if ((*this)(source_->identity()) != target_->identity())
    throw Error(Errc::InvalidArgument, "homomorphism does not preserve the identity");
  for (int a = 0; a < source_->order(); ++a)
    for (int b = 0; b < source_->order(); ++b)
      if ((*this)(source_->mul(a, b)) != target_->mul((*this)(a), (*this)(b)))
        throw Error(Errc::InvalidArgument, "map is not a homomorphism");
}

std::vector<int> GroupHom::image(std::span<const int> members) const {
  Bits out(static_cast<std::size_t>(target_->order()));
  for (int x : members) out.set(static_cast<std::size_t>((*this)(x)));
  return bits_to_list(out);
}

Subgroup GroupHom::kernel() const {
  Subgroup k;
  for (int x = 0; x < source_->order(); ++x)
    if ((*this)(x) == target_->identity()) k.members.push_back(x);
  return k;
}

bool GroupHom::is_surjective() const {
  return static_cast<int>(image(whole_group(*source_).members).size()) == target_->order();
}

bool is_frattini_cover(const GroupHom& pi) {
  if (!pi.is_surjective()) throw Error(Errc::NotSurjective, "homomorphism is not surjective");
  const FiniteGroup& g = pi.source();
  bool cover = true;
  for (const auto& h : subgroups(g)) {
    if (static_cast<int>(h.size()) == g.order()) continue;
    if (static_cast<int>(pi.image(h.members).size()) == pi.target().order()) {
      cover = false;
      break;
    }
  }
  Subgroup ker = pi.kernel();
  Subgroup phi = frattini_subgroup(g);
  bool via_frattini = std::includes(phi.members.begin(), phi.members.end(), ker.members.begin(), ker.members.end());
  if (cover != via_frattini)
    throw std::logic_error("Frattini cover criteria disagree");
  return cover;
}

std::vector<int> greedy_generators(const FiniteGroup& g) {
  std::vector<int> gens;
  Bits span(static_cast<std::size_t>(g.order()));
  span.set(static_cast<std::size_t>(g.identity()));
  for (int x = 0; x < g.order(); ++x) {
    if (span.test(static_cast<std::size_t>(x))) continue;
    gens.push_back(x);
    span = close_under(g, span, gens);
  }
  return gens;
}

std::vector<GroupHom> homomorphisms(const GroupPtr& source, const GroupPtr& target) {
  const FiniteGroup& g = *source;
  const FiniteGroup& h = *target;
  const auto gens = greedy_generators(g);
  // words: each element reached as prev * gen
  std::vector<int> parent(static_cast<std::size_t>(g.order()), -1), via(static_cast<std::size_t>(g.order()), -1);
  std::vector<int> bfs{g.identity()};
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  seen[static_cast<std::size_t>(g.identity())] = 1;
  for (std::size_t qi = 0; qi < bfs.size(); ++qi)
    for (std::size_t k = 0; k < gens.size(); ++k) {
      int y = g.mul(bfs[qi], gens[k]);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        parent[static_cast<std::size_t>(y)] = bfs[qi];
        via[static_cast<std::size_t>(y)] = static_cast<int>(k);
        bfs.push_back(y);
      }
    }
  std::vector<std::vector<int>> maps;
  std::vector<int> choice(gens.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == gens.size()) {
      std::vector<int> m(static_cast<std::size_t>(g.order()), -1);
      m[static_cast<std::size_t>(g.identity())] = h.identity();
      for (std::size_t i = 1; i < bfs.size(); ++i) {
        int y = bfs[i];
        m[static_cast<std::size_t>(y)] =
            h.mul(m[static_cast<std::size_t>(parent[static_cast<std::size_t>(y)])],
                  choice[static_cast<std::size_t>(via[static_cast<std::size_t>(y)])]);
      }
      for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
          if (m[static_cast<std::size_t>(g.mul(a, b))] !=
              h.mul(m[static_cast<std::size_t>(a)], m[static_cast<std::size_t>(b)]))
            return;
      maps.push_back(std::move(m));
      return;
    }
    const int ord = g.element_order(gens[k]);
    for (int t = 0; t < h.order(); ++t) {
      if (ord % h.element_order(t) != 0) continue;
      choice[k] = t;
      rec(k + 1);
    }
  };
  rec(0);
  std::sort(maps.begin(), maps.end());
  std::vector<GroupHom> out;
  out.reserve(maps.size());
  for (auto& m : maps) out.emplace_back(source, target, std::move(m));
  return out;
}

}  // namespace gact
