#include "gact/galois.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <boost/dynamic_bitset.hpp>

#include "gact/automorphism.hpp"
#include "gact/error.hpp"

namespace gact {

namespace {

using Perm = std::vector<int>;
using Bits = boost::dynamic_bitset<>;

Perm compose(const Perm& p, const Perm& q) {
  Perm r(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[static_cast<std::size_t>(q[i])];
  return r;
}

Perm identity_perm(std::size_t n) {
  Perm p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<int>(i);
  return p;
}

int position(const ElementSet& domain, int x) {
  auto it = std::lower_bound(domain.begin(), domain.end(), x);
  if (it == domain.end() || *it != x) throw Error(Errc::InvalidArgument, "element outside the domain");
  return static_cast<int>(it - domain.begin());
}

bool fixes(const Perm& p, const std::vector<int>& positions) {
  return std::all_of(positions.begin(), positions.end(),
                     [&](int i) { return p[static_cast<std::size_t>(i)] == i; });
}

PermGroup make_group(const ElementSet& domain, std::vector<Perm> elements) {
  std::sort(elements.begin(), elements.end());
  PermGroup out;
  out.domain = domain;
  out.generators = lex_generators(elements);
  out.elements = std::move(elements);
  return out;
}

// Indexed view of a permutation group for subgroup enumeration.
class IndexedGroup {
 public:
  explicit IndexedGroup(const PermGroup& g) : elems_(g.elements) {
    for (std::size_t i = 0; i < elems_.size(); ++i) index_.emplace(elems_[i], static_cast<int>(i));
    const auto n = elems_.size();
    if (n <= 1024) {
      table_.assign(n * n, -1);
    }
  }

  std::size_t size() const { return elems_.size(); }

  int mul(int a, int b) {
    const auto n = elems_.size();
    if (!table_.empty()) {
      int& slot = table_[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)];
      if (slot < 0) slot = lookup(compose(elems_[static_cast<std::size_t>(a)], elems_[static_cast<std::size_t>(b)]));
      return slot;
    }
    return lookup(compose(elems_[static_cast<std::size_t>(a)], elems_[static_cast<std::size_t>(b)]));
  }

  Bits closure(const std::vector<int>& gens) {
    Bits in(size());
    std::vector<int> queue{0};
    in.set(0);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      for (int g : gens) {
        int y = mul(queue[qi], g);
        if (!in.test(static_cast<std::size_t>(y))) {
          in.set(static_cast<std::size_t>(y));
          queue.push_back(y);
        }
      }
    }
    return in;
  }

  const Perm& element(int i) const { return elems_[static_cast<std::size_t>(i)]; }

 private:
  int lookup(const Perm& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw Error(Errc::NotSubgroup, "set of permutations is not closed");
    return it->second;
  }

  const std::vector<Perm>& elems_;
  std::map<Perm, int> index_;
  std::vector<int> table_;
};

std::string cycles(const PermGroup& g, const Perm& p, const GStructure* labels) {
  std::ostringstream os;
  std::vector<char> seen(p.size(), 0);
  bool any = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    os << '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) os << ' ';
      first = false;
      int global = g.domain[j];
      if (labels) os << labels->label(global); else os << global;
      j = static_cast<std::size_t>(p[j]);
    }
    os << ')';
    any = true;
  }
  if (!any) os << "()";
  return os.str();
}

std::string describe(const PermGroup& g, const GStructure& m) {
  std::string s = "<";
  for (std::size_t i = 0; i < g.generators.size(); ++i) {
    if (i) s += ", ";
    s += cycles(g, g.generators[i], &m);
  }
  return s + ">";
}

std::string describe(const ElementSet& b, const GStructure& m) {
  std::string s = "{";
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i) s += ", ";
    s += m.label(b[i]);
  }
  return s + "}";
}

PermGroup alpha_in(const PermGroup& aut, const ElementSet& b) {
  std::vector<int> pos;
  for (int x : b) pos.push_back(position(aut.domain, x));
  std::vector<Perm> keep;
  for (const auto& p : aut.elements)
    if (fixes(p, pos)) keep.push_back(p);
  return make_group(aut.domain, std::move(keep));
}

ElementSet beta_in(const PermGroup& h) {
  ElementSet out;
  for (std::size_t i = 0; i < h.domain.size(); ++i) {
    bool fixed = std::all_of(h.elements.begin(), h.elements.end(),
                             [&](const Perm& p) { return p[i] == static_cast<int>(i); });
    if (fixed) out.push_back(h.domain[i]);
  }
  return out;
}

}  // namespace

void validate_extension(const FiniteExtension& ext) {
  auto check = [&](const ElementSet& s, const char* what) {
    if (!std::is_sorted(s.begin(), s.end()) || std::adjacent_find(s.begin(), s.end()) != s.end())
      throw Error(Errc::InvalidArgument, std::string(what) + " must be sorted without repeats");
    for (int x : s)
      if (!ext.ambient.contains(x)) throw Error(Errc::UnknownElement, std::string(what) + " leaves the universe");
  };
  check(ext.base, "base");
  check(ext.whole, "whole");
  if (!is_subset(ext.base, ext.whole)) throw Error(Errc::InvalidArgument, "base is not contained in whole");
}

bool PermGroup::contains(const std::vector<int>& p) const {
  return std::binary_search(elements.begin(), elements.end(), p);
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (domain != other.domain) return false;
  return std::all_of(elements.begin(), elements.end(), [&](const Perm& p) { return other.contains(p); });
}

PermGroup generate_perm_group(const ElementSet& domain, const std::vector<std::vector<int>>& gens, std::size_t cap) {
  const auto n = domain.size();
  for (const auto& g : gens) {
    Perm sorted = g;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != identity_perm(n)) throw Error(Errc::InvalidArgument, "generator is not a permutation of the domain");
  }
  std::set<Perm> seen{identity_perm(n)};
  std::vector<Perm> queue{identity_perm(n)};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    for (const auto& g : gens) {
      Perm y = compose(queue[qi], g);
      if (seen.insert(y).second) {
        if (seen.size() > cap) throw Error(Errc::BoundExceeded, "permutation group exceeds " + std::to_string(cap));
        queue.push_back(std::move(y));
      }
    }
  }
  return make_group(domain, std::vector<Perm>(seen.begin(), seen.end()));
}

std::vector<std::vector<int>> lex_generators(const std::vector<std::vector<int>>& sorted_elements) {
  std::vector<Perm> gens;
  if (sorted_elements.empty()) return gens;
  std::set<Perm> generated{sorted_elements.front()};
  for (const auto& e : sorted_elements) {
    if (generated.count(e)) continue;
    gens.push_back(e);
    std::vector<Perm> queue(generated.begin(), generated.end());
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      for (const auto& g : gens) {
        Perm y = compose(queue[qi], g);
        if (generated.insert(y).second) queue.push_back(std::move(y));
      }
    }
  }
  return gens;
}

std::vector<PermGroup> perm_subgroups(const PermGroup& g, std::size_t cap) {
  IndexedGroup ig(g);
  const int n = static_cast<int>(ig.size());
  std::vector<std::pair<Bits, int>> cyclic;
  std::set<Bits> cyc_seen;
  for (int i = 0; i < n; ++i) {
    Bits c = ig.closure({i});
    if (cyc_seen.insert(c).second) cyclic.emplace_back(c, i);
  }
  std::map<Bits, std::vector<int>> found;
  std::vector<Bits> queue;
  for (auto& [c, gen] : cyclic) {
    found.emplace(c, std::vector<int>{gen});
    queue.push_back(c);
  }
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const Bits cur = queue[qi];
    const std::vector<int> gens = found.at(cur);
    for (const auto& [c, gen] : cyclic) {
      if (c.is_subset_of(cur)) continue;
      auto next_gens = gens;
      next_gens.push_back(gen);
      Bits j = ig.closure(next_gens);
      if (found.emplace(j, next_gens).second) {
        if (found.size() > cap) throw Error(Errc::BoundExceeded, "more than " + std::to_string(cap) + " subgroups");
        queue.push_back(j);
      }
    }
  }
  std::vector<PermGroup> out;
  for (const auto& [bits, gens] : found) {
    std::vector<Perm> elems;
    for (int i = 0; i < n; ++i)
      if (bits.test(static_cast<std::size_t>(i))) elems.push_back(ig.element(i));
    out.push_back(make_group(g.domain, std::move(elems)));
  }
  std::sort(out.begin(), out.end(), [](const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements < b.elements;
  });
  return out;
}

PermGroup aut_group(const FiniteExtension& ext, std::size_t bound, bool respect_action) {
  validate_extension(ext);
  if (ext.whole.size() > bound)
    throw Error(Errc::BoundExceeded, "extension has " + std::to_string(ext.whole.size()) + " elements, bound is " +
                                         std::to_string(bound));
  GStructure c = respect_action ? restrict_to(ext.ambient, ext.whole) : plain_substructure(ext.ambient, ext.whole);
  AutSearchOptions opts;
  for (int x : ext.base) opts.fixed.push_back(position(ext.whole, x));
  opts.respect_action = respect_action;
  opts.node_cap = 20'000'000;
  auto elems = all_automorphisms(c, opts, kPermGroupCap);
  return make_group(ext.whole, std::move(elems));
}

PermGroup galois_alpha(const FiniteExtension& ext, const ElementSet& b, std::size_t bound) {
  validate_extension(ext);
  if (!is_subset(ext.base, b) || !is_subset(b, ext.whole))
    throw Error(Errc::InvalidArgument, "B must lie between the base and the whole");
  return alpha_in(aut_group(ext, bound), b);
}

ElementSet galois_beta(const FiniteExtension& ext, const PermGroup& h, std::size_t bound) {
  PermGroup aut = aut_group(ext, bound);
  if (h.domain != aut.domain || h.elements.empty() || !h.is_subgroup_of(aut))
    throw Error(Errc::NotSubgroup, "H is not contained in Aut(C/A)");
  if (!std::is_sorted(h.elements.begin(), h.elements.end()) ||
      std::adjacent_find(h.elements.begin(), h.elements.end()) != h.elements.end())
    throw Error(Errc::NotSubgroup, "elements must be sorted without repeats");
  for (const auto& p : h.elements)
    for (const auto& q : h.elements)
      if (!h.contains(compose(p, q))) throw Error(Errc::NotSubgroup, "H is not closed under composition");
  return beta_in(h);
}

GaloisReport galois_connection_check(const FiniteExtension& ext, std::size_t bound) {
  PermGroup aut = aut_group(ext, bound);
  GaloisReport r;
  r.aut_order = aut.order();
  const ElementSet free = set_difference(ext.whole, ext.base);
  const std::size_t subsets = std::size_t{1} << free.size();
  r.intermediates = subsets;
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    ElementSet b = ext.base;
    for (std::size_t i = 0; i < free.size(); ++i)
      if (mask >> i & 1U) b.push_back(free[i]);
    b = make_set(std::move(b));
    PermGroup a = alpha_in(aut, b);
    ElementSet fixed = beta_in(a);
    if (alpha_in(aut, fixed).elements != a.elements) {
      r.alpha_law = false;
      r.law_failures.push_back("alpha beta alpha differs from alpha at B = " + describe(b, ext.ambient));
    }
    if (fixed != b) {
      r.full_correspondence = false;
      r.correspondence_failures.push_back("beta alpha(B) = " + describe(fixed, ext.ambient) + " for B = " +
                                          describe(b, ext.ambient));
    }
  }
  auto subs = perm_subgroups(aut);
  r.subgroups = subs.size();
  for (const auto& h : subs) {
    ElementSet fixed = beta_in(h);
    PermGroup back = alpha_in(aut, fixed);
    if (beta_in(back) != fixed) {
      r.beta_law = false;
      r.law_failures.push_back("beta alpha beta differs from beta at H = " + describe(h, ext.ambient));
    }
    if (back.elements != h.elements) {
      r.full_correspondence = false;
      r.correspondence_failures.push_back("alpha beta(H) has order " + std::to_string(back.order()) + " for H = " +
                                          describe(h, ext.ambient) + " of order " + std::to_string(h.order()));
    }
  }
  return r;
}

namespace {

void check_closed_subset(const GStructure& ambient, const ElementSet& n) {
  for (int x : n)
    if (!ambient.contains(x)) throw Error(Errc::UnknownElement, "N leaves the universe");
  if (orbit(ambient, n) != make_set(n)) throw Error(Errc::InvalidArgument, "N is not G-closed");
}

bool orbit_check(const GStructure& ambient, const ElementSet& inv, int b) {
  ElementSet aut_orbit;
  for (int y = 0; y < ambient.size(); ++y) {
    AutSearchOptions opts;
    opts.fixed = inv;
    opts.prescribed = {{b, y}};
    opts.node_cap = 20'000'000;
    if (find_automorphism(ambient, opts)) aut_orbit.push_back(y);
  }
  const int one[] = {b};
  return aut_orbit == orbit(ambient, one);
}

ElementSet invariants_of(const GStructure& ambient, const ElementSet& n) {
  ElementSet inv;
  for (int x : n) {
    bool fixed = true;
    for (int g = 0; g < ambient.group().order() && fixed; ++g) fixed = ambient.act(g, x) == x;
    if (fixed) inv.push_back(x);
  }
  return make_set(std::move(inv));
}

}  // namespace

bool n_galois_orbit_check(const GStructure& ambient, const ElementSet& n, int b, std::size_t bound) {
  if (static_cast<std::size_t>(ambient.size()) > bound)
    throw Error(Errc::BoundExceeded, "ambient has more than " + std::to_string(bound) + " elements");
  check_closed_subset(ambient, n);
  if (!std::binary_search(n.begin(), n.end(), b)) throw Error(Errc::InvalidArgument, "b is not in N");
  return orbit_check(ambient, invariants_of(ambient, n), b);
}

std::vector<int> n_galois_orbit_failures(const GStructure& ambient, const ElementSet& n, std::size_t bound) {
  if (static_cast<std::size_t>(ambient.size()) > bound)
    throw Error(Errc::BoundExceeded, "ambient has more than " + std::to_string(bound) + " elements");
  check_closed_subset(ambient, n);
  const ElementSet inv = invariants_of(ambient, n);
  std::vector<int> out;
  for (int b : make_set(n))
    if (!orbit_check(ambient, inv, b)) out.push_back(b);
  return out;
}

bool generated_by_action_check(const GStructure& f, const ElementSet& base, std::size_t bound) {
  if (make_set(base) != invariants(f)) throw Error(Errc::InvalidArgument, "base must be the invariants of F");
  ElementSet all;
  for (int x = 0; x < f.size(); ++x) all.push_back(x);
  PermGroup aut = aut_group(FiniteExtension{f, make_set(base), all}, bound);
  PermGroup h = generate_perm_group(all, f.action());
  return h.order() == aut.order();
}

std::string perm_to_string(const std::vector<int>& p) {
  PermGroup g;
  g.domain = identity_perm(p.size());
  return cycles(g, p, nullptr);
}

}  // namespace gact
