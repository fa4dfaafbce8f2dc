#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace gact::oracle {

std::vector<std::vector<int>> subgroup_scan(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    if (!(mask >> g.identity() & 1U)) continue;
    bool closed = true;
    for (int a = 0; a < n && closed; ++a)
      for (int b = 0; b < n && closed; ++b)
        if ((mask >> a & 1U) && (mask >> b & 1U) && !(mask >> g.mul(a, b) & 1U)) closed = false;
    if (!closed) continue;
    std::vector<int> members;
    for (int a = 0; a < n; ++a)
      if (mask >> a & 1U) members.push_back(a);
    out.push_back(members);
  }
  return out;
}

bool proper_subgroup_surjects(const GroupHom& pi) {
  for (const auto& h : subgroup_scan(pi.source())) {
    if (static_cast<int>(h.size()) == pi.source().order()) continue;
    std::set<int> img;
    for (int x : h) img.insert(pi(x));
    if (static_cast<int>(img.size()) == pi.target().order()) return true;
  }
  return false;
}

std::vector<int> frattini(const FiniteGroup& g) {
  const auto subs = subgroup_scan(g);
  std::vector<int> out;
  for (int x = 0; x < g.order(); ++x) out.push_back(x);
  for (const auto& h : subs) {
    if (static_cast<int>(h.size()) == g.order()) continue;
    bool maximal = true;
    for (const auto& k : subs)
      if (k.size() > h.size() && static_cast<int>(k.size()) < g.order() &&
          std::includes(k.begin(), k.end(), h.begin(), h.end()))
        maximal = false;
    if (!maximal) continue;
    std::vector<int> keep;
    std::set_intersection(out.begin(), out.end(), h.begin(), h.end(), std::back_inserter(keep));
    out = keep;
  }
  return out;
}

std::vector<Configuration> configurations(const TermSet& terms) {
  const int s = terms.size();
  const int ng = terms.group().order();
  std::vector<Configuration> out;
  std::vector<int> cls(static_cast<std::size_t>(s), 0);
  std::function<void(int, int)> partitions = [&](int i, int used) {
    if (i == s) {
      for (int k = 0; k < ng; ++k)
        for (int a = 0; a < s; ++a)
          for (int b = 0; b < s; ++b)
            if ((cls[static_cast<std::size_t>(a)] == cls[static_cast<std::size_t>(b)]) !=
                (cls[static_cast<std::size_t>(terms.act(k, a))] == cls[static_cast<std::size_t>(terms.act(k, b))]))
              return;
      // Class pairs and the induced action on classes.
      std::vector<std::pair<int, int>> pairs;
      for (int c = 0; c < used; ++c)
        for (int d = c + 1; d < used; ++d) pairs.emplace_back(c, d);
      std::vector<int> rep(static_cast<std::size_t>(used), -1);
      for (int a = 0; a < s; ++a)
        if (rep[static_cast<std::size_t>(cls[static_cast<std::size_t>(a)])] < 0) rep[static_cast<std::size_t>(cls[static_cast<std::size_t>(a)])] = a;
      auto move = [&](int k, int c) { return cls[static_cast<std::size_t>(terms.act(k, rep[static_cast<std::size_t>(c)]))]; };
      for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs.size()); ++mask) {
        auto edge = [&](int c, int d) {
          if (c == d) return false;
          if (c > d) std::swap(c, d);
          auto it = std::find(pairs.begin(), pairs.end(), std::make_pair(c, d));
          return (mask >> (it - pairs.begin()) & 1U) != 0;
        };
        bool ok = true;
        for (int k = 0; k < ng && ok; ++k)
          for (int c = 0; c < used && ok; ++c)
            for (int d = 0; d < used && ok; ++d)
              if (edge(c, d) != edge(move(k, c), move(k, d))) ok = false;
        if (!ok) continue;
        Configuration q(terms);
        for (int a = 0; a < s; ++a)
          for (int b = 0; b < s; ++b) {
            const int c = cls[static_cast<std::size_t>(a)], d = cls[static_cast<std::size_t>(b)];
            q.set_directed(a, b, c == d ? Entry::Eq : edge(c, d) ? Entry::R : Entry::NR);
          }
        out.push_back(q);
      }
      return;
    }
    for (int c = 0; c <= used; ++c) {
      cls[static_cast<std::size_t>(i)] = c;
      partitions(i + 1, std::max(used, c + 1));
    }
  };
  partitions(0, 0);
  std::sort(out.begin(), out.end(),
            [](const Configuration& a, const Configuration& b) { return a.upper_entries() < b.upper_entries(); });
  return out;
}

std::vector<std::vector<int>> automorphisms(const FiniteExtension& ext) {
  const auto& c = ext.whole;
  const int n = static_cast<int>(c.size());
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      const int x = c[static_cast<std::size_t>(i)];
      if (std::binary_search(ext.base.begin(), ext.base.end(), x) && p[static_cast<std::size_t>(i)] != i) ok = false;
      for (int j = 0; j < n && ok; ++j)
        if (ext.ambient.related(x, c[static_cast<std::size_t>(j)]) !=
            ext.ambient.related(c[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])],
                                c[static_cast<std::size_t>(p[static_cast<std::size_t>(j)])]))
          ok = false;
    }
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

namespace {

// Atom a's coordinate of f as the set of 0/1 points where it is 1.
std::set<std::uint64_t> support(const BoolPolynomial& f, int atom) {
  std::set<std::uint64_t> out;
  const std::uint64_t points = std::uint64_t{1} << f.variables();
  for (std::uint64_t p = 0; p < points; ++p) {
    int v = 0;
    for (const auto& [m, c] : f.terms)
      if ((m & ~p) == 0 && (c >> atom & 1U)) v ^= 1;
    if (v) out.insert(p);
  }
  return out;
}

using AtomSet = std::set<int>;

AtomSet as_set(RingElem r, int k) {
  AtomSet s;
  for (int a = 0; a < k; ++a)
    if (r >> a & 1U) s.insert(a);
  return s;
}

}  // namespace

bool ideal_member(const BooleanRing& ring, const TransformalIdeal& ideal, const BoolPolynomial& f) {
  for (int a = 0; a < ring.atom_count(); ++a) {
    std::set<std::uint64_t> allowed;
    for (const auto& g : ideal.generators) {
      auto s = support(g, a);
      allowed.insert(s.begin(), s.end());
    }
    for (auto p : support(f, a))
      if (!allowed.count(p)) return false;
  }
  return true;
}

RingElem orbit_value(const BooleanRing& ring, const BoolPolynomial& f, const std::vector<RingElem>& r) {
  const int k = ring.atom_count();
  const int e = ring.group().order();
  const int n = static_cast<int>(r.size());
  std::vector<AtomSet> value(static_cast<std::size_t>(e * n));
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < n; ++j) {
      AtomSet s;
      for (int a : as_set(r[static_cast<std::size_t>(j)], k)) s.insert(ring.atom_perm(i)[static_cast<std::size_t>(a)]);
      value[static_cast<std::size_t>(i * n + j)] = s;
    }
  AtomSet total;
  for (const auto& [m, c] : f.terms) {
    AtomSet prod = as_set(c, k);
    for (int v = 0; v < e * n; ++v) {
      if (!(m >> v & 1U)) continue;
      AtomSet keep;
      std::set_intersection(prod.begin(), prod.end(), value[static_cast<std::size_t>(v)].begin(),
                            value[static_cast<std::size_t>(v)].end(), std::inserter(keep, keep.end()));
      prod = keep;
    }
    AtomSet sum;
    std::set_symmetric_difference(total.begin(), total.end(), prod.begin(), prod.end(), std::inserter(sum, sum.end()));
    total = sum;
  }
  RingElem out = 0;
  for (int a : total) out |= RingElem{1} << a;
  return out;
}

std::optional<std::vector<RingElem>> diamond_scan(const BooleanRing& ring, const TransformalIdeal& i,
                                                  const TransformalIdeal& j) {
  const int n = i.n;
  std::vector<RingElem> r(static_cast<std::size_t>(n), 0);
  std::optional<std::vector<RingElem>> found;
  std::function<void(int)> rec = [&](int pos) {
    if (found) return;
    if (pos == n) {
      auto zero = [&](const TransformalIdeal& id) {
        for (const auto& g : id.generators)
          if (orbit_value(ring, g, r) != 0) return false;
        return true;
      };
      if (zero(i) && !zero(j)) found = r;
      return;
    }
    for (RingElem x = 0; x <= ring.one(); ++x) {
      r[static_cast<std::size_t>(pos)] = x;
      rec(pos + 1);
      if (found) return;
    }
  };
  rec(0);
  return found;
}

bool is_equivariant_isomorphism(const GStructure& m1, const ElementSet& dom, const GStructure& m2,
                                const ElementSet& cod, const std::vector<std::pair<int, int>>& pairs) {
  std::map<int, int> f;
  std::set<int> image;
  for (auto [x, y] : pairs) {
    if (!f.emplace(x, y).second) return false;
    image.insert(y);
  }
  if (f.size() != dom.size() || image.size() != cod.size()) return false;
  for (int x : dom)
    if (!f.count(x)) return false;
  for (int y : cod)
    if (!image.count(y)) return false;
  for (int x : dom)
    for (int y : dom)
      if (m1.related(x, y) != m2.related(f[x], f[y])) return false;
  for (int g = 0; g < m1.group().order(); ++g)
    for (int x : dom) {
      auto it = f.find(m1.act(g, x));
      if (it == f.end() || it->second != m2.act(g, f[x])) return false;
    }
  return true;
}

}  // namespace gact::oracle
