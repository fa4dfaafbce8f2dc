#include "gact/automorphism.hpp"

#include <algorithm>
#include <map>

#include <boost/dynamic_bitset.hpp>

#include "gact/error.hpp"

namespace gact {

namespace {

using Bits = boost::dynamic_bitset<>;

struct RelRows {
  std::vector<Bits> out;  // out[x] = {v : rel(x, v)}
  std::vector<Bits> in;   // in[x] = {v : rel(v, x)}
};

RelRows relation_rows(const GStructure& m) {
  const auto n = static_cast<std::size_t>(m.size());
  RelRows r{std::vector<Bits>(n, Bits(n)), std::vector<Bits>(n, Bits(n))};
  for (auto [a, b] : m.relation_pairs()) {
    r.out[static_cast<std::size_t>(a)].set(static_cast<std::size_t>(b));
    r.in[static_cast<std::size_t>(b)].set(static_cast<std::size_t>(a));
  }
  return r;
}

// Joint colour refinement over a and b so that colours are comparable.
std::pair<std::vector<int>, std::vector<int>> refine_colours(const GStructure& a, const GStructure& b,
                                                             bool equivariant) {
  auto initial = [&](const GStructure& m, int x) {
    std::vector<int> key;
    key.push_back(m.signature() == Signature::Order ? m.rank(x) : static_cast<int>(m.neighbors(x).size()));
    if (equivariant)
      for (int g = 0; g < m.group().order(); ++g) key.push_back(m.act(g, x) == x ? 1 : 0);
    return key;
  };
  std::map<std::vector<int>, int> ids;
  std::vector<int> ca(static_cast<std::size_t>(a.size())), cb(static_cast<std::size_t>(b.size()));
  for (int x = 0; x < a.size(); ++x) ca[static_cast<std::size_t>(x)] = ids.emplace(initial(a, x), ids.size()).first->second;
  for (int x = 0; x < b.size(); ++x) cb[static_cast<std::size_t>(x)] = ids.emplace(initial(b, x), ids.size()).first->second;
  if (a.signature() != Signature::Graph) return {ca, cb};
  std::size_t classes = ids.size();
  while (true) {
    std::map<std::vector<int>, int> next;
    auto step = [&](const GStructure& m, const std::vector<int>& c) {
      std::vector<int> out(c.size());
      for (int x = 0; x < m.size(); ++x) {
        std::vector<int> key{c[static_cast<std::size_t>(x)]};
        std::vector<int> nb;
        for (int y : m.neighbors(x)) nb.push_back(c[static_cast<std::size_t>(y)]);
        std::sort(nb.begin(), nb.end());
        key.insert(key.end(), nb.begin(), nb.end());
        out[static_cast<std::size_t>(x)] = next.emplace(std::move(key), next.size()).first->second;
      }
      return out;
    };
    auto na = step(a, ca);
    auto nb = step(b, cb);
    ca = std::move(na);
    cb = std::move(nb);
    if (next.size() == classes) break;
    classes = next.size();
  }
  return {ca, cb};
}

class IsoSearch {
 public:
  IsoSearch(const GStructure& a, const GStructure& b, bool equivariant, std::size_t cap)
      : a_(a), b_(b), equivariant_(equivariant), cap_(cap), ra_(relation_rows(a)), rb_(relation_rows(b)) {
    const auto na = static_cast<std::size_t>(a.size());
    const auto nb = static_cast<std::size_t>(b.size());
    auto [ca, cb] = refine_colours(a, b, equivariant);
    dom_.assign(na, Bits(nb));
    for (std::size_t x = 0; x < na; ++x)
      for (std::size_t y = 0; y < nb; ++y)
        if (ca[x] == cb[y]) dom_[x].set(y);
    f_.assign(na, -1);
    used_ = Bits(nb);
  }

  bool force(int x, int y) { return assign(x, y); }

  std::size_t run(const std::function<bool(const std::vector<int>&)>& visit) {
    stop_ = false;
    recurse(visit);
    return nodes_;
  }

 private:
  bool assign(int x0, int y0) {
    std::vector<std::pair<int, int>> queue{{x0, y0}};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      auto [x, y] = queue[qi];
      const auto xs = static_cast<std::size_t>(x), ys = static_cast<std::size_t>(y);
      if (f_[xs] >= 0) {
        if (f_[xs] != y) return false;
        continue;
      }
      if (!dom_[xs].test(ys) || used_.test(ys)) return false;
      f_[xs] = y;
      used_.set(ys);
      for (std::size_t u = 0; u < f_.size(); ++u) {
        if (f_[u] >= 0) continue;
        Bits& d = dom_[u];
        if (ra_.out[u].test(xs)) d &= rb_.in[ys]; else d -= rb_.in[ys];
        if (ra_.in[u].test(xs)) d &= rb_.out[ys]; else d -= rb_.out[ys];
        d.reset(ys);
        if (d.none()) return false;
      }
      if (equivariant_)
        for (int g = 0; g < a_.group().order(); ++g) queue.emplace_back(a_.act(g, x), b_.act(g, y));
    }
    return true;
  }

  void recurse(const std::function<bool(const std::vector<int>&)>& visit) {
    if (stop_) return;
    std::size_t x = 0;
    while (x < f_.size() && f_[x] >= 0) ++x;
    if (x == f_.size()) {
      if (!visit(f_)) stop_ = true;
      return;
    }
    const Bits candidates = dom_[x] - used_;
    for (auto y = candidates.find_first(); y != Bits::npos && !stop_; y = candidates.find_next(y)) {
      if (++nodes_ > cap_) throw Error(Errc::BudgetExceeded, "automorphism search exceeded node cap");
      auto saved_dom = dom_;
      auto saved_f = f_;
      auto saved_used = used_;
      if (assign(static_cast<int>(x), static_cast<int>(y))) recurse(visit);
      dom_ = std::move(saved_dom);
      f_ = std::move(saved_f);
      used_ = std::move(saved_used);
    }
  }

  const GStructure& a_;
  const GStructure& b_;
  bool equivariant_;
  std::size_t cap_;
  RelRows ra_, rb_;
  std::vector<Bits> dom_;
  std::vector<int> f_;
  Bits used_;
  std::size_t nodes_ = 0;
  bool stop_ = false;
};

bool compatible(const GStructure& a, const GStructure& b, bool equivariant) {
  if (a.signature() != b.signature() || a.size() != b.size()) return false;
  if (equivariant && !(a.group() == b.group())) return false;
  return true;
}

}  // namespace

std::size_t for_each_automorphism(const GStructure& m, const AutSearchOptions& opts,
                                  const std::function<bool(const std::vector<int>&)>& visit) {
  IsoSearch s(m, m, opts.respect_action, opts.node_cap);
  for (int x : opts.fixed) {
    if (!m.contains(x)) throw Error(Errc::UnknownElement, "fixed point outside the universe");
    if (!s.force(x, x)) return 0;
  }
  for (auto [x, y] : opts.prescribed) {
    if (!m.contains(x) || !m.contains(y)) throw Error(Errc::UnknownElement, "prescribed pair outside the universe");
    if (!s.force(x, y)) return 0;
  }
  return s.run(visit);
}

std::optional<std::vector<int>> find_automorphism(const GStructure& m, const AutSearchOptions& opts) {
  std::optional<std::vector<int>> out;
  for_each_automorphism(m, opts, [&](const std::vector<int>& f) {
    out = f;
    return false;
  });
  return out;
}

std::vector<std::vector<int>> all_automorphisms(const GStructure& m, const AutSearchOptions& opts,
                                                std::size_t limit) {
  std::vector<std::vector<int>> out;
  for_each_automorphism(m, opts, [&](const std::vector<int>& f) {
    if (out.size() >= limit) throw Error(Errc::BoundExceeded, "too many automorphisms");
    out.push_back(f);
    return true;
  });
  return out;
}

std::optional<std::vector<int>> find_isomorphism(const GStructure& a, const GStructure& b, bool equivariant,
                                                 const std::vector<std::pair<int, int>>& prescribed,
                                                 std::size_t node_cap) {
  if (!compatible(a, b, equivariant)) return std::nullopt;
  IsoSearch s(a, b, equivariant, node_cap);
  for (auto [x, y] : prescribed) {
    if (!a.contains(x) || !b.contains(y)) throw Error(Errc::UnknownElement, "prescribed pair outside the universe");
    if (!s.force(x, y)) return std::nullopt;
  }
  std::optional<std::vector<int>> out;
  s.run([&](const std::vector<int>& f) {
    out = f;
    return false;
  });
  return out;
}

}  // namespace gact
