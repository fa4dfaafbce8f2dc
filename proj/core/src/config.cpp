#include "gact/config.hpp"

#include <algorithm>
#include <numeric>

#include "gact/error.hpp"

namespace gact {

std::string_view entry_name(Entry e) noexcept {
  switch (e) {
    case Entry::Eq: return "EQ";
    case Entry::R: return "R";
    case Entry::NR: return "NR";
  }
  return "EQ";
}

TermSet::TermSet(GroupPtr group, int n, int n_prime) : group_(std::move(group)), n_(n), n_prime_(n_prime) {
  if (!group_) throw Error(Errc::InvalidArgument, "term set needs a group");
  if (n < 0 || n_prime < 0) throw Error(Errc::InvalidArgument, "variable counts must be non-negative");
}

std::string TermSet::var_name(int s) const {
  return s < n_ ? "x" + std::to_string(s) : "y" + std::to_string(s - n_);
}

int TermSet::index_of(const Term& t) const {
  if (!group_->contains(t.element)) throw Error(Errc::UnknownGroupElement, "term uses an unknown group element");
  if (t.var.size() >= 2 && (t.var[0] == 'x' || t.var[0] == 'y')) {
    const std::string digits = t.var.substr(1);
    if (std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) && digits.size() < 9) {
      const int k = std::stoi(digits);
      if (t.var[0] == 'x' && k < n_) return index(k, t.element);
      if (t.var[0] == 'y' && k < n_prime_) return index(n_ + k, t.element);
    }
  }
  throw Error(Errc::InvalidArgument, "variable '" + t.var + "' is not in the term set");
}

std::string TermSet::name(int t) const {
  const int g = element(t);
  if (g == group_->identity()) return var_name(slot(t));
  return group_->name(g) + "·" + var_name(slot(t));
}

Configuration::Configuration(TermSet terms)
    : terms_(std::move(terms)),
      entries_(static_cast<std::size_t>(terms_.size()) * static_cast<std::size_t>(terms_.size()), Entry::NR) {
  for (int a = 0; a < terms_.size(); ++a) entries_[idx(a, a)] = Entry::Eq;
}

Configuration::Configuration(TermSet terms, std::vector<Entry> entries)
    : terms_(std::move(terms)), entries_(std::move(entries)) {
  if (entries_.size() != static_cast<std::size_t>(terms_.size()) * static_cast<std::size_t>(terms_.size()))
    throw Error(Errc::InvalidArgument, "configuration must be defined on all pairs of terms");
}

void Configuration::set(int a, int b, Entry e) {
  entries_[idx(a, b)] = e;
  entries_[idx(b, a)] = e;
}

Configuration Configuration::restrict_to_z0() const {
  TermSet z0(terms_.group_ptr(), terms_.n(), 0);
  Configuration out(z0);
  for (int a = 0; a < z0.size(); ++a)
    for (int b = 0; b < z0.size(); ++b) out.set_directed(a, b, at(a, b));
  return out;
}

std::vector<Entry> Configuration::upper_entries() const {
  std::vector<Entry> out;
  for (int a = 0; a < terms_.size(); ++a)
    for (int b = a + 1; b < terms_.size(); ++b) out.push_back(at(a, b));
  return out;
}

ConsistencyReport is_consistent(const Configuration& q) {
  const TermSet& ts = q.terms();
  const int n = ts.size();
  ConsistencyReport rep;
  auto fail = [&](std::string why) {
    rep.consistent = false;
    rep.violation = std::move(why);
    return rep;
  };
  auto pair_text = [&](int a, int b) { return "(" + ts.name(a) + ", " + ts.name(b) + ")"; };
  for (int a = 0; a < n; ++a)
    if (q.at(a, a) != Entry::Eq) return fail("diagonal entry at " + pair_text(a, a) + " is not EQ");
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (q.at(a, b) != q.at(b, a)) return fail("entries at " + pair_text(a, b) + " and its reverse differ");
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (q.at(a, b) != Entry::Eq) continue;
      for (int c = 0; c < n; ++c)
        if (q.at(a, c) != q.at(b, c))
          return fail("EQ at " + pair_text(a, b) + " but entries against " + ts.name(c) + " differ");
    }
  for (int k = 0; k < ts.group().order(); ++k)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (q.at(ts.act(k, a), ts.act(k, b)) != q.at(a, b))
          return fail("not equivariant under " + ts.group().name(k) + " at " + pair_text(a, b));

  // canonical quotient: classes ordered by smallest term
  std::vector<int> cls(static_cast<std::size_t>(n), -1);
  std::vector<int> rep_term;
  for (int a = 0; a < n; ++a) {
    if (cls[static_cast<std::size_t>(a)] >= 0) continue;
    const int id = static_cast<int>(rep_term.size());
    rep_term.push_back(a);
    for (int b = a; b < n; ++b)
      if (q.at(a, b) == Entry::Eq) cls[static_cast<std::size_t>(b)] = id;
  }
  std::vector<std::string> labels;
  for (int r : rep_term) labels.push_back(ts.name(r));
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < rep_term.size(); ++i)
    for (std::size_t j = i + 1; j < rep_term.size(); ++j)
      if (q.at(rep_term[i], rep_term[j]) == Entry::R) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  std::vector<std::vector<int>> action(static_cast<std::size_t>(ts.group().order()));
  for (int k = 0; k < ts.group().order(); ++k)
    for (int r : rep_term) action[static_cast<std::size_t>(k)].push_back(cls[static_cast<std::size_t>(ts.act(k, r))]);
  try {
    rep.witness.emplace(Signature::Graph, ts.group_ptr(), std::move(labels), std::move(edges), std::move(action));
  } catch (const Error& e) {
    return fail(std::string("quotient is not a G-graph: ") + e.what());
  }
  rep.consistent = true;
  rep.realization = std::move(cls);
  return rep;
}

PartialConfig::PartialConfig(TermSet terms)
    : terms_(std::move(terms)),
      masks_(static_cast<std::size_t>(terms_.size()) * static_cast<std::size_t>(terms_.size()), kAll) {}

void PartialConfig::restrict(int a, int b, std::uint8_t allowed) {
  masks_[idx(a, b)] &= allowed;
  masks_[idx(b, a)] &= allowed;
}

void PartialConfig::add(const Literal& lit) {
  const int a = terms_.index_of(lit.lhs);
  const int b = terms_.index_of(lit.rhs);
  switch (lit.kind) {
    case Literal::Kind::Eq: restrict(a, b, kEq); break;
    case Literal::Kind::Neq: restrict(a, b, kR | kNR); break;
    case Literal::Kind::Rel: restrict(a, b, kR); break;
    case Literal::Kind::NotRel: restrict(a, b, kEq | kNR); break;
  }
}

void PartialConfig::pin_z0(const Configuration& q) {
  if (q.terms().size() != terms_.z0_size() || q.terms().n() != terms_.n())
    throw Error(Errc::InvalidArgument, "configuration does not live on Z0");
  for (int a = 0; a < q.terms().size(); ++a)
    for (int b = 0; b < q.terms().size(); ++b)
      masks_[idx(a, b)] &= static_cast<std::uint8_t>(1u << static_cast<unsigned>(q.at(a, b)));
}

class ExtensionEnumerator {
 public:
  explicit ExtensionEnumerator(const PartialConfig& base)
      : ts_(base.terms_), n_(ts_.size()), masks_(base.masks_) {
    propagate();
    build_orbits();
    val_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), -1);
    for (int a = 0; a < n_; ++a) val_[idx(a, a)] = static_cast<int>(Entry::Eq);
  }

  std::size_t run(const std::function<bool(const Configuration&)>& visit) {
    visit_ = &visit;
    stop_ = false;
    count_ = 0;
    dfs(0);
    return count_;
  }

 private:
  std::size_t idx(int a, int b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b);
  }

  bool meet(int a, int b, std::uint8_t m) {
    auto& x = masks_[idx(a, b)];
    const std::uint8_t nx = x & m;
    if (nx == x) return false;
    if (nx == 0)
      throw Error(Errc::ContradictoryBase,
                  "base literals admit no entry at (" + ts_.name(a) + ", " + ts_.name(b) + ")");
    x = nx;
    masks_[idx(b, a)] = nx;
    return true;
  }

  void propagate() {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        if (masks_[idx(a, b)] == 0)
          throw Error(Errc::ContradictoryBase,
                      "base literals admit no entry at (" + ts_.name(a) + ", " + ts_.name(b) + ")");
    for (int a = 0; a < n_; ++a) {
      if (!(masks_[idx(a, a)] & PartialConfig::kEq))
        throw Error(Errc::ContradictoryBase, "base literals deny " + ts_.name(a) + " = " + ts_.name(a));
      masks_[idx(a, a)] = PartialConfig::kEq;
    }
    const int ng = ts_.group().order();
    bool changed = true;
    while (changed) {
      changed = false;
      for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
          if (a == b) continue;
          for (int k = 0; k < ng; ++k) changed |= meet(ts_.act(k, a), ts_.act(k, b), masks_[idx(a, b)]);
        }
      for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b) {
          if (masks_[idx(a, b)] != PartialConfig::kEq) continue;
          for (int c = 0; c < n_; ++c) {
            changed |= meet(a, c, masks_[idx(b, c)]);
            changed |= meet(b, c, masks_[idx(a, c)]);
          }
        }
    }
  }

  void build_orbits() {
    std::vector<char> seen(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0);
    for (int a = 0; a < n_; ++a)
      for (int b = a + 1; b < n_; ++b) {
        if (seen[idx(a, b)]) continue;
        std::vector<std::pair<int, int>> orb;
        for (int k = 0; k < ts_.group().order(); ++k) {
          int x = ts_.act(k, a), y = ts_.act(k, b);
          if (x > y) std::swap(x, y);
          if (!seen[idx(x, y)]) {
            seen[idx(x, y)] = 1;
            orb.emplace_back(x, y);
          }
        }
        std::sort(orb.begin(), orb.end());
        orbits_.push_back(std::move(orb));
      }
  }

  bool triangle_ok(int a, int b) const {
    const int ab = val_[idx(a, b)];
    for (int c = 0; c < n_; ++c) {
      if (c == a || c == b) continue;
      const int ac = val_[idx(a, c)], bc = val_[idx(b, c)];
      if (ac < 0 || bc < 0) continue;
      constexpr int eq = static_cast<int>(Entry::Eq);
      if (ab == eq && ac != bc) return false;
      if (ac == eq && ab != bc) return false;
      if (bc == eq && ab != ac) return false;
    }
    return true;
  }

  void dfs(std::size_t k) {
    if (stop_) return;
    if (k == orbits_.size()) {
      std::vector<Entry> e(val_.size());
      for (std::size_t i = 0; i < val_.size(); ++i) e[i] = static_cast<Entry>(val_[i]);
      ++count_;
      if (!(*visit_)(Configuration(ts_, std::move(e)))) stop_ = true;
      return;
    }
    const auto& orb = orbits_[k];
    const std::uint8_t allowed = masks_[idx(orb.front().first, orb.front().second)];
    for (int v = 0; v < 3 && !stop_; ++v) {
      if (!(allowed & (1u << v))) continue;
      for (auto [a, b] : orb) val_[idx(a, b)] = val_[idx(b, a)] = v;
      bool ok = true;
      for (auto [a, b] : orb)
        if (!triangle_ok(a, b)) {
          ok = false;
          break;
        }
      if (ok) dfs(k + 1);
      for (auto [a, b] : orb) val_[idx(a, b)] = val_[idx(b, a)] = -1;
    }
  }

  TermSet ts_;
  int n_;
  std::vector<std::uint8_t> masks_;
  std::vector<std::vector<std::pair<int, int>>> orbits_;
  std::vector<int> val_;
  const std::function<bool(const Configuration&)>* visit_ = nullptr;
  bool stop_ = false;
  std::size_t count_ = 0;
};

std::size_t for_each_extension(const PartialConfig& base, const std::function<bool(const Configuration&)>& visit) {
  ExtensionEnumerator en(base);
  return en.run(visit);
}

std::vector<Configuration> enumerate_extensions(const PartialConfig& base, std::size_t cap) {
  std::vector<Configuration> out;
  for_each_extension(base, [&](const Configuration& q) {
    if (out.size() >= cap) throw Error(Errc::CapExceeded, "too many configurations");
    out.push_back(q);
    return true;
  });
  return out;
}

std::vector<Configuration> enumerate_extensions(const std::vector<Literal>& base, const TermSet& terms,
                                                std::size_t cap) {
  PartialConfig p(terms);
  for (const auto& lit : base) p.add(lit);
  return enumerate_extensions(p, cap);
}

Configuration configuration_of(const GStructure& m, const std::vector<int>& xs, const std::vector<int>& ys) {
  if (m.signature() == Signature::Order) throw Error(Errc::UnsupportedSignature, "configurations need a graph");
  TermSet ts(m.group_ptr(), static_cast<int>(xs.size()), static_cast<int>(ys.size()));
  std::vector<int> tuple = xs;
  tuple.insert(tuple.end(), ys.begin(), ys.end());
  for (int x : tuple)
    if (!m.contains(x)) throw Error(Errc::UnknownElement, "tuple element outside the universe");
  std::vector<int> value(static_cast<std::size_t>(ts.size()));
  for (int t = 0; t < ts.size(); ++t)
    value[static_cast<std::size_t>(t)] = m.act(ts.element(t), tuple[static_cast<std::size_t>(ts.slot(t))]);
  Configuration q(ts);
  for (int a = 0; a < ts.size(); ++a)
    for (int b = 0; b < ts.size(); ++b) {
      const int u = value[static_cast<std::size_t>(a)], v = value[static_cast<std::size_t>(b)];
      q.set_directed(a, b, u == v ? Entry::Eq : (m.related(u, v) ? Entry::R : Entry::NR));
    }
  return q;
}

}  // namespace gact
