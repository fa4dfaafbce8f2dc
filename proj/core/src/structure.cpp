#include "gact/structure.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "gact/automorphism.hpp"
#include "gact/error.hpp"

namespace gact {

std::string_view signature_name(Signature s) noexcept {
  switch (s) {
    case Signature::Empty: return "empty";
    case Signature::Graph: return "graph";
    case Signature::Order: return "order";
  }
  return "empty";
}

Signature parse_signature(std::string_view s) {
  if (s == "empty") return Signature::Empty;
  if (s == "graph") return Signature::Graph;
  if (s == "order") return Signature::Order;
  throw Error(Errc::InvalidArgument, "unknown signature '" + std::string(s) + "'");
}

ElementSet make_set(std::vector<int> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

ElementSet set_union(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ElementSet set_intersection(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ElementSet set_difference(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_subset(const ElementSet& a, const ElementSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

GStructure::GStructure(Signature sig, GroupPtr group, std::vector<std::string> universe,
                       std::vector<std::pair<int, int>> pairs, std::vector<std::vector<int>> action)
    : sig_(sig), group_(std::move(group)), labels_(std::move(universe)), perms_(std::move(action)) {
  if (!group_) throw Error(Errc::InvalidStructure, "structure needs a group");
  const int n = size();
  adj_.assign(static_cast<std::size_t>(n), {});
  for (auto [a, b] : pairs)
    if (!contains(a) || !contains(b)) throw Error(Errc::InvalidStructure, "relation pair outside the universe");
  switch (sig_) {
    case Signature::Empty:
      if (!pairs.empty()) throw Error(Errc::InvalidStructure, "the empty signature has no relations");
      break;
    case Signature::Graph:
      for (auto [a, b] : pairs) {
        if (a == b) throw Error(Errc::InvalidStructure, "graph relation must be irreflexive");
        adj_[static_cast<std::size_t>(a)].push_back(b);
        adj_[static_cast<std::size_t>(b)].push_back(a);
      }
      for (auto& row : adj_) row = make_set(std::move(row));
      break;
    case Signature::Order: {
      std::sort(pairs.begin(), pairs.end());
      pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
      if (pairs.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2)
        throw Error(Errc::InvalidStructure, "order relation is not a strict total order");
      rank_.assign(static_cast<std::size_t>(n), 0);
      for (auto [a, b] : pairs) {
        if (a == b) throw Error(Errc::InvalidStructure, "order relation must be irreflexive");
        ++rank_[static_cast<std::size_t>(b)];
      }
      for (auto [a, b] : pairs)
        if (rank_[static_cast<std::size_t>(a)] >= rank_[static_cast<std::size_t>(b)])
          throw Error(Errc::InvalidStructure, "order relation is not a strict total order");
      break;
    }
  }
  validate();
}

GStructure GStructure::with_trivial_action(Signature sig, GroupPtr group, std::vector<std::string> universe,
                                           std::vector<std::pair<int, int>> pairs) {
  std::vector<int> id(universe.size());
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> action(static_cast<std::size_t>(group->order()), id);
  return GStructure(sig, std::move(group), std::move(universe), std::move(pairs), std::move(action));
}

GStructure GStructure::empty(Signature sig, GroupPtr group) {
  return with_trivial_action(sig, std::move(group), {}, {});
}

void GStructure::validate() {
  const int n = size();
  const FiniteGroup& g = *group_;
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw Error(Errc::InvalidStructure, "empty element label");
    if (!seen.insert(l).second) throw Error(Errc::InvalidStructure, "duplicate element label '" + l + "'");
  }
  if (static_cast<int>(perms_.size()) != g.order())
    throw Error(Errc::InvalidStructure, "action must give one permutation per group element");
  for (const auto& p : perms_) {
    if (static_cast<int>(p.size()) != n) throw Error(Errc::InvalidStructure, "action permutation has wrong length");
    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    for (int v : p) {
      if (v < 0 || v >= n || hit[static_cast<std::size_t>(v)]++)
        throw Error(Errc::InvalidStructure, "action entry is not a permutation");
    }
  }
  for (int x = 0; x < n; ++x)
    if (act(g.identity(), x) != x) throw Error(Errc::InvalidStructure, "identity must act trivially");
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) {
      const int ab = g.mul(a, b);
      for (int x = 0; x < n; ++x)
        if (act(a, act(b, x)) != act(ab, x))
          throw Error(Errc::InvalidStructure, "action violates sigma_g o sigma_h = sigma_{g*h}");
    }
  if (sig_ == Signature::Graph) {
    for (int x = 0; x < n; ++x)
      for (int y : adj_[static_cast<std::size_t>(x)]) {
        if (y == x) throw Error(Errc::InvalidStructure, "graph relation must be irreflexive");
        if (!std::binary_search(adj_[static_cast<std::size_t>(y)].begin(), adj_[static_cast<std::size_t>(y)].end(), x))
          throw Error(Errc::InvalidStructure, "graph relation must be symmetric");
      }
    for (int a = 0; a < g.order(); ++a)
      for (int x = 0; x < n; ++x)
        for (int y : adj_[static_cast<std::size_t>(x)])
          if (!related(act(a, x), act(a, y)))
            throw Error(Errc::InvalidStructure, "action of '" + g.name(a) + "' is not an automorphism");
  } else if (sig_ == Signature::Order) {
    std::vector<int> chain(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) chain[static_cast<std::size_t>(rank(x))] = x;
    for (int a = 0; a < g.order(); ++a)
      for (int r = 0; r + 1 < n; ++r)
        if (!related(act(a, chain[static_cast<std::size_t>(r)]), act(a, chain[static_cast<std::size_t>(r + 1)])))
          throw Error(Errc::InvalidStructure, "action of '" + g.name(a) + "' is not an automorphism");
  }
}

std::optional<int> GStructure::find(std::string_view label) const {
  for (int i = 0; i < size(); ++i)
    if (labels_[static_cast<std::size_t>(i)] == label) return i;
  return std::nullopt;
}

bool GStructure::related(int a, int b) const {
  switch (sig_) {
    case Signature::Empty: return false;
    case Signature::Graph: {
      const auto& row = adj_[static_cast<std::size_t>(a)];
      return std::binary_search(row.begin(), row.end(), b);
    }
    case Signature::Order: return rank_[static_cast<std::size_t>(a)] < rank_[static_cast<std::size_t>(b)];
  }
  return false;
}

std::vector<std::pair<int, int>> GStructure::relation_pairs() const {
  std::vector<std::pair<int, int>> out;
  if (sig_ == Signature::Graph) {
    for (int x = 0; x < size(); ++x)
      for (int y : adj_[static_cast<std::size_t>(x)]) out.emplace_back(x, y);
  } else if (sig_ == Signature::Order) {
    for (int x = 0; x < size(); ++x)
      for (int y = 0; y < size(); ++y)
        if (related(x, y)) out.emplace_back(x, y);
  }
  return out;
}

std::size_t GStructure::edge_count() const {
  if (sig_ == Signature::Graph) {
    std::size_t d = 0;
    for (const auto& row : adj_) d += row.size();
    return d / 2;
  }
  if (sig_ == Signature::Order) return static_cast<std::size_t>(size()) * static_cast<std::size_t>(size() - 1) / 2;
  return 0;
}

bool operator==(const GStructure& a, const GStructure& b) {
  return a.sig_ == b.sig_ && *a.group_ == *b.group_ && a.labels_ == b.labels_ && a.adj_ == b.adj_ &&
         a.rank_ == b.rank_ && a.perms_ == b.perms_;
}

GStructureBuilder::GStructureBuilder(Signature sig, GroupPtr group) {
  if (sig == Signature::Order) throw Error(Errc::UnsupportedSignature, "orders cannot be grown incrementally");
  s_.sig_ = sig;
  s_.group_ = std::move(group);
  s_.perms_.assign(static_cast<std::size_t>(s_.group_->order()), {});
}

GStructureBuilder::GStructureBuilder(const GStructure& m) : s_(m) {
  if (m.signature() == Signature::Order) throw Error(Errc::UnsupportedSignature, "orders cannot be grown incrementally");
}

bool GStructureBuilder::related(int a, int b) const { return s_.related(a, b); }

int GStructureBuilder::add_orbit_block(const std::vector<std::string>& labels,
                                       const std::vector<std::vector<int>>& orbit_perm) {
  const int base = s_.size();
  const int k = static_cast<int>(labels.size());
  if (static_cast<int>(orbit_perm.size()) != s_.group_->order())
    throw Error(Errc::InvalidStructure, "orbit block needs one permutation per group element");
  for (std::size_t g = 0; g < orbit_perm.size(); ++g) {
    if (static_cast<int>(orbit_perm[g].size()) != k) throw Error(Errc::InvalidStructure, "orbit block permutation has wrong length");
    for (int v : orbit_perm[g]) {
      if (v < 0 || v >= k) throw Error(Errc::InvalidStructure, "orbit block permutation out of range");
      s_.perms_[g].push_back(base + v);
    }
  }
  for (const auto& l : labels) {
    s_.labels_.push_back(l);
    s_.adj_.emplace_back();
  }
  return base;
}

void GStructureBuilder::add_edge(int a, int b) {
  if (s_.sig_ != Signature::Graph) throw Error(Errc::UnsupportedSignature, "edges need the graph signature");
  if (a == b || !s_.contains(a) || !s_.contains(b)) throw Error(Errc::InvalidStructure, "bad edge");
  auto insert = [](std::vector<int>& row, int v) {
    auto it = std::lower_bound(row.begin(), row.end(), v);
    if (it == row.end() || *it != v) row.insert(it, v);
  };
  insert(s_.adj_[static_cast<std::size_t>(a)], b);
  insert(s_.adj_[static_cast<std::size_t>(b)], a);
}

GStructure GStructureBuilder::build() const {
  GStructure out = s_;
  out.validate();
  return out;
}

GStructure disjoint_union(const GStructure& a, const GStructure& b) {
  if (a.signature() != b.signature()) throw Error(Errc::SignatureMismatch, "signatures differ");
  if (!(a.group() == b.group())) throw Error(Errc::InvalidArgument, "groups differ");
  if (a.signature() == Signature::Order) throw Error(Errc::UnsupportedSignature, "disjoint union of orders");
  std::vector<std::string> labels = a.labels();
  std::unordered_set<std::string> used(labels.begin(), labels.end());
  for (const auto& l : b.labels()) {
    std::string nl = l;
    while (used.count(nl)) nl += "'";
    used.insert(nl);
    labels.push_back(nl);
  }
  const int off = a.size();
  auto pairs = a.relation_pairs();
  for (auto [x, y] : b.relation_pairs()) pairs.emplace_back(x + off, y + off);
  std::vector<std::vector<int>> action = a.action();
  for (int g = 0; g < a.group().order(); ++g)
    for (int x = 0; x < b.size(); ++x) action[static_cast<std::size_t>(g)].push_back(b.act(g, x) + off);
  return GStructure(a.signature(), a.group_ptr(), std::move(labels), std::move(pairs), std::move(action));
}

namespace {

std::vector<std::pair<int, int>> induced_pairs(const GStructure& m, const ElementSet& subset,
                                               const std::unordered_map<int, int>& idx) {
  std::vector<std::pair<int, int>> pairs;
  for (int x : subset)
    for (int y : subset)
      if (x != y && m.related(x, y)) pairs.emplace_back(idx.at(x), idx.at(y));
  return pairs;
}

std::unordered_map<int, int> index_of(const GStructure& m, const ElementSet& subset) {
  std::unordered_map<int, int> idx;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (!m.contains(subset[i])) throw Error(Errc::UnknownElement, "element outside the universe");
    idx[subset[i]] = static_cast<int>(i);
  }
  return idx;
}

}  // namespace

GStructure restrict_to(const GStructure& m, const ElementSet& subset) {
  auto idx = index_of(m, subset);
  std::vector<std::string> labels;
  for (int x : subset) labels.push_back(m.label(x));
  std::vector<std::vector<int>> action(static_cast<std::size_t>(m.group().order()));
  for (int g = 0; g < m.group().order(); ++g)
    for (int x : subset) {
      auto it = idx.find(m.act(g, x));
      if (it == idx.end()) throw Error(Errc::InvalidArgument, "subset is not closed under the action");
      action[static_cast<std::size_t>(g)].push_back(it->second);
    }
  return GStructure(m.signature(), m.group_ptr(), std::move(labels), induced_pairs(m, subset, idx), std::move(action));
}

GStructure plain_substructure(const GStructure& m, const ElementSet& subset) {
  auto idx = index_of(m, subset);
  std::vector<std::string> labels;
  for (int x : subset) labels.push_back(m.label(x));
  return GStructure::with_trivial_action(m.signature(), cyclic_group(1), std::move(labels),
                                         induced_pairs(m, subset, idx));
}

ElementSet orbit(const GStructure& m, std::span<const int> a) {
  std::vector<int> out;
  out.reserve(a.size() * static_cast<std::size_t>(m.group().order()));
  for (int x : a) {
    if (!m.contains(x)) throw Error(Errc::UnknownElement, "element " + std::to_string(x) + " outside the universe");
    for (int g = 0; g < m.group().order(); ++g) out.push_back(m.act(g, x));
  }
  return make_set(std::move(out));
}

ElementSet invariants(const GStructure& m) {
  ElementSet out;
  for (int x = 0; x < m.size(); ++x) {
    bool fixed = true;
    for (int g = 0; g < m.group().order() && fixed; ++g) fixed = m.act(g, x) == x;
    if (fixed) out.push_back(x);
  }
  return out;
}

Subgroup stabilizer(const GStructure& m, int x) {
  Subgroup h;
  for (int g = 0; g < m.group().order(); ++g)
    if (m.act(g, x) == x) h.members.push_back(g);
  return h;
}

std::vector<ElementSet> orbits(const GStructure& m) {
  std::vector<char> seen(static_cast<std::size_t>(m.size()), 0);
  std::vector<ElementSet> out;
  for (int x = 0; x < m.size(); ++x) {
    if (seen[static_cast<std::size_t>(x)]) continue;
    int one[] = {x};
    out.push_back(orbit(m, one));
    for (int y : out.back()) seen[static_cast<std::size_t>(y)] = 1;
  }
  return out;
}

std::vector<Literal> atomic_diagram(const GStructure& m, std::span<const int> tuple) {
  for (int x : tuple)
    if (!m.contains(x)) throw Error(Errc::UnknownElement, "tuple element outside the universe");
  const int ng = m.group().order();
  std::vector<Literal> out;
  for (std::size_t i = 0; i < tuple.size(); ++i)
    for (int g = 0; g < ng; ++g)
      for (std::size_t j = 0; j < tuple.size(); ++j)
        for (int h = 0; h < ng; ++h) {
          Term s{g, "x" + std::to_string(i)}, t{h, "x" + std::to_string(j)};
          const int a = m.act(g, tuple[i]), b = m.act(h, tuple[j]);
          out.push_back({a == b ? Literal::Kind::Eq : Literal::Kind::Neq, s, t});
          if (m.signature() != Signature::Empty)
            out.push_back({m.related(a, b) ? Literal::Kind::Rel : Literal::Kind::NotRel, s, t});
        }
  return out;
}

std::optional<std::vector<std::pair<int, int>>> forced_equivariant_map(const GStructure& m, std::span<const int> a,
                                                                       const GStructure& n, std::span<const int> b) {
  if (a.size() != b.size() || m.signature() != n.signature() || !(m.group() == n.group())) return std::nullopt;
  std::unordered_map<int, int> fwd, bwd;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (int g = 0; g < m.group().order(); ++g) {
      const int x = m.act(g, a[i]), y = n.act(g, b[i]);
      auto [it, fresh] = fwd.emplace(x, y);
      if (!fresh && it->second != y) return std::nullopt;
      auto [jt, fresh2] = bwd.emplace(y, x);
      if (!fresh2 && jt->second != x) return std::nullopt;
    }
  std::vector<std::pair<int, int>> pairs(fwd.begin(), fwd.end());
  std::sort(pairs.begin(), pairs.end());
  for (auto [x, y] : pairs)
    for (auto [x2, y2] : pairs)
      if (m.related(x, x2) != n.related(y, y2)) return std::nullopt;
  return pairs;
}

void validate_extension(const ExtensionPair& pair) {
  const auto& s = pair.small;
  const auto& b = pair.big;
  if (s.signature() != b.signature()) throw Error(Errc::InvalidArgument, "extension signatures differ");
  if (!(s.group() == b.group())) throw Error(Errc::InvalidArgument, "extension groups differ");
  if (static_cast<int>(pair.embedding.size()) != s.size()) throw Error(Errc::InvalidArgument, "embedding has wrong length");
  std::vector<char> hit(static_cast<std::size_t>(b.size()), 0);
  for (int y : pair.embedding) {
    if (!b.contains(y)) throw Error(Errc::InvalidArgument, "embedding image outside the big structure");
    if (hit[static_cast<std::size_t>(y)]++) throw Error(Errc::InvalidArgument, "embedding is not injective");
  }
  auto e = [&](int x) { return pair.embedding[static_cast<std::size_t>(x)]; };
  for (int x = 0; x < s.size(); ++x) {
    for (int y = 0; y < s.size(); ++y)
      if (s.related(x, y) != b.related(e(x), e(y))) throw Error(Errc::InvalidArgument, "embedding does not preserve relations");
    for (int g = 0; g < s.group().order(); ++g)
      if (b.act(g, e(x)) != e(s.act(g, x))) throw Error(Errc::InvalidArgument, "embedding is not equivariant");
  }
}

ExtensionPair identity_extension(const GStructure& m) {
  std::vector<int> id(static_cast<std::size_t>(m.size()));
  std::iota(id.begin(), id.end(), 0);
  return ExtensionPair{m, m, std::move(id)};
}

namespace {

// Complete quantifier-free type of the tuple ys over the parameter list ps,
// everything evaluated in b.
std::string type_code(const GStructure& b, const std::vector<int>& ys, const std::vector<int>& ps) {
  const int ng = b.group().order();
  std::vector<int> terms;
  for (int y : ys)
    for (int g = 0; g < ng; ++g) terms.push_back(b.act(g, y));
  std::string code;
  code.reserve(terms.size() * (terms.size() + ps.size()) * 2);
  for (int s : terms) {
    for (int t : terms) {
      code.push_back(s == t ? '=' : '#');
      code.push_back(b.related(s, t) ? 'R' : '-');
    }
    for (int p : ps) {
      code.push_back(s == p ? '=' : '#');
      code.push_back(b.related(s, p) ? 'R' : '-');
      code.push_back(b.related(p, s) ? 'R' : '-');
    }
  }
  return code;
}

std::string render_term(const FiniteGroup& g, int elem, const std::string& var) {
  if (elem == g.identity()) return var;
  return g.name(elem) + "·" + var;
}

std::string describe_type(const GStructure& b, const std::vector<int>& ys, const std::vector<int>& ps,
                          const std::vector<int>& small_names) {
  const FiniteGroup& g = b.group();
  std::vector<std::string> lits;
  struct T {
    int elem;
    int value;
    std::string text;
  };
  std::vector<T> terms;
  for (std::size_t i = 0; i < ys.size(); ++i)
    for (int h = 0; h < g.order(); ++h)
      terms.push_back({h, b.act(h, ys[i]), render_term(g, h, "y" + std::to_string(i))});
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      lits.push_back(terms[i].text + (terms[i].value == terms[j].value ? " = " : " != ") + terms[j].text);
      if (b.signature() != Signature::Empty && terms[i].value != terms[j].value) {
        lits.push_back(std::string(b.related(terms[i].value, terms[j].value) ? "" : "!") + "R(" + terms[i].text + ", " +
                       terms[j].text + ")");
        if (b.signature() == Signature::Order)
          lits.push_back(std::string(b.related(terms[j].value, terms[i].value) ? "" : "!") + "R(" + terms[j].text +
                         ", " + terms[i].text + ")");
      }
    }
    for (std::size_t k = 0; k < ps.size(); ++k) {
      const std::string p = "p" + std::to_string(small_names[k]);
      lits.push_back(terms[i].text + (terms[i].value == ps[k] ? " = " : " != ") + p);
      if (b.signature() != Signature::Empty && terms[i].value != ps[k]) {
        lits.push_back(std::string(b.related(terms[i].value, ps[k]) ? "" : "!") + "R(" + terms[i].text + ", " + p + ")");
        if (b.signature() == Signature::Order)
          lits.push_back(std::string(b.related(ps[k], terms[i].value) ? "" : "!") + "R(" + p + ", " + terms[i].text + ")");
      }
    }
  }
  std::string out;
  for (std::size_t i = 0; i < ys.size(); ++i) out += "E y" + std::to_string(i) + ". ";
  if (lits.empty()) return out + "true";
  for (std::size_t i = 0; i < lits.size(); ++i) out += (i ? " & " : "") + lits[i];
  return out;
}

bool next_tuple(std::vector<int>& t, int n) {
  for (std::size_t i = t.size(); i-- > 0;) {
    if (++t[i] < n) return true;
    t[i] = 0;
  }
  return false;
}

bool next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[static_cast<std::size_t>(i)] < n - k + i) {
      ++c[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

EcResult is_existentially_closed(const ExtensionPair& pair, int var_bound, int param_bound, std::size_t node_cap) {
  validate_extension(pair);
  if (var_bound < 1) throw Error(Errc::InvalidArgument, "var_bound must be at least 1");
  const GStructure& b = pair.big;
  const int ns = pair.small.size();
  const int nb = b.size();
  EcResult res;
  const int pk = param_bound < 0 ? ns : std::min(param_bound, ns);
  auto charge = [&](std::size_t k) {
    res.nodes += k;
    if (res.nodes > node_cap) throw Error(Errc::BudgetExceeded, "existential closedness check exceeded node cap");
  };
  for (int k = 1; k <= var_bound; ++k) {
    if (nb == 0) break;
    std::vector<int> comb(static_cast<std::size_t>(pk));
    std::iota(comb.begin(), comb.end(), 0);
    do {
      std::vector<int> ps;
      for (int c : comb) ps.push_back(pair.embedding[static_cast<std::size_t>(c)]);
      std::unordered_set<std::string> realized;
      if (ns > 0) {
        std::vector<int> t(static_cast<std::size_t>(k), 0);
        do {
          charge(1);
          std::vector<int> ys;
          for (int x : t) ys.push_back(pair.embedding[static_cast<std::size_t>(x)]);
          realized.insert(type_code(b, ys, ps));
        } while (next_tuple(t, ns));
      }
      std::vector<int> t(static_cast<std::size_t>(k), 0);
      do {
        charge(1);
        if (!realized.count(type_code(b, t, ps))) {
          res.closed = false;
          res.params = comb;
          res.witness = describe_type(b, t, ps, comb);
          return res;
        }
      } while (next_tuple(t, nb));
    } while (next_combination(comb, ns));
  }
  return res;
}

bool is_regular_extension(const ElementSet& e, const ElementSet& a, const ClosureOracle& closure) {
  if (!is_subset(e, a)) throw Error(Errc::InvalidArgument, "base is not contained in the extension");
  return is_subset(set_intersection(closure.dcl(a), closure.acl(e)), closure.dcl(e));
}

bool is_normal_extension(const ElementSet& a, const ElementSet& c, const GStructure& ambient) {
  if (!is_subset(a, c)) throw Error(Errc::InvalidArgument, "base is not contained in the extension");
  for (int x : c)
    if (!ambient.contains(x)) throw Error(Errc::UnknownElement, "element outside the universe");
  std::vector<int> all(static_cast<std::size_t>(ambient.size()));
  std::iota(all.begin(), all.end(), 0);
  const ElementSet outside = set_difference(all, c);
  for (int x : set_difference(c, a))
    for (int y : outside) {
      AutSearchOptions opts;
      opts.fixed = a;
      opts.prescribed = {{x, y}};
      if (find_automorphism(ambient, opts)) return false;
    }
  return true;
}

bool order_rigidity_check(const GStructure& m) {
  if (m.signature() != Signature::Order) throw Error(Errc::UnsupportedSignature, "order rigidity needs an order");
  for (int g = 0; g < m.group().order(); ++g)
    for (int x = 0; x < m.size(); ++x)
      if (m.act(g, x) != x) return false;
  return true;
}

RigidityScan scan_periodic_order_automorphisms(int max_length, int max_period) {
  RigidityScan scan;
  for (int n = 1; n <= max_length; ++n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
      ++scan.permutations;
      std::vector<char> seen(static_cast<std::size_t>(n), 0);
      long period = 1;
      for (int s = 0; s < n; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        long len = 0;
        for (int x = s; !seen[static_cast<std::size_t>(x)]; x = p[static_cast<std::size_t>(x)]) {
          seen[static_cast<std::size_t>(x)] = 1;
          ++len;
        }
        period = std::lcm(period, len);
      }
      if (period > max_period) continue;
      ++scan.periodic;
      bool monotone = true;
      for (int i = 0; i + 1 < n && monotone; ++i) monotone = p[static_cast<std::size_t>(i)] < p[static_cast<std::size_t>(i + 1)];
      if (monotone && period != 1) ++scan.counterexamples;
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return scan;
}

}  // namespace gact
