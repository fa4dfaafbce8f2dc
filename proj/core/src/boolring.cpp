#include "gact/boolring.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include <boost/dynamic_bitset.hpp>

#include "gact/error.hpp"

namespace gact {

namespace {

using Bits = boost::dynamic_bitset<>;

bool bit(RingElem r, int a) { return (r >> a & 1U) != 0; }

void check_shape(const BooleanRing& ring, int e, int n) {
  if (e != ring.group().order())
    throw Error(Errc::InvalidArgument, "polynomial has " + std::to_string(e) + " blocks but |G| = " +
                                           std::to_string(ring.group().order()));
  if (n < 1 || e * n > 63) throw Error(Errc::InvalidArgument, "unsupported number of variables");
}

void check_same_shape(const BoolPolynomial& a, const BoolPolynomial& b) {
  if (a.e != b.e || a.n != b.n) throw Error(Errc::InvalidArgument, "polynomials over different variables");
}

void check_ideal(const BooleanRing& ring, const TransformalIdeal& ideal) {
  check_shape(ring, ideal.e, ideal.n);
  for (const auto& g : ideal.generators) {
    if (g.e != ideal.e || g.n != ideal.n) throw Error(Errc::InvalidArgument, "generator arity differs from the ideal");
    for (const auto& [m, c] : g.terms)
      if (!ring.contains(c)) throw Error(Errc::InvalidArgument, "coefficient outside the ring");
  }
}

// The atom-a coordinate of f as a Boolean function on {0,1}^vars.
Bits coordinate_function(const BoolPolynomial& f, int atom) {
  const std::size_t points = std::size_t{1} << f.variables();
  Bits out(points);
  for (const auto& [m, c] : f.terms) {
    if (!bit(c, atom)) continue;
    for (std::size_t p = 0; p < points; ++p)
      if ((m & p) == m) out.flip(p);
  }
  return out;
}

// Row-reduced basis of an F2 subspace, keyed by pivot position.
class F2Span {
 public:
  bool reduce(Bits& v) const {
    for (const auto& [pivot, row] : rows_)
      if (v.test(pivot)) v ^= row;
    return v.none();
  }
  void add(Bits v) {
    if (reduce(v)) return;
    std::size_t pivot = v.find_first();
    for (auto& [p, row] : rows_)
      if (row.test(pivot)) row ^= v;
    rows_.emplace(pivot, std::move(v));
  }

 private:
  std::map<std::size_t, Bits> rows_;
};

// Per-atom spans of the evaluation vectors of m*g over all monomials m and
// generators g.
class Membership {
 public:
  Membership(const BooleanRing& ring, const TransformalIdeal& ideal) : spans_(static_cast<std::size_t>(ring.atom_count())) {
    check_ideal(ring, ideal);
    if (ideal.e * ideal.n > kMaxMembershipVariables)
      throw Error(Errc::SearchTooLarge, "ideal membership is limited to " + std::to_string(kMaxMembershipVariables) +
                                            " variables");
    vars_ = ideal.e * ideal.n;
    const std::size_t points = std::size_t{1} << vars_;
    for (int a = 0; a < ring.atom_count(); ++a) {
      auto& span = spans_[static_cast<std::size_t>(a)];
      for (const auto& g : ideal.generators) {
        Bits ga = coordinate_function(g, a);
        if (ga.none()) continue;
        for (std::uint64_t m = 0; m < points; ++m) {
          Bits v = ga;
          for (std::size_t p = 0; p < points; ++p)
            if ((m & p) != m) v.reset(p);
          span.add(std::move(v));
        }
      }
    }
  }

  bool contains(const BoolPolynomial& f) const {
    if (f.variables() != vars_) throw Error(Errc::InvalidArgument, "polynomial arity differs from the ideal");
    for (std::size_t a = 0; a < spans_.size(); ++a) {
      Bits v = coordinate_function(f, static_cast<int>(a));
      if (!spans_[a].reduce(v)) return false;
    }
    return true;
  }

 private:
  std::vector<F2Span> spans_;
  int vars_ = 0;
};

std::uint64_t point_count(const BooleanRing& ring, int n, std::uint64_t cap) {
  const int bits = ring.atom_count() * n;
  if (bits >= 63 || (std::uint64_t{1} << bits) > cap)
    throw Error(Errc::SearchTooLarge, "|R|^n exceeds the cap of " + std::to_string(cap));
  return std::uint64_t{1} << bits;
}

std::vector<RingElem> point_of(const BooleanRing& ring, int n, std::uint64_t idx) {
  const int k = ring.atom_count();
  std::vector<RingElem> r(static_cast<std::size_t>(n));
  for (int j = n - 1; j >= 0; --j) {
    r[static_cast<std::size_t>(j)] = k == 0 ? 0 : (idx & ring.one());
    idx >>= k;
  }
  return r;
}

bool vanishes(const TransformalIdeal& ideal, std::span<const RingElem> point) {
  return std::all_of(ideal.generators.begin(), ideal.generators.end(),
                     [&](const BoolPolynomial& g) { return evaluate(g, point) == 0; });
}

}  // namespace

BooleanRing::BooleanRing(std::vector<std::string> atoms, GroupPtr group, std::vector<std::vector<int>> action)
    : atoms_(std::move(atoms)), group_(std::move(group)), action_(std::move(action)) {
  if (!group_) throw Error(Errc::InvalidArgument, "missing group");
  const int k = atom_count();
  if (k > kMaxAtoms) throw Error(Errc::InvalidArgument, "at most " + std::to_string(kMaxAtoms) + " atoms");
  {
    auto sorted = atoms_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error(Errc::InvalidArgument, "repeated atom label");
  }
  if (static_cast<int>(action_.size()) != group_->order())
    throw Error(Errc::InvalidArgument, "action needs one permutation per group element");
  for (const auto& p : action_) {
    if (static_cast<int>(p.size()) != k) throw Error(Errc::InvalidArgument, "action permutation has the wrong size");
    std::vector<char> hit(static_cast<std::size_t>(k), 0);
    for (int x : p) {
      if (x < 0 || x >= k || hit[static_cast<std::size_t>(x)]) throw Error(Errc::InvalidArgument, "action is not a permutation");
      hit[static_cast<std::size_t>(x)] = 1;
    }
  }
  for (int g = 0; g < group_->order(); ++g)
    for (int h = 0; h < group_->order(); ++h)
      for (int a = 0; a < k; ++a)
        if (action_[static_cast<std::size_t>(group_->mul(g, h))][static_cast<std::size_t>(a)] !=
            action_[static_cast<std::size_t>(g)][static_cast<std::size_t>(action_[static_cast<std::size_t>(h)][static_cast<std::size_t>(a)])])
          throw Error(Errc::InvalidArgument, "atom action is not a group action");
}

BooleanRing BooleanRing::trivial_action(int k, GroupPtr group) {
  if (k < 0 || k > kMaxAtoms) throw Error(Errc::InvalidArgument, "at most " + std::to_string(kMaxAtoms) + " atoms");
  std::vector<std::string> atoms;
  std::vector<int> id;
  for (int i = 0; i < k; ++i) {
    atoms.push_back(std::to_string(i + 1));
    id.push_back(i);
  }
  const int order = group ? group->order() : 0;
  return BooleanRing(std::move(atoms), std::move(group),
                     std::vector<std::vector<int>>(static_cast<std::size_t>(order), id));
}

RingElem BooleanRing::sigma(int g, RingElem r) const {
  if (!group_->contains(g)) throw Error(Errc::UnknownGroupElement, "group element out of range");
  RingElem out = 0;
  const auto& p = action_[static_cast<std::size_t>(g)];
  for (int a = 0; a < atom_count(); ++a)
    if (bit(r, a)) out |= RingElem{1} << p[static_cast<std::size_t>(a)];
  return out;
}

std::string BooleanRing::to_string(RingElem r) const {
  if (r == 0) return "0";
  if (r == one()) return "1";
  std::string s = "{";
  bool first = true;
  for (int a = 0; a < atom_count(); ++a) {
    if (!bit(r, a)) continue;
    if (!first) s += ",";
    first = false;
    s += atoms_[static_cast<std::size_t>(a)];
  }
  return s + "}";
}

RingElem BooleanRing::parse_element(std::string_view text) const {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text == "0") return 0;
  if (text == "1") return one();
  if (text.size() < 2 || text.front() != '{' || text.back() != '}')
    throw SyntaxError(0, "expected 0, 1 or a braced atom list");
  std::string_view body = text.substr(1, text.size() - 2);
  RingElem out = 0;
  if (trim(body).empty()) return 0;
  std::size_t offset = 1;
  while (true) {
    auto comma = body.find(',');
    std::string_view label = trim(body.substr(0, comma));
    auto it = std::find(atoms_.begin(), atoms_.end(), label);
    if (it == atoms_.end()) throw SyntaxError(offset, "unknown atom '" + std::string(label) + "'");
    out |= RingElem{1} << (it - atoms_.begin());
    if (comma == std::string_view::npos) break;
    offset += comma + 1;
    body.remove_prefix(comma + 1);
  }
  return out;
}

bool operator==(const BooleanRing& a, const BooleanRing& b) {
  return a.atoms_ == b.atoms_ && *a.group_ == *b.group_ && a.action_ == b.action_;
}

int BoolPolynomial::degree() const noexcept {
  int d = terms.empty() ? -1 : 0;
  for (const auto& [m, c] : terms) d = std::max(d, std::popcount(m));
  return d;
}

BoolPolynomial poly_constant(int e, int n, RingElem c) {
  BoolPolynomial f{e, n, {}};
  if (c) f.terms.emplace(0, c);
  return f;
}

BoolPolynomial poly_variable(int e, int n, int i, int j, RingElem unit) {
  if (i < 1 || i > e || j < 1 || j > n) throw Error(Errc::InvalidArgument, "variable index out of range");
  BoolPolynomial f{e, n, {}};
  if (unit) f.terms.emplace(std::uint64_t{1} << variable_index(n, i, j), unit);
  return f;
}

BoolPolynomial poly_add(const BoolPolynomial& a, const BoolPolynomial& b) {
  check_same_shape(a, b);
  BoolPolynomial out = a;
  for (const auto& [m, c] : b.terms) {
    RingElem v = out.terms[m] ^ c;
    if (v) out.terms[m] = v; else out.terms.erase(m);
  }
  return out;
}

BoolPolynomial poly_mul(const BoolPolynomial& a, const BoolPolynomial& b) {
  check_same_shape(a, b);
  BoolPolynomial out{a.e, a.n, {}};
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      RingElem c = ca & cb;
      if (!c) continue;
      RingElem v = out.terms[ma | mb] ^ c;
      if (v) out.terms[ma | mb] = v; else out.terms.erase(ma | mb);
    }
  return out;
}

RingElem evaluate(const BoolPolynomial& f, std::span<const RingElem> values) {
  if (static_cast<int>(values.size()) != f.variables())
    throw Error(Errc::InvalidArgument, "point has the wrong number of coordinates");
  RingElem out = 0;
  for (const auto& [m, c] : f.terms) {
    RingElem t = c;
    for (std::uint64_t rest = m; rest; rest &= rest - 1) t &= values[static_cast<std::size_t>(std::countr_zero(rest))];
    out ^= t;
  }
  return out;
}

std::vector<RingElem> sigma_point(const BooleanRing& ring, std::span<const RingElem> r) {
  const int e = ring.group().order();
  const int n = static_cast<int>(r.size());
  std::vector<RingElem> out(static_cast<std::size_t>(e * n));
  for (int i = 1; i <= e; ++i)
    for (int j = 1; j <= n; ++j)
      out[static_cast<std::size_t>(variable_index(n, i, j))] = ring.sigma(i - 1, r[static_cast<std::size_t>(j - 1)]);
  return out;
}

RingElem evaluate_at_orbit(const BooleanRing& ring, const BoolPolynomial& f, std::span<const RingElem> r) {
  check_shape(ring, f.e, f.n);
  if (static_cast<int>(r.size()) != f.n) throw Error(Errc::InvalidArgument, "point has the wrong arity");
  return evaluate(f, sigma_point(ring, r));
}

BoolPolynomial sigma_on_poly(const BooleanRing& ring, int k, const BoolPolynomial& f) {
  check_shape(ring, f.e, f.n);
  if (!ring.group().contains(k)) throw Error(Errc::UnknownGroupElement, "group element out of range");
  BoolPolynomial out{f.e, f.n, {}};
  for (const auto& [m, c] : f.terms) {
    std::uint64_t moved = 0;
    for (std::uint64_t rest = m; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      int i = v / f.n + 1;
      int j = v % f.n + 1;
      int target = ring.group().mul(k, i - 1) + 1;
      moved |= std::uint64_t{1} << variable_index(f.n, target, j);
    }
    RingElem sc = ring.sigma(k, c & ring.one());
    if (sc) out.terms[moved] = sc;
  }
  return out;
}

BoolPolynomial truncate(const Polynomial& f) {
  BoolPolynomial out{f.e, f.n, {}};
  for (const auto& t : f.terms) {
    if (static_cast<int>(t.exponents.size()) != f.e * f.n)
      throw Error(Errc::InvalidArgument, "exponent vector has the wrong length");
    std::uint64_t m = 0;
    for (std::size_t v = 0; v < t.exponents.size(); ++v) {
      if (t.exponents[v] < 0) throw Error(Errc::InvalidArgument, "negative exponent");
      if (t.exponents[v] > 0) m |= std::uint64_t{1} << v;
    }
    RingElem c = out.terms[m] ^ t.coefficient;
    if (c) out.terms[m] = c; else out.terms.erase(m);
  }
  return out;
}

RingElem evaluate(const Polynomial& f, std::span<const RingElem> values) {
  if (static_cast<int>(values.size()) != f.e * f.n)
    throw Error(Errc::InvalidArgument, "point has the wrong number of coordinates");
  RingElem out = 0;
  for (const auto& t : f.terms) {
    RingElem prod = t.coefficient;
    for (std::size_t v = 0; v < t.exponents.size(); ++v)
      for (int p = 0; p < t.exponents[v]; ++p) prod &= values[v];
    out ^= prod;
  }
  return out;
}

bool in_ideal(const BooleanRing& ring, const TransformalIdeal& ideal, const BoolPolynomial& f) {
  return Membership(ring, ideal).contains(f);
}

bool ideal_contains(const BooleanRing& ring, const TransformalIdeal& ideal, const TransformalIdeal& sub) {
  check_ideal(ring, sub);
  Membership mem(ring, ideal);
  return std::all_of(sub.generators.begin(), sub.generators.end(),
                     [&](const BoolPolynomial& g) { return mem.contains(g); });
}

bool is_g_invariant_ideal(const BooleanRing& ring, const TransformalIdeal& ideal) {
  Membership mem(ring, ideal);
  for (const auto& p : ideal.generators)
    for (int g = 0; g < ring.group().order(); ++g)
      if (!mem.contains(sigma_on_poly(ring, g, p))) return false;
  return true;
}

std::vector<std::vector<RingElem>> variety_points(const TransformalIdeal& ideal, const BooleanRing& ring,
                                                  std::uint64_t cap) {
  check_ideal(ring, ideal);
  const std::uint64_t total = point_count(ring, ideal.n, cap);
  std::vector<std::vector<RingElem>> out;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    auto r = point_of(ring, ideal.n, idx);
    if (vanishes(ideal, sigma_point(ring, r))) out.push_back(std::move(r));
  }
  return out;
}

std::optional<std::vector<RingElem>> check_diamond_axiom(const BooleanRing& ring, const TransformalIdeal& i,
                                                         const TransformalIdeal& j, std::uint64_t cap) {
  check_ideal(ring, i);
  check_ideal(ring, j);
  if (i.e != j.e || i.n != j.n) throw Error(Errc::InvalidArgument, "ideals over different variables");
  if (!is_g_invariant_ideal(ring, i)) throw Error(Errc::NotInvariant, "I is not G-invariant");
  if (!ideal_contains(ring, j, i)) throw Error(Errc::NotProperlyContained, "I is not contained in J");
  if (ideal_contains(ring, i, j)) throw Error(Errc::NotProperlyContained, "I equals J");
  const std::uint64_t total = point_count(ring, i.n, cap);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    auto r = point_of(ring, i.n, idx);
    auto p = sigma_point(ring, r);
    if (vanishes(i, p) && !vanishes(j, p)) return r;
  }
  return std::nullopt;
}

RingElem NonAtomWitness::embed(RingElem x) const {
  RingElem out = 0;
  for (std::size_t a = 0; a < atom_images.size(); ++a)
    if (bit(x, static_cast<int>(a))) out |= atom_images[a];
  return out;
}

NonAtomWitness find_non_atom_witness(const BooleanRing& ring, RingElem r) {
  if (!ring.contains(r)) throw Error(Errc::InvalidArgument, "element outside the ring");
  if (r == 0) throw Error(Errc::ZeroElement, "r = 0 has no proper part");
  const FiniteGroup& g = ring.group();
  const int e = g.order();
  const int k = ring.atom_count();
  // sigma_i(r) t_i = t_i puts t_i below sigma_i(r): at atom a, t_i is free when
  // a lies in sigma_i(r) and zero otherwise. The new atoms are pairs (a, p) with
  // p a 0/1 assignment of the free t_i.
  std::vector<RingElem> sr(static_cast<std::size_t>(e));
  for (int i = 0; i < e; ++i) sr[static_cast<std::size_t>(i)] = ring.sigma(i, r);
  struct NewAtom {
    int atom;
    std::uint64_t p;
  };
  std::vector<NewAtom> atoms;
  for (int a = 0; a < k; ++a) {
    std::uint64_t allowed = 0;
    for (int i = 0; i < e; ++i)
      if (bit(sr[static_cast<std::size_t>(i)], a)) allowed |= std::uint64_t{1} << i;
    for (std::uint64_t p = allowed;; p = (p - 1) & allowed) {
      if (atoms.size() >= static_cast<std::size_t>(kMaxAtoms))
        throw Error(Errc::SearchTooLarge, "extended ring needs more than " + std::to_string(kMaxAtoms) + " atoms");
      atoms.push_back({a, p});
      if (p == 0) break;
    }
  }
  std::sort(atoms.begin(), atoms.end(), [](const NewAtom& x, const NewAtom& y) {
    return x.atom != y.atom ? x.atom < y.atom : x.p < y.p;
  });
  std::vector<RingElem> images(static_cast<std::size_t>(k), 0);
  for (std::size_t idx = 0; idx < atoms.size(); ++idx)
    images[static_cast<std::size_t>(atoms[idx].atom)] |= RingElem{1} << idx;
  auto find_atom = [&](int a, std::uint64_t p) {
    for (std::size_t idx = 0; idx < atoms.size(); ++idx)
      if (atoms[idx].atom == a && atoms[idx].p == p) return static_cast<int>(idx);
    throw Error(Errc::InvalidArgument, "extended action leaves the atom set");
  };
  std::vector<std::string> labels;
  for (const auto& na : atoms) {
    std::string s = ring.atoms()[static_cast<std::size_t>(na.atom)] + "[";
    for (int i = 0; i < e; ++i) s += (na.p >> i & 1U) ? '1' : '0';
    labels.push_back(s + "]");
  }
  std::vector<std::vector<int>> action(static_cast<std::size_t>(e));
  for (int h = 0; h < e; ++h) {
    for (const auto& na : atoms) {
      std::uint64_t moved = 0;
      for (int i = 0; i < e; ++i)
        if (na.p >> i & 1U) moved |= std::uint64_t{1} << g.mul(h, i);
      action[static_cast<std::size_t>(h)].push_back(find_atom(ring.atom_perm(h)[static_cast<std::size_t>(na.atom)], moved));
    }
  }
  NonAtomWitness w{BooleanRing(std::move(labels), ring.group_ptr(), std::move(action)), images, 0, 0};
  w.r_image = w.embed(r);
  const int id = g.identity();
  for (std::size_t idx = 0; idx < atoms.size(); ++idx)
    if (atoms[idx].p >> id & 1U) w.y |= RingElem{1} << idx;

  // The embedding must be an injective, unital, G-equivariant ring map; it
  // is determined by the atom images.
  RingElem cover = 0;
  for (int a = 0; a < k; ++a) {
    RingElem im = images[static_cast<std::size_t>(a)];
    if (im == 0 || (cover & im) != 0) throw Error(Errc::InvalidArgument, "embedding is not injective");
    cover |= im;
    for (int h = 0; h < e; ++h)
      if (w.embed(ring.sigma(h, RingElem{1} << a)) != w.extended.sigma(h, im))
        throw Error(Errc::InvalidArgument, "embedding is not equivariant");
  }
  if (cover != w.extended.one()) throw Error(Errc::InvalidArgument, "embedding is not unital");
  if ((w.r_image & w.y) != w.y || w.r_image == w.y) throw Error(Errc::InvalidArgument, "y is not a proper part of r");
  return w;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const BooleanRing& ring, int n) : s_(text), ring_(ring), n_(n) {}

  BoolPolynomial run() {
    const int e = ring_.group().order();
    check_shape(ring_, e, n_);
    BoolPolynomial out{e, n_, {}};
    skip();
    if (pos_ == s_.size()) throw SyntaxError(pos_, "empty polynomial");
    while (true) {
      out = poly_add(out, term(e));
      skip();
      if (pos_ == s_.size()) break;
      if (s_[pos_] != '+') throw SyntaxError(pos_, "expected '+'");
      ++pos_;
    }
    return out;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  BoolPolynomial term(int e) {
    BoolPolynomial t = poly_constant(e, n_, ring_.one());
    while (true) {
      t = poly_mul(t, factor(e));
      skip();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        continue;
      }
      return t;
    }
  }

  int number() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw SyntaxError(pos_, "expected a number");
    if (pos_ - start > 6) throw SyntaxError(start, "index too large");
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }

  void expect(char c) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != c) throw SyntaxError(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  BoolPolynomial factor(int e) {
    skip();
    if (pos_ >= s_.size()) throw SyntaxError(pos_, "unexpected end of input");
    const char c = s_[pos_];
    if (c == '0' || c == '1') {
      ++pos_;
      return poly_constant(e, n_, c == '1' ? ring_.one() : 0);
    }
    if (c == '{') {
      std::size_t start = pos_;
      auto close = s_.find('}', pos_);
      if (close == std::string_view::npos) throw SyntaxError(pos_, "unterminated '{'");
      pos_ = close + 1;
      try {
        return poly_constant(e, n_, ring_.parse_element(s_.substr(start, pos_ - start)));
      } catch (const SyntaxError& err) {
        throw SyntaxError(start + err.position(), "bad ring element");
      }
    }
    if (c == 't') {
      std::size_t start = pos_;
      ++pos_;
      expect('[');
      int i = number();
      expect(',');
      int j = number();
      expect(']');
      if (i < 1 || i > e || j < 1 || j > n_) throw SyntaxError(start, "variable t[" + std::to_string(i) + "," +
                                                                      std::to_string(j) + "] out of range");
      return poly_variable(e, n_, i, j, ring_.one());
    }
    throw SyntaxError(pos_, std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  const BooleanRing& ring_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace

BoolPolynomial parse_bool_polynomial(std::string_view text, const BooleanRing& ring, int n) {
  return PolyParser(text, ring, n).run();
}

std::string to_string(const BoolPolynomial& f, const BooleanRing& ring) {
  if (f.terms.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : f.terms) {
    if (!out.empty()) out += " + ";
    std::string coef = ring.to_string(c & ring.one());
    std::string mono;
    for (std::uint64_t rest = m; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      if (!mono.empty()) mono += "*";
      mono += "t[" + std::to_string(v / f.n + 1) + "," + std::to_string(v % f.n + 1) + "]";
    }
    if (mono.empty()) out += coef;
    else if ((c & ring.one()) == ring.one()) out += mono;
    else out += coef + "*" + mono;
  }
  return out;
}

}  // namespace gact
