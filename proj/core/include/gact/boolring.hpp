#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gact/group.hpp"

namespace gact {

/// A ring element: the characteristic vector of a set of atoms.
using RingElem = std::uint64_t;

constexpr int kMaxAtoms = 62;

/// The Boolean ring of all subsets of a finite set of atoms, with G acting by
/// permuting atoms. Addition is symmetric difference, multiplication is
/// intersection.
class BooleanRing {
 public:
  /// `action[g]` permutes atom indices; must be a homomorphism from G.
  BooleanRing(std::vector<std::string> atoms, GroupPtr group, std::vector<std::vector<int>> action);
  /// Atoms "1".."k" with the trivial action.
  static BooleanRing trivial_action(int k, GroupPtr group);

  int atom_count() const noexcept { return static_cast<int>(atoms_.size()); }
  const std::vector<std::string>& atoms() const noexcept { return atoms_; }
  const FiniteGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  const std::vector<int>& atom_perm(int g) const { return action_[static_cast<std::size_t>(g)]; }
  const std::vector<std::vector<int>>& action() const noexcept { return action_; }

  RingElem one() const noexcept { return atoms_.empty() ? 0 : (~RingElem{0} >> (64 - atoms_.size())); }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << atoms_.size(); }
  bool contains(RingElem r) const noexcept { return (r & ~one()) == 0; }

  static RingElem add(RingElem a, RingElem b) noexcept { return a ^ b; }
  static RingElem mul(RingElem a, RingElem b) noexcept { return a & b; }
  RingElem sigma(int g, RingElem r) const;

  /// "0", "1", or a braced list of atom labels such as "{1,3}".
  std::string to_string(RingElem r) const;
  RingElem parse_element(std::string_view text) const;

  friend bool operator==(const BooleanRing& a, const BooleanRing& b);

 private:
  std::vector<std::string> atoms_;
  GroupPtr group_;
  std::vector<std::vector<int>> action_;
};

/// Index of t[i,j] (1-based i <= e, j <= n).
constexpr int variable_index(int n, int i, int j) noexcept { return (i - 1) * n + (j - 1); }

/// Multilinear polynomial in t[i,j] over a Boolean ring; monomials are bit
/// masks over the e*n variables and only nonzero coefficients are stored.
struct BoolPolynomial {
  int e = 1;
  int n = 1;
  std::map<std::uint64_t, RingElem> terms;

  int variables() const noexcept { return e * n; }
  bool is_zero() const noexcept { return terms.empty(); }
  int degree() const noexcept;
  friend bool operator==(const BoolPolynomial&, const BoolPolynomial&) = default;
};

BoolPolynomial poly_constant(int e, int n, RingElem c);
/// t[i,j] with coefficient `unit` (normally the ring's 1).
BoolPolynomial poly_variable(int e, int n, int i, int j, RingElem unit);
BoolPolynomial poly_add(const BoolPolynomial& a, const BoolPolynomial& b);
BoolPolynomial poly_mul(const BoolPolynomial& a, const BoolPolynomial& b);

/// Value at a point; `values[v]` is the value of variable v.
RingElem evaluate(const BoolPolynomial& f, std::span<const RingElem> values);
/// The point sigma-bar(r): t[i,j] takes sigma_{g_i}(r_j), g_i the i-th group element.
std::vector<RingElem> sigma_point(const BooleanRing& ring, std::span<const RingElem> r);
RingElem evaluate_at_orbit(const BooleanRing& ring, const BoolPolynomial& f, std::span<const RingElem> r);

/// Coefficients moved by sigma_k and block i sent to block k*i.
BoolPolynomial sigma_on_poly(const BooleanRing& ring, int k, const BoolPolynomial& f);

/// Polynomial with explicit exponents, before reduction modulo x^2 = x.
struct Polynomial {
  int e = 1;
  int n = 1;
  struct Term {
    std::vector<int> exponents;
    RingElem coefficient = 0;
  };
  std::vector<Term> terms;
};

BoolPolynomial truncate(const Polynomial& f);
RingElem evaluate(const Polynomial& f, std::span<const RingElem> values);

struct TransformalIdeal {
  int e = 1;
  int n = 1;
  std::vector<BoolPolynomial> generators;
};

/// Largest e*n handled by ideal membership.
constexpr int kMaxMembershipVariables = 10;

bool in_ideal(const BooleanRing& ring, const TransformalIdeal& ideal, const BoolPolynomial& f);
/// Whether every generator of `sub` lies in `ideal`.
bool ideal_contains(const BooleanRing& ring, const TransformalIdeal& ideal, const TransformalIdeal& sub);
bool is_g_invariant_ideal(const BooleanRing& ring, const TransformalIdeal& ideal);

constexpr std::uint64_t kDefaultPointCap = std::uint64_t{1} << 20;

/// Points r in R^n, ordered lexicographically by (r_1, ..., r_n) with ring
/// elements compared as bit masks.
std::vector<std::vector<RingElem>> variety_points(const TransformalIdeal& ideal, const BooleanRing& ring,
                                                  std::uint64_t cap = kDefaultPointCap);

/// First r with every generator of I vanishing at sigma-bar(r) and some
/// generator of J not vanishing. Throws Errc::NotInvariant,
/// Errc::NotProperlyContained or Errc::SearchTooLarge.
std::optional<std::vector<RingElem>> check_diamond_axiom(const BooleanRing& ring, const TransformalIdeal& i,
                                                         const TransformalIdeal& j,
                                                         std::uint64_t cap = kDefaultPointCap);

struct NonAtomWitness {
  BooleanRing extended;
  /// Image of each atom of the original ring.
  std::vector<RingElem> atom_images;
  RingElem r_image = 0;
  RingElem y = 0;

  RingElem embed(RingElem x) const;
};

/// Adjoins t_1..t_e below sigma_1(r)..sigma_e(r) and returns y = t_1 with
/// r*y = y and r != y. Throws Errc::ZeroElement for r = 0.
NonAtomWitness find_non_atom_witness(const BooleanRing& ring, RingElem r);

/// Sum of terms such as "{1,3}*t[1,1]*t[2,1] + 1". Throws SyntaxError.
BoolPolynomial parse_bool_polynomial(std::string_view text, const BooleanRing& ring, int n);
std::string to_string(const BoolPolynomial& f, const BooleanRing& ring);

}  // namespace gact
