#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gact/group.hpp"
#include "gact/structure.hpp"
#include "gact/term.hpp"

namespace gact {

enum class Entry : std::uint8_t { Eq = 0, R = 1, NR = 2 };

std::string_view entry_name(Entry e) noexcept;

/// The closed term set Z = {sigma_g(x_j)} u {sigma_g(y_k)}. Term index is
/// slot*|G| + g, x-slots first, so Z0 is the prefix of length |G|*n.
class TermSet {
 public:
  TermSet(GroupPtr group, int n, int n_prime);

  const FiniteGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  int n() const noexcept { return n_; }
  int n_prime() const noexcept { return n_prime_; }
  int slots() const noexcept { return n_ + n_prime_; }
  int size() const noexcept { return slots() * group_->order(); }
  int z0_size() const noexcept { return n_ * group_->order(); }

  int index(int slot, int g) const { return slot * group_->order() + g; }
  int slot(int t) const { return t / group_->order(); }
  int element(int t) const { return t % group_->order(); }
  /// sigma_k applied to term t.
  int act(int k, int t) const { return index(slot(t), group_->mul(k, element(t))); }

  std::string var_name(int slot) const;
  Term term(int t) const { return Term{element(t), var_name(slot(t))}; }
  /// Throws Errc::InvalidArgument for variables outside the set.
  int index_of(const Term& t) const;
  /// "x0", "s·x0", "y0", ...
  std::string name(int t) const;

  friend bool operator==(const TermSet& a, const TermSet& b) {
    return *a.group_ == *b.group_ && a.n_ == b.n_ && a.n_prime_ == b.n_prime_;
  }

 private:
  GroupPtr group_;
  int n_;
  int n_prime_;
};

/// A total assignment of EQ / R / NR to ordered pairs of terms. Nothing beyond
/// shape is enforced here; is_consistent decides the rest.
class Configuration {
 public:
  explicit Configuration(TermSet terms);
  Configuration(TermSet terms, std::vector<Entry> entries);

  const TermSet& terms() const noexcept { return terms_; }
  Entry at(int a, int b) const { return entries_[idx(a, b)]; }
  /// Sets both (a, b) and (b, a).
  void set(int a, int b, Entry e);
  void set_directed(int a, int b, Entry e) { entries_[idx(a, b)] = e; }
  const std::vector<Entry>& entries() const noexcept { return entries_; }

  /// Restriction to Z0 (drops the y-variables).
  Configuration restrict_to_z0() const;
  /// Entries over unordered pairs a < b in lexicographic order.
  std::vector<Entry> upper_entries() const;

  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.terms_ == b.terms_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t idx(int a, int b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(terms_.size()) + static_cast<std::size_t>(b);
  }
  TermSet terms_;
  std::vector<Entry> entries_;
};

struct ConsistencyReport {
  bool consistent = false;
  std::optional<GStructure> witness;
  std::optional<std::string> violation;
  /// Witness element realizing each term (consistent case only).
  std::vector<int> realization;
};

ConsistencyReport is_consistent(const Configuration& q);

/// Allowed entries per pair, as a bit mask over {EQ, R, NR}.
class PartialConfig {
 public:
  static constexpr std::uint8_t kEq = 1, kR = 2, kNR = 4, kAll = 7;

  explicit PartialConfig(TermSet terms);

  const TermSet& terms() const noexcept { return terms_; }
  std::uint8_t mask(int a, int b) const { return masks_[idx(a, b)]; }
  void restrict(int a, int b, std::uint8_t allowed);
  void add(const Literal& lit);
  /// Pins every pair of Z0 to the entries of q (which must live on Z0).
  void pin_z0(const Configuration& q);

 private:
  friend class ExtensionEnumerator;
  std::size_t idx(int a, int b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(terms_.size()) + static_cast<std::size_t>(b);
  }
  TermSet terms_;
  std::vector<std::uint8_t> masks_;
};

/// Calls `visit` for each consistent configuration extending `base`, in
/// canonical order (lexicographic over upper_entries with EQ < R < NR).
/// Returning false stops the enumeration. Throws Errc::ContradictoryBase when
/// propagating the base empties some pair's mask.
std::size_t for_each_extension(const PartialConfig& base, const std::function<bool(const Configuration&)>& visit);

std::vector<Configuration> enumerate_extensions(const std::vector<Literal>& base, const TermSet& terms,
                                                std::size_t cap = 1'000'000);
std::vector<Configuration> enumerate_extensions(const PartialConfig& base, std::size_t cap = 1'000'000);

/// Reads the configuration of (xs, ys) off a graph.
Configuration configuration_of(const GStructure& m, const std::vector<int>& xs, const std::vector<int>& ys);

}  // namespace gact
