#pragma once

// Numerical semigroups: cofinite additive submonoids of N.
//
// A semigroup S stands for the monomial curve ring k[[t^s : s in S]]. The
// membership table over [0, c) is the source of truth; gaps and minimal
// generators are derived when the value is built and never change after.

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace semicurve {

inline constexpr int kDefaultGenusCap = 20;

class NumericalSemigroup {
 public:
  /// N itself (the normalization of every branch).
  NumericalSemigroup();

  static NumericalSemigroup natural() { return NumericalSemigroup{}; }

  /// Semigroup generated by `gens`; redundant generators are dropped.
  /// Throws NotNumerical if gcd(gens) != 1 and std::invalid_argument if
  /// gens is empty or has a non-positive entry.
  static NumericalSemigroup from_generators(std::span<const int> gens);
  static NumericalSemigroup from_generators(std::initializer_list<int> gens) {
    return from_generators(std::span<const int>(gens.begin(), gens.size()));
  }

  /// Semigroup N \ gaps. Throws NotASemigroup when the complement is not
  /// additively closed.
  static NumericalSemigroup from_gaps(std::span<const int> gaps);

  /// Semigroup whose members in [0, member.size()) are flagged in `member`
  /// and which contains every integer >= member.size().
  static NumericalSemigroup from_membership(std::vector<char> member);

  bool contains(int n) const noexcept {
    if (n < 0) return false;
    if (n >= conductor_) return true;
    return member_[static_cast<std::size_t>(n)] != 0;
  }

  /// Largest gap, or -1 for N.
  int frobenius() const noexcept { return conductor_ - 1; }
  /// c = frobenius + 1; every n >= c is in S.
  int conductor() const noexcept { return conductor_; }
  int genus() const noexcept { return static_cast<int>(gaps_.size()); }
  int multiplicity() const noexcept { return generators_.front(); }
  int embedding_dimension() const noexcept {
    return static_cast<int>(generators_.size());
  }
  bool is_natural() const noexcept { return conductor_ == 0; }

  const std::vector<int>& gaps() const noexcept { return gaps_; }
  const std::vector<int>& minimal_generators() const noexcept {
    return generators_;
  }
  /// Membership over [0, c).
  const std::vector<char>& membership_prefix() const noexcept {
    return member_;
  }

  /// Elements of S below `bound`, ascending.
  std::vector<int> elements_below(int bound) const;

  /// True iff `other` is a subset of *this.
  bool contains_semigroup(const NumericalSemigroup& other) const noexcept;

  /// Structural equality: identical gap sets.
  friend bool operator==(const NumericalSemigroup& a,
                         const NumericalSemigroup& b) noexcept {
    return a.gaps_ == b.gaps_;
  }
  /// Total order: genus, then lexicographic gap set.
  friend std::strong_ordering operator<=>(const NumericalSemigroup& a,
                                          const NumericalSemigroup& b) noexcept;

 private:
  explicit NumericalSemigroup(std::vector<char> member);

  int conductor_ = 0;
  std::vector<char> member_;
  std::vector<int> gaps_;
  std::vector<int> generators_;
};

/// "<3,5,7>"; N renders as "<1>".
std::string to_string(const NumericalSemigroup& s);

struct SemigroupInvariants {
  int multiplicity = 1;
  int embedding_dimension = 1;
  int genus = 0;
  int frobenius = -1;
  int conductor = 0;
  std::vector<int> apery_set;
  std::vector<int> pseudo_frobenius;
  int type = 1;
};

/// Apery set of S with respect to a nonzero element n: the least element of
/// S in each residue class mod n, indexed by residue.
std::vector<int> apery_set(const NumericalSemigroup& s, int n);

/// {f not in S : f + m in S for every nonzero m in S}, ascending. For N this
/// is {-1}.
std::vector<int> pseudo_frobenius(const NumericalSemigroup& s);

SemigroupInvariants invariants(const NumericalSemigroup& s);

/// Gorenstein criterion for the semigroup ring, decided by 2g == c.
bool is_symmetric(const NumericalSemigroup& s) noexcept;

/// Children in the semigroup tree: S \ {g} for every minimal generator g
/// larger than the Frobenius number.
std::vector<NumericalSemigroup> tree_children(const NumericalSemigroup& s);

/// Depth-first walk of the subtree rooted at `root`, down to `max_genus`.
/// Visits `root` itself first. Each semigroup is visited exactly once.
void for_each_descendant(
    const NumericalSemigroup& root, int max_genus,
    const std::function<void(const NumericalSemigroup&)>& visit);

/// Visits every numerical semigroup of genus <= max_genus exactly once, in
/// tree (depth-first) order. Throws GenusCapExceeded above `genus_cap` and
/// std::invalid_argument for negative max_genus.
void for_each_semigroup(
    int max_genus, const std::function<void(const NumericalSemigroup&)>& visit,
    int genus_cap = kDefaultGenusCap);

/// All semigroups of genus <= max_genus sorted by (genus, gap set).
std::vector<NumericalSemigroup> enumerate_semigroups(
    int max_genus, int genus_cap = kDefaultGenusCap);

/// counts[g] = number of semigroups of genus g, for g in [0, max_genus].
std::vector<std::uint64_t> count_by_genus(int max_genus,
                                          int genus_cap = kDefaultGenusCap);

}  // namespace semicurve
