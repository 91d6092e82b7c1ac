#pragma once

// Relative (fractional) ideals of a numerical semigroup.
//
// A monomial fractional ideal I of R = k[[S]] is determined by its exponent
// set E, a subset of Z with S + E in E and a minimum. Under that dictionary
//
//   ring sum      I + J      <->  union_sum(E, F)      (set union)
//   ring product  I * J      <->  minkowski_sum(E, F)  (element-wise sums)
//   Hom_R(J, I) = (I : J)    <->  quotient(E, F) = {z : z + F in E}
//
// Every such E is a torsion-free rank-one module, so torsion never appears.

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semicurve/semigroup.hpp"

namespace semicurve {

class RelativeIdeal {
 public:
  /// gens + S. Throws std::invalid_argument if gens is empty.
  static RelativeIdeal from_generators(const NumericalSemigroup& ambient,
                                       std::span<const int> gens);
  static RelativeIdeal from_generators(const NumericalSemigroup& ambient,
                                       std::initializer_list<int> gens) {
    return from_generators(ambient,
                           std::span<const int>(gens.begin(), gens.size()));
  }

  /// The set `elements` together with [tail_start, inf). Elements at or
  /// beyond tail_start are allowed and ignored. Throws InvalidIdeal unless
  /// the set is closed under S.
  static RelativeIdeal from_set(const NumericalSemigroup& ambient,
                                std::span<const int> elements, int tail_start);

  /// S viewed as an ideal over itself.
  static RelativeIdeal whole_ring(const NumericalSemigroup& ambient);

  /// An oversemigroup T of S viewed as a fractional S-ideal. Throws
  /// NotAnExtension unless S is contained in T.
  static RelativeIdeal of_overring(const NumericalSemigroup& ambient,
                                   const NumericalSemigroup& overring);

  /// Builds the ideal {z : z >= hi or (lo <= z < hi and pred(z))}. The
  /// result is normalized; closure under S is the caller's responsibility.
  template <class Pred>
  static RelativeIdeal from_window(std::shared_ptr<const NumericalSemigroup> ambient,
                                   int lo, int hi, Pred&& pred);

  const NumericalSemigroup& ambient() const noexcept { return *ambient_; }
  const std::shared_ptr<const NumericalSemigroup>& ambient_ptr() const noexcept {
    return ambient_;
  }

  int min_element() const noexcept { return min_; }
  /// Smallest t with [t, inf) contained in the ideal.
  int tail_start() const noexcept { return tail_; }
  /// Members in [min_element, tail_start), ascending.
  std::vector<int> prefix() const;

  bool contains(int z) const noexcept {
    if (z < min_) return false;
    if (z >= tail_) return true;
    return bits_[static_cast<std::size_t>(z - min_)] != 0;
  }

  RelativeIdeal shifted(int z) const;

  /// Set containment; both sides must share the ambient semigroup.
  bool is_subset_of(const RelativeIdeal& other) const;

  /// Equality as sets over the same ambient.
  friend bool operator==(const RelativeIdeal& a, const RelativeIdeal& b);

 private:
  RelativeIdeal(std::shared_ptr<const NumericalSemigroup> ambient, int min,
                int tail, std::vector<char> bits)
      : ambient_(std::move(ambient)), min_(min), tail_(tail), bits_(std::move(bits)) {}

  std::shared_ptr<const NumericalSemigroup> ambient_;
  int min_ = 0;
  int tail_ = 0;
  std::vector<char> bits_;  // bits_[z - min_] for z in [min_, tail_)
};

template <class Pred>
RelativeIdeal RelativeIdeal::from_window(
    std::shared_ptr<const NumericalSemigroup> ambient, int lo, int hi,
    Pred&& pred) {
  int min = hi;
  for (int z = lo; z < hi; ++z) {
    if (pred(z)) {
      min = z;
      break;
    }
  }
  int tail = hi;
  while (tail > min && pred(tail - 1)) --tail;
  std::vector<char> bits(static_cast<std::size_t>(tail - min), 0);
  for (int z = min; z < tail; ++z) bits[z - min] = pred(z) ? 1 : 0;
  return RelativeIdeal(std::move(ambient), min, tail, std::move(bits));
}

/// "{-2,1,3,4,...}" style rendering.
std::string to_string(const RelativeIdeal& e);

/// S \ {0}. For N this is 1 + N.
RelativeIdeal maximal_ideal(const NumericalSemigroup& s);
/// Conductor of the normalization, (S : N) = [c, inf). Equals S when S = N.
RelativeIdeal conductor_ideal(const NumericalSemigroup& s);
/// N as a fractional S-ideal (the normalization).
RelativeIdeal normalization_ideal(const NumericalSemigroup& s);
/// Canonical ideal K = {F - z : z not in S}, normalized to minimum 0.
/// K = S exactly when S is symmetric.
RelativeIdeal canonical_ideal(const NumericalSemigroup& s);

/// Ring product: {e + f}.
RelativeIdeal minkowski_sum(const RelativeIdeal& e, const RelativeIdeal& f);
/// Ring sum: E union F.
RelativeIdeal union_sum(const RelativeIdeal& e, const RelativeIdeal& f);
/// E - F = {z : z + F in E}, the exponent set of Hom(F, E).
RelativeIdeal quotient(const RelativeIdeal& e, const RelativeIdeal& f);
/// S - E.
RelativeIdeal dual(const RelativeIdeal& e);
RelativeIdeal bidual(const RelativeIdeal& e);
/// E** == E as sets. E is always contained in E**, so no shift is needed.
bool is_reflexive(const RelativeIdeal& e);
/// E + (S - E); always inside S.
RelativeIdeal trace(const RelativeIdeal& e);
/// E - E as an oversemigroup of the ambient.
NumericalSemigroup endomorphism_semigroup(const RelativeIdeal& e);

/// The shift z with F = z + E, if one exists.
std::optional<int> is_isomorphic(const RelativeIdeal& e, const RelativeIdeal& f);

/// T + E in E. Throws AmbientMismatch if T does not contain the ambient.
bool is_module_over(const RelativeIdeal& e, const NumericalSemigroup& t);

/// Elements of E outside m + E; regenerate E under from_generators.
std::vector<int> minimal_ideal_generators(const RelativeIdeal& e);

/// One representative per isomorphism class: the ideals E with min 0, i.e.
/// S in E in N. Ordered by number of adjoined gaps, then lexicographically.
std::vector<RelativeIdeal> enumerate_normalized_ideals(const NumericalSemigroup& s);

/// Direct sum of rank-one ideals over a common ambient.
class MonomialModule {
 public:
  /// Throws std::invalid_argument when empty, AmbientMismatch when the
  /// components disagree on the ambient.
  explicit MonomialModule(std::vector<RelativeIdeal> components);

  const std::vector<RelativeIdeal>& components() const noexcept {
    return components_;
  }
  const NumericalSemigroup& ambient() const noexcept {
    return components_.front().ambient();
  }
  std::size_t size() const noexcept { return components_.size(); }

 private:
  std::vector<RelativeIdeal> components_;
};

/// tr(M + N) = tr(M) + tr(N): the union of component traces.
RelativeIdeal module_trace(const MonomialModule& m);
MonomialModule module_dual(const MonomialModule& m);
bool module_is_reflexive(const MonomialModule& m);
/// M is a generator iff its trace is the whole ring.
bool module_is_generator(const MonomialModule& m);

}  // namespace semicurve
