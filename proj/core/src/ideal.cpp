#include "semicurve/ideal.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "semicurve/error.hpp"

namespace semicurve {

namespace {

using AmbientPtr = std::shared_ptr<const NumericalSemigroup>;

AmbientPtr share(const NumericalSemigroup& s) {
  return std::make_shared<const NumericalSemigroup>(s);
}

void require_same_ambient(const RelativeIdeal& a, const RelativeIdeal& b) {
  if (a.ambient_ptr() == b.ambient_ptr()) return;
  if (a.ambient() == b.ambient()) return;
  throw AmbientMismatch("ideals over " + to_string(a.ambient()) + " and " +
                        to_string(b.ambient()));
}

RelativeIdeal ring_over(const AmbientPtr& s) {
  return RelativeIdeal::from_window(s, 0, s->conductor(),
                                    [&](int z) { return s->contains(z); });
}

}  // namespace

RelativeIdeal RelativeIdeal::from_generators(const NumericalSemigroup& ambient,
                                             std::span<const int> gens) {
  if (gens.empty()) throw std::invalid_argument("ideal generator list is empty");
  auto s = share(ambient);
  const int lo = *std::min_element(gens.begin(), gens.end());
  // lo + S already covers [lo + c, inf).
  return from_window(s, lo, lo + s->conductor(), [&](int z) {
    return std::any_of(gens.begin(), gens.end(),
                       [&](int g) { return s->contains(z - g); });
  });
}

RelativeIdeal RelativeIdeal::from_set(const NumericalSemigroup& ambient,
                                      std::span<const int> elements,
                                      int tail_start) {
  auto s = share(ambient);
  int lo = tail_start;
  for (int x : elements) lo = std::min(lo, x);
  std::vector<char> in(static_cast<std::size_t>(tail_start - lo), 0);
  for (int x : elements) {
    if (x < tail_start) in[x - lo] = 1;
  }
  auto ideal = from_window(s, lo, tail_start, [&](int z) { return in[z - lo] != 0; });
  const int m = s->multiplicity();
  for (int z : ideal.prefix()) {
    for (int x = m; z + x < ideal.tail_start(); ++x) {
      if (s->contains(x) && !ideal.contains(z + x)) {
        std::ostringstream msg;
        msg << "set is not an ideal over " << to_string(*s) << ": " << z
            << " + " << x << " is missing";
        throw InvalidIdeal(msg.str());
      }
    }
  }
  return ideal;
}

RelativeIdeal RelativeIdeal::whole_ring(const NumericalSemigroup& ambient) {
  return ring_over(share(ambient));
}

RelativeIdeal RelativeIdeal::of_overring(const NumericalSemigroup& ambient,
                                         const NumericalSemigroup& overring) {
  if (!overring.contains_semigroup(ambient)) {
    throw NotAnExtension(to_string(overring) + " does not contain " +
                         to_string(ambient));
  }
  return from_window(share(ambient), 0, overring.conductor(),
                     [&](int z) { return overring.contains(z); });
}

std::vector<int> RelativeIdeal::prefix() const {
  std::vector<int> out;
  for (int z = min_; z < tail_; ++z) {
    if (contains(z)) out.push_back(z);
  }
  return out;
}

RelativeIdeal RelativeIdeal::shifted(int z) const {
  return RelativeIdeal(ambient_, min_ + z, tail_ + z, bits_);
}

bool RelativeIdeal::is_subset_of(const RelativeIdeal& other) const {
  require_same_ambient(*this, other);
  const int hi = std::max(tail_, other.tail_);
  for (int z = min_; z < hi; ++z) {
    if (contains(z) && !other.contains(z)) return false;
  }
  return true;
}

bool operator==(const RelativeIdeal& a, const RelativeIdeal& b) {
  return a.ambient() == b.ambient() && a.min_ == b.min_ && a.tail_ == b.tail_ &&
         a.bits_ == b.bits_;
}

std::string to_string(const RelativeIdeal& e) {
  std::string out = "{";
  for (int z : e.prefix()) out += std::to_string(z) + ",";
  out += std::to_string(e.tail_start()) + ",...}";
  return out;
}

RelativeIdeal maximal_ideal(const NumericalSemigroup& s) {
  auto p = share(s);
  return RelativeIdeal::from_window(p, 1, std::max(1, s.conductor()),
                                    [&](int z) { return p->contains(z); });
}

RelativeIdeal conductor_ideal(const NumericalSemigroup& s) {
  return RelativeIdeal::from_window(share(s), s.conductor(), s.conductor(),
                                    [](int) { return false; });
}

RelativeIdeal normalization_ideal(const NumericalSemigroup& s) {
  return RelativeIdeal::from_window(share(s), 0, 0, [](int) { return false; });
}

RelativeIdeal canonical_ideal(const NumericalSemigroup& s) {
  auto p = share(s);
  const int frob = s.frobenius();
  return RelativeIdeal::from_window(p, 0, s.conductor(),
                                    [&](int k) { return !p->contains(frob - k); });
}

RelativeIdeal minkowski_sum(const RelativeIdeal& e, const RelativeIdeal& f) {
  require_same_ambient(e, f);
  const int lo = e.min_element() + f.min_element();
  const int hi = std::min(e.min_element() + f.tail_start(),
                          e.tail_start() + f.min_element());
  return RelativeIdeal::from_window(e.ambient_ptr(), lo, hi, [&](int z) {
    for (int x = e.min_element(); x <= z - f.min_element(); ++x) {
      if (e.contains(x) && f.contains(z - x)) return true;
    }
    return false;
  });
}

RelativeIdeal union_sum(const RelativeIdeal& e, const RelativeIdeal& f) {
  require_same_ambient(e, f);
  const int lo = std::min(e.min_element(), f.min_element());
  const int hi = std::min(e.tail_start(), f.tail_start());
  return RelativeIdeal::from_window(e.ambient_ptr(), lo, hi, [&](int z) {
    return e.contains(z) || f.contains(z);
  });
}

RelativeIdeal quotient(const RelativeIdeal& e, const RelativeIdeal& f) {
  require_same_ambient(e, f);
  // z + min(F) must reach E, and once z + min(F) >= tail(E) all of z + F is
  // in the tail of E.
  const int lo = e.min_element() - f.min_element();
  const int hi = e.tail_start() - f.min_element();
  return RelativeIdeal::from_window(e.ambient_ptr(), lo, hi, [&](int z) {
    for (int x = f.min_element(); z + x < e.tail_start(); ++x) {
      if (f.contains(x) && !e.contains(z + x)) return false;
    }
    return true;
  });
}

RelativeIdeal dual(const RelativeIdeal& e) {
  return quotient(ring_over(e.ambient_ptr()), e);
}

RelativeIdeal bidual(const RelativeIdeal& e) { return dual(dual(e)); }

bool is_reflexive(const RelativeIdeal& e) { return bidual(e) == e; }

RelativeIdeal trace(const RelativeIdeal& e) { return minkowski_sum(e, dual(e)); }

NumericalSemigroup endomorphism_semigroup(const RelativeIdeal& e) {
  const auto q = quotient(e, e);
  std::vector<char> member(static_cast<std::size_t>(q.tail_start()), 0);
  for (int z = 0; z < q.tail_start(); ++z) member[z] = q.contains(z) ? 1 : 0;
  return NumericalSemigroup::from_membership(std::move(member));
}

std::optional<int> is_isomorphic(const RelativeIdeal& e, const RelativeIdeal& f) {
  require_same_ambient(e, f);
  const int z = f.min_element() - e.min_element();
  if (e.shifted(z) == f) return z;
  return std::nullopt;
}

bool is_module_over(const RelativeIdeal& e, const NumericalSemigroup& t) {
  if (!t.contains_semigroup(e.ambient())) {
    throw AmbientMismatch(to_string(t) + " does not contain " +
                          to_string(e.ambient()));
  }
  const int span = e.tail_start() - e.min_element();
  for (int x = 1; x < span; ++x) {
    if (!t.contains(x)) continue;
    for (int z = e.min_element(); z + x < e.tail_start(); ++z) {
      if (e.contains(z) && !e.contains(z + x)) return false;
    }
  }
  return true;
}

std::vector<int> minimal_ideal_generators(const RelativeIdeal& e) {
  const auto me = minkowski_sum(maximal_ideal(e.ambient()), e);
  std::vector<int> out;
  for (int z = e.min_element(); z < me.tail_start(); ++z) {
    if (e.contains(z) && !me.contains(z)) out.push_back(z);
  }
  return out;
}

std::vector<RelativeIdeal> enumerate_normalized_ideals(const NumericalSemigroup& s) {
  auto p = share(s);
  const auto& gaps = s.gaps();
  const int c = s.conductor();
  std::vector<char> chosen(static_cast<std::size_t>(c), 0);
  std::vector<std::vector<int>> found;

  // Decide gaps from the largest down: adjoining g forces every gap of the
  // form g + x (x in S, x > 0), and those are already decided.
  std::function<void(int)> walk = [&](int idx) {
    if (idx < 0) {
      std::vector<int> adjoined;
      for (int g : gaps) {
        if (chosen[g]) adjoined.push_back(g);
      }
      found.push_back(std::move(adjoined));
      return;
    }
    const int g = gaps[idx];
    walk(idx - 1);
    for (int x = s.multiplicity(); g + x < c; ++x) {
      if (s.contains(x) && !s.contains(g + x) && !chosen[g + x]) return;
    }
    chosen[g] = 1;
    walk(idx - 1);
    chosen[g] = 0;
  };
  walk(static_cast<int>(gaps.size()) - 1);

  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });

  std::vector<RelativeIdeal> out;
  out.reserve(found.size());
  for (const auto& adjoined : found) {
    std::vector<char> in(static_cast<std::size_t>(c), 0);
    for (int g : adjoined) in[g] = 1;
    out.push_back(RelativeIdeal::from_window(
        p, 0, c, [&](int z) { return p->contains(z) || in[z]; }));
  }
  return out;
}

MonomialModule::MonomialModule(std::vector<RelativeIdeal> components)
    : components_(std::move(components)) {
  if (components_.empty())
    throw std::invalid_argument("a monomial module needs at least one summand");
  for (const auto& c : components_) require_same_ambient(components_.front(), c);
}

RelativeIdeal module_trace(const MonomialModule& m) {
  auto acc = trace(m.components().front());
  for (std::size_t i = 1; i < m.size(); ++i) {
    acc = union_sum(acc, trace(m.components()[i]));
  }
  return acc;
}

MonomialModule module_dual(const MonomialModule& m) {
  std::vector<RelativeIdeal> out;
  out.reserve(m.size());
  for (const auto& c : m.components()) out.push_back(dual(c));
  return MonomialModule(std::move(out));
}

bool module_is_reflexive(const MonomialModule& m) {
  return std::all_of(m.components().begin(), m.components().end(),
                     [](const RelativeIdeal& e) { return is_reflexive(e); });
}

bool module_is_generator(const MonomialModule& m) {
  return module_trace(m) == RelativeIdeal::whole_ring(m.ambient());
}

}  // namespace semicurve
