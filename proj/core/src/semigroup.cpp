#include "semicurve/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "semicurve/error.hpp"

namespace semicurve {

namespace {

void check_closed(const std::vector<char>& member) {
  const int c = static_cast<int>(member.size());
  if (c > 0 && !member[0]) throw NotASemigroup("0 must belong to a semigroup");
  for (int a = 1; a < c; ++a) {
    if (!member[a]) continue;
    for (int b = a; a + b < c; ++b) {
      if (member[b] && !member[a + b]) {
        std::ostringstream msg;
        msg << "not additively closed: " << a << " + " << b << " = " << a + b
            << " is missing";
        throw NotASemigroup(msg.str());
      }
    }
  }
}

// Drops trailing members so that the last entry (if any) is a gap.
void trim_tail(std::vector<char>& member) {
  while (!member.empty() && member.back()) member.pop_back();
}

}  // namespace

NumericalSemigroup::NumericalSemigroup() : NumericalSemigroup(std::vector<char>{}) {}

NumericalSemigroup::NumericalSemigroup(std::vector<char> member)
    : conductor_(static_cast<int>(member.size())), member_(std::move(member)) {
  for (int n = 1; n < conductor_; ++n) {
    if (!member_[n]) gaps_.push_back(n);
  }
  int mult = 1;
  if (conductor_ > 0) {
    mult = conductor_;
    for (int n = 1; n < conductor_; ++n) {
      if (member_[n]) {
        mult = n;
        break;
      }
    }
  }
  // Every minimal generator is below c + multiplicity (N is generated by 1).
  for (int s = mult; s < std::max(conductor_ + mult, mult + 1); ++s) {
    if (!contains(s)) continue;
    bool decomposable = false;
    for (int a = mult; a <= s - mult; ++a) {
      if (contains(a) && contains(s - a)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) generators_.push_back(s);
  }
}

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const int> gens) {
  if (gens.empty()) throw std::invalid_argument("generator list is empty");
  int g = 0;
  for (int x : gens) {
    if (x < 1) throw std::invalid_argument("generators must be positive");
    g = std::gcd(g, x);
  }
  if (g != 1) {
    std::ostringstream msg;
    msg << "generators have gcd " << g << ", complement is infinite";
    throw NotNumerical(msg.str());
  }
  const int smallest = *std::min_element(gens.begin(), gens.end());
  // Sieve until `smallest` consecutive members appear; from there on every
  // integer is a member.
  std::vector<char> member{1};
  int run = 1;
  for (int n = 1; run < smallest; ++n) {
    char in = 0;
    for (int x : gens) {
      if (x <= n && member[n - x]) {
        in = 1;
        break;
      }
    }
    member.push_back(in);
    run = in ? run + 1 : 0;
  }
  trim_tail(member);
  return NumericalSemigroup(std::move(member));
}

NumericalSemigroup NumericalSemigroup::from_gaps(std::span<const int> gaps) {
  int frob = 0;
  for (int x : gaps) {
    if (x < 1) throw NotASemigroup("gaps must be positive integers");
    frob = std::max(frob, x);
  }
  std::vector<char> member(gaps.empty() ? 0 : frob + 1, 1);
  for (int x : gaps) member[x] = 0;
  check_closed(member);
  return NumericalSemigroup(std::move(member));
}

NumericalSemigroup NumericalSemigroup::from_membership(std::vector<char> member) {
  for (auto& m : member) m = m ? 1 : 0;
  trim_tail(member);
  check_closed(member);
  return NumericalSemigroup(std::move(member));
}

std::vector<int> NumericalSemigroup::elements_below(int bound) const {
  std::vector<int> out;
  for (int n = 0; n < bound; ++n) {
    if (contains(n)) out.push_back(n);
  }
  return out;
}

bool NumericalSemigroup::contains_semigroup(
    const NumericalSemigroup& other) const noexcept {
  return std::all_of(gaps_.begin(), gaps_.end(),
                     [&](int g) { return !other.contains(g); });
}

std::strong_ordering operator<=>(const NumericalSemigroup& a,
                                 const NumericalSemigroup& b) noexcept {
  if (auto c = a.genus() <=> b.genus(); c != 0) return c;
  return a.gaps_ <=> b.gaps_;
}

std::string to_string(const NumericalSemigroup& s) {
  std::string out = "<";
  bool first = true;
  for (int g : s.minimal_generators()) {
    if (!first) out += ',';
    out += std::to_string(g);
    first = false;
  }
  return out + '>';
}

std::vector<int> apery_set(const NumericalSemigroup& s, int n) {
  if (n < 1 || !s.contains(n))
    throw std::invalid_argument("Apery set needs a nonzero element of S");
  std::vector<int> out(static_cast<std::size_t>(n), -1);
  int found = 0;
  for (int x = 0; found < n; ++x) {
    if (s.contains(x) && out[x % n] < 0) {
      out[x % n] = x;
      ++found;
    }
  }
  return out;
}

std::vector<int> pseudo_frobenius(const NumericalSemigroup& s) {
  std::vector<int> out;
  const int m = s.multiplicity();
  // Candidates are the gaps plus -1; -1 only qualifies when S = N.
  for (int f = -1; f <= s.frobenius(); ++f) {
    if (s.contains(f)) continue;
    bool ok = true;
    for (int x = m; x < s.conductor() + m && ok; ++x) {
      if (s.contains(x) && !s.contains(f + x)) ok = false;
    }
    if (ok) out.push_back(f);
  }
  return out;
}

SemigroupInvariants invariants(const NumericalSemigroup& s) {
  SemigroupInvariants inv;
  inv.multiplicity = s.multiplicity();
  inv.embedding_dimension = s.embedding_dimension();
  inv.genus = s.genus();
  inv.frobenius = s.frobenius();
  inv.conductor = s.conductor();
  inv.apery_set = apery_set(s, inv.multiplicity);
  std::sort(inv.apery_set.begin(), inv.apery_set.end());
  inv.pseudo_frobenius = pseudo_frobenius(s);
  inv.type = static_cast<int>(inv.pseudo_frobenius.size());
  return inv;
}

bool is_symmetric(const NumericalSemigroup& s) noexcept {
  return 2 * s.genus() == s.conductor();
}

std::vector<NumericalSemigroup> tree_children(const NumericalSemigroup& s) {
  std::vector<NumericalSemigroup> out;
  const int c = s.conductor();
  for (int g : s.minimal_generators()) {
    if (g <= s.frobenius()) continue;
    std::vector<char> member = s.membership_prefix();
    member.resize(static_cast<std::size_t>(g) + 1, 1);
    for (int n = c; n < g; ++n) member[n] = 1;
    member[g] = 0;
    out.push_back(NumericalSemigroup::from_membership(std::move(member)));
  }
  return out;
}

void for_each_descendant(
    const NumericalSemigroup& root, int max_genus,
    const std::function<void(const NumericalSemigroup&)>& visit) {
  if (root.genus() > max_genus) return;
  visit(root);
  if (root.genus() == max_genus) return;
  for (const auto& child : tree_children(root)) {
    for_each_descendant(child, max_genus, visit);
  }
}

void for_each_semigroup(
    int max_genus, const std::function<void(const NumericalSemigroup&)>& visit,
    int genus_cap) {
  if (max_genus < 0) throw std::invalid_argument("max_genus must be >= 0");
  if (max_genus > genus_cap) {
    std::ostringstream msg;
    msg << "max genus " << max_genus << " exceeds the cap of " << genus_cap;
    throw GenusCapExceeded(msg.str());
  }
  for_each_descendant(NumericalSemigroup::natural(), max_genus, visit);
}

std::vector<NumericalSemigroup> enumerate_semigroups(int max_genus,
                                                     int genus_cap) {
  std::vector<NumericalSemigroup> out;
  for_each_semigroup(
      max_genus, [&](const NumericalSemigroup& s) { out.push_back(s); },
      genus_cap);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> count_by_genus(int max_genus, int genus_cap) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(std::max(max_genus, 0)) + 1, 0);
  for_each_semigroup(
      max_genus, [&](const NumericalSemigroup& s) { ++counts[s.genus()]; },
      genus_cap);
  return counts;
}

}  // namespace semicurve
