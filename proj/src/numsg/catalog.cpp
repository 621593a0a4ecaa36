#include "starideal/numsg/catalog.hpp"

#include <algorithm>
#include <set>

#include "starideal/error.hpp"

namespace starideal::numsg {

NumericalSemigroup semigroup_from_gaps(const std::vector<long>& gaps) {
  std::set<long> holes(gaps.begin(), gaps.end());
  long conductor = holes.empty() ? 0 : *holes.rbegin() + 1;
  auto member = [&](long x) { return x >= 0 && !holes.count(x); };
  long mult = 1;
  while (!member(mult)) ++mult;
  std::vector<long> gens;
  for (long x = 1; x <= conductor + mult; ++x) {
    if (!member(x)) continue;
    bool decomposable = false;
    for (long a = 1; a <= x / 2 && !decomposable; ++a) decomposable = member(a) && member(x - a);
    if (!decomposable) gens.push_back(x);
  }
  NumericalSemigroup s(gens);
  if (s.gaps() != std::vector<long>(holes.begin(), holes.end()))
    throw NotANumericalSemigroup("gap set is not the complement of a semigroup");
  return s;
}

std::vector<NumericalSemigroup> semigroups_up_to(int max_genus, long max_multiplicity) {
  std::vector<std::vector<long>> level{{}};
  std::vector<std::vector<long>> all{{}};
  for (int g = 1; g <= max_genus; ++g) {
    std::vector<std::vector<long>> next;
    for (const auto& gaps : level) {
      NumericalSemigroup s = semigroup_from_gaps(gaps);
      for (long gen : s.generators()) {
        if (gen <= s.frobenius()) continue;
        std::vector<long> child = gaps;
        child.push_back(gen);
        long mult = gen == s.multiplicity() ? gen + 1 : s.multiplicity();
        while (std::binary_search(child.begin(), child.end(), mult)) ++mult;
        if (mult > max_multiplicity) continue;
        next.push_back(std::move(child));
      }
    }
    std::sort(next.begin(), next.end());
    all.insert(all.end(), next.begin(), next.end());
    level = std::move(next);
  }
  std::vector<NumericalSemigroup> out;
  out.reserve(all.size());
  for (const auto& gaps : all) out.push_back(semigroup_from_gaps(gaps));
  return out;
}

}  // namespace starideal::numsg
