#pragma once

#include <vector>

#include "starideal/numsg/semigroup.hpp"

namespace starideal::numsg {

/// Every numerical semigroup with genus ≤ max_genus and multiplicity ≤
/// max_multiplicity, ordered by (genus, gap set).  ℕ comes first.
std::vector<NumericalSemigroup> semigroups_up_to(int max_genus, long max_multiplicity);

/// The semigroup with exactly the given gaps (which must be closed downward
/// under subtraction of members).
NumericalSemigroup semigroup_from_gaps(const std::vector<long>& gaps);

}  // namespace starideal::numsg
