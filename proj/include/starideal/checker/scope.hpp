#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "starideal/core/ideal_system.hpp"
#include "starideal/mono/monoid.hpp"
#include "starideal/numsg/semigroup.hpp"
#include "starideal/quad/order.hpp"

namespace starideal::check {

enum class ScopeKind { exhaustive, sampled };

/// The finite set of instances a suite quantifies over.
///
/// Single-ideal conditions run over `ideals`.  Conditions that only involve
/// colons, products and stars are invariant under translating each argument
/// separately, so pairs of them run over `ideals` × `ideals`.  Conditions that
/// mix arguments through sums, intersections or containment use `pairs`,
/// which index `ideals` × `partners`; three-argument conditions put one of
/// `heads` in front of such a pair.
template <IdealSystem Sys>
struct Scope {
  using Ideal = IdealOf<Sys>;

  ScopeKind kind = ScopeKind::sampled;
  std::string description;
  std::vector<Ideal> ideals;
  std::vector<Ideal> partners;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::size_t> heads;
  /// Pairs (aD, bD) of principal ideals with a, b ∈ D.
  std::vector<std::pair<Ideal, Ideal>> element_pairs;

  bool exhaustive() const noexcept { return kind == ScopeKind::exhaustive; }
};

/// Every normalized ideal, with partners z + E for |z| ≤ radius.  With radius
/// at least the conductor this decides every condition over all fractional
/// ideals: past the conductor a translate is either contained in or contains
/// every normalized ideal, which the endpoints already realize.
Scope<numsg::NumericalSemigroup> exhaustive_scope(const numsg::NumericalSemigroup& sys, long radius = -1);

struct SampleSpec {
  std::size_t count = 200;
  std::uint64_t seed = 0;
  long bound = 5;
  int max_generators = 5;  // monomial backend only
};

/// Anchors (D, conductor or a maximal ideal when nonprincipal) followed by
/// seeded random ideals.
Scope<quad::QuadraticOrder> sampled_scope(const quad::QuadraticOrder& sys, const SampleSpec& spec);
/// Anchors D, ⟨e_i⟩ and ⟨e_1,…,e_k⟩ followed by seeded random ideals.
Scope<mono::MonomialMonoid> sampled_scope(const mono::MonomialMonoid& sys, const SampleSpec& spec);

}  // namespace starideal::check
