#include "starideal/checker/scope.hpp"

#include <algorithm>

#include "starideal/core/random.hpp"
#include "starideal/error.hpp"

namespace starideal::check {

namespace {

template <IdealSystem Sys>
void add_sampled_pairs(Scope<Sys>& scope, std::size_t anchors) {
  const std::size_t n = scope.ideals.size();
  for (std::size_t i = 0; i < anchors; ++i)
    for (std::size_t j = 0; j < anchors; ++j) scope.pairs.emplace_back(i, j);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < 5 && k < n; ++k) {
      std::pair<std::size_t, std::size_t> p{i, (i + k) % n};
      if (p.first >= anchors || p.second >= anchors) scope.pairs.push_back(p);
    }
  for (std::size_t i = 0; i < n && scope.heads.size() < anchors + 4; ++i) scope.heads.push_back(i);
}

template <IdealSystem Sys>
void append_unique(std::vector<IdealOf<Sys>>& out, const IdealOf<Sys>& a) {
  if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
}

}  // namespace

Scope<numsg::NumericalSemigroup> exhaustive_scope(const numsg::NumericalSemigroup& sys, long radius) {
  Scope<numsg::NumericalSemigroup> scope;
  scope.kind = ScopeKind::exhaustive;
  const long c = sys.conductor();
  const long r = radius < 0 ? std::max(c, 1L) : std::max(radius, c);
  scope.ideals = sys.normalized_ideals();
  const std::size_t n = scope.ideals.size();
  for (long z = -r; z <= r; ++z)
    for (const auto& e : scope.ideals) scope.partners.push_back(sys.scale(e, z));
  for (std::size_t i = 0; i < n; ++i) {
    scope.heads.push_back(i);
    for (std::size_t p = 0; p < scope.partners.size(); ++p) scope.pairs.emplace_back(i, p);
  }
  for (long d = -r; d <= r; ++d) {
    const long b = r + std::abs(d);
    scope.element_pairs.emplace_back(sys.principal(b + d), sys.principal(b));
  }
  scope.description = "exhaustive: " + std::to_string(n) + " normalized ideals, translates within ±" +
                      std::to_string(r);
  return scope;
}

Scope<quad::QuadraticOrder> sampled_scope(const quad::QuadraticOrder& sys, const SampleSpec& spec) {
  if (spec.bound < 1) throw UsageError("sample bound must be at least 1");
  using quad::QuadElement;
  Scope<quad::QuadraticOrder> scope;
  std::vector<quad::QoIdeal> anchors{sys.unit(), sys.conductor_ideal()};
  for (long p : {2L, 3L})
    for (long s : {0L, 1L}) append_unique<quad::QuadraticOrder>(anchors, sys.generate({{p, 0}, {s, 1}}));
  for (const auto& a : anchors) append_unique<quad::QuadraticOrder>(scope.ideals, a);
  const std::size_t fixed = scope.ideals.size();
  for (std::size_t i = 0; i < spec.count; ++i)
    scope.ideals.push_back(sys.random_ideal(Rng::derive(spec.seed, i).uniform(0, INT64_MAX), spec.bound));
  scope.partners = scope.ideals;
  add_sampled_pairs(scope, fixed);
  Rng rng = Rng::derive(spec.seed, spec.count);
  while (scope.element_pairs.size() < std::max<std::size_t>(spec.count / 4, 8)) {
    QuadElement a{rng.uniform(-spec.bound, spec.bound), rng.uniform(-spec.bound, spec.bound)};
    QuadElement b{rng.uniform(-spec.bound, spec.bound), rng.uniform(-spec.bound, spec.bound)};
    if ((a.x == 0 && a.y == 0) || (b.x == 0 && b.y == 0)) continue;
    scope.element_pairs.emplace_back(sys.principal(a), sys.principal(b));
  }
  scope.description = "sampled: seed " + std::to_string(spec.seed) + ", " + std::to_string(spec.count) +
                      " ideals, height " + std::to_string(spec.bound) + ", " + std::to_string(fixed) +
                      " anchors";
  return scope;
}

Scope<mono::MonomialMonoid> sampled_scope(const mono::MonomialMonoid& sys, const SampleSpec& spec) {
  if (spec.bound < 1 || spec.max_generators < 1) throw UsageError("sample box and generator bound must be positive");
  Scope<mono::MonomialMonoid> scope;
  const int k = sys.dimension();
  scope.ideals.push_back(sys.unit());
  std::vector<mono::Exponent> units;
  for (int i = 0; i < k; ++i) {
    units.push_back(sys.unit_vector(i));
    append_unique<mono::MonomialMonoid>(scope.ideals, sys.principal(units.back()));
  }
  append_unique<mono::MonomialMonoid>(scope.ideals, sys.generate(units));
  const std::size_t fixed = scope.ideals.size();
  for (std::size_t i = 0; i < spec.count; ++i)
    scope.ideals.push_back(sys.random_ideal(Rng::derive(spec.seed, i).uniform(0, INT64_MAX), spec.bound,
                                            spec.max_generators));
  scope.partners = scope.ideals;
  add_sampled_pairs(scope, fixed);
  Rng rng = Rng::derive(spec.seed, spec.count);
  while (scope.element_pairs.size() < std::max<std::size_t>(spec.count / 4, 8)) {
    mono::Exponent a(k), b(k);
    for (auto& c : a) c = rng.uniform(0, spec.bound);
    for (auto& c : b) c = rng.uniform(0, spec.bound);
    scope.element_pairs.emplace_back(sys.principal(a), sys.principal(b));
  }
  scope.description = "sampled: seed " + std::to_string(spec.seed) + ", " + std::to_string(spec.count) +
                      " ideals, box " + std::to_string(spec.bound) + ", " + std::to_string(fixed) + " anchors";
  return scope;
}

}  // namespace starideal::check
