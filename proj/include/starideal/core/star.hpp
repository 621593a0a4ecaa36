#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "starideal/core/ideal_system.hpp"
#include "starideal/error.hpp"

namespace starideal {

enum class StarKind { identity, divisorial, t, w, finite_character, meet, table, family };

std::string to_string(StarKind kind);

/// A closure rule A ↦ A* on the fractional ideals of one ideal system.
///
/// The rule is trusted to satisfy the star axioms; `check_star_axioms` in the
/// checker verifies them over a scope.  The owning system is held by value
/// (systems are cheap shared handles).
template <IdealSystem Sys>
class StarOperation {
 public:
  using Ideal = IdealOf<Sys>;
  using Rule = std::function<Ideal(const Ideal&)>;

  StarOperation(std::string name, StarKind kind, Sys owner, Rule rule)
      : name_(std::move(name)), kind_(kind), owner_(std::move(owner)), rule_(std::move(rule)) {}

  const std::string& name() const noexcept { return name_; }
  StarKind kind() const noexcept { return kind_; }
  const Sys& owner() const noexcept { return owner_; }

  Ideal apply(const Ideal& a) const { return rule_(a); }
  Ideal operator()(const Ideal& a) const { return rule_(a); }

  StarOperation renamed(std::string name) const {
    StarOperation copy = *this;
    copy.name_ = std::move(name);
    return copy;
  }

 private:
  std::string name_;
  StarKind kind_;
  Sys owner_;
  Rule rule_;
};

/// A^v = (A^{-1})^{-1}.
template <IdealSystem Sys>
IdealOf<Sys> v_closure(const Sys& sys, const IdealOf<Sys>& a) {
  return inverse(sys, inverse(sys, a));
}

namespace detail {

/// Subsets of the minimal generators used by the finite-character unions.
/// Every subset when there are at most 10 generators, otherwise the chain of
/// prefixes (still cofinal among the finitely generated subideals).
template <class Element>
std::vector<std::vector<Element>> generator_subsets(const std::vector<Element>& gens) {
  std::vector<std::vector<Element>> out;
  const std::size_t k = gens.size();
  if (k <= 10) {
    for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
      std::vector<Element> part;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (std::size_t{1} << i)) part.push_back(gens[i]);
      out.push_back(std::move(part));
    }
  } else {
    for (std::size_t n = 1; n <= k; ++n) out.emplace_back(gens.begin(), gens.begin() + n);
  }
  return out;
}

/// Union of `close(F)` over finitely generated F ⊆ A spanned by generator
/// subsets.  The family is directed, so its union is the ideal sum.
template <IdealSystem Sys, class Close>
IdealOf<Sys> finite_union(const Sys& sys, const IdealOf<Sys>& a, Close&& close) {
  auto gens = sys.minimal_generators(a);
  if (gens.empty()) throw InvalidIdeal("ideal without generators");
  std::optional<IdealOf<Sys>> acc;
  for (const auto& part : generator_subsets(gens)) {
    auto piece = close(sys.generate(part));
    acc = acc ? sys.sum(*acc, piece) : piece;
  }
  return *acc;
}

}  // namespace detail

/// A^t as the union of F^v over finitely generated F ⊆ A.  Every backend
/// ideal is finitely generated, so the result must equal A^v; a mismatch
/// raises ConsistencyError.
template <IdealSystem Sys>
IdealOf<Sys> t_closure(const Sys& sys, const IdealOf<Sys>& a) {
  auto result = detail::finite_union(sys, a, [&](const IdealOf<Sys>& f) { return v_closure(sys, f); });
  if (!(result == v_closure(sys, a)))
    throw ConsistencyError("t-closure of " + sys.format(a) + " does not stabilize at its v-closure");
  return result;
}

template <IdealSystem Sys>
StarOperation<Sys> identity_star(const Sys& sys) {
  return {"d", StarKind::identity, sys, [](const IdealOf<Sys>& a) { return a; }};
}

template <IdealSystem Sys>
StarOperation<Sys> divisorial_star(const Sys& sys) {
  return {"v", StarKind::divisorial, sys, [sys](const IdealOf<Sys>& a) { return v_closure(sys, a); }};
}

template <IdealSystem Sys>
StarOperation<Sys> t_star(const Sys& sys) {
  return {"t", StarKind::t, sys, [sys](const IdealOf<Sys>& a) { return t_closure(sys, a); }};
}

template <IdealSystem Sys>
StarOperation<Sys> w_star(const Sys& sys) {
  return {"w", StarKind::w, sys, [sys](const IdealOf<Sys>& a) { return sys.w_closure(a); }};
}

/// The built-in operations d, w, t, v in increasing order.
template <IdealSystem Sys>
std::vector<StarOperation<Sys>> builtin_stars(const Sys& sys) {
  return {identity_star(sys), w_star(sys), t_star(sys), divisorial_star(sys)};
}

/// ⋆_f : A ↦ ∪{F^⋆ : F ⊆ A finitely generated}.
template <IdealSystem Sys>
StarOperation<Sys> finite_character(const StarOperation<Sys>& star) {
  const Sys& sys = star.owner();
  return {star.name() + "_f", StarKind::finite_character, sys, [sys, star](const IdealOf<Sys>& a) {
            return detail::finite_union(sys, a, [&](const IdealOf<Sys>& f) { return star(f); });
          }};
}

/// Pointwise intersection A ↦ ∩ A^{⋆_i}.
template <IdealSystem Sys>
StarOperation<Sys> star_meet(const std::vector<StarOperation<Sys>>& stars) {
  if (stars.empty()) throw UsageError("meet of an empty list of star operations");
  const Sys& sys = stars.front().owner();
  std::string name = "meet(";
  for (std::size_t i = 0; i < stars.size(); ++i) {
    if (!(stars[i].owner() == sys)) throw OwnerMismatch("star operations live on different systems");
    name += (i ? "," : "") + stars[i].name();
  }
  name += ")";
  if (stars.size() == 1) return stars.front().renamed(name);
  return {name, StarKind::meet, sys, [sys, stars](const IdealOf<Sys>& a) {
            auto acc = stars.front()(a);
            for (std::size_t i = 1; i < stars.size(); ++i) acc = sys.intersect(acc, stars[i](a));
            return acc;
          }};
}

/// A ↦ A^v ∩ ⋂_{E ∈ family} (E : (E : A)).
///
/// (E : (E : A)) is the intersection of all translates zE containing A, so
/// this is the closure generated by the family together with the principal
/// ideals.  The empty family gives v.
template <IdealSystem Sys>
StarOperation<Sys> star_from_family(const Sys& sys, std::vector<IdealOf<Sys>> family) {
  std::string name = "family[" + std::to_string(family.size()) + "]";
  return {name, StarKind::family, sys, [sys, family = std::move(family)](const IdealOf<Sys>& a) {
            auto acc = v_closure(sys, a);
            for (const auto& e : family) acc = sys.intersect(acc, sys.colon(e, sys.colon(e, a)));
            return acc;
          }};
}

/// (A A^{-1})^⋆ = D.
template <IdealSystem Sys>
bool is_star_invertible(const Sys& sys, const StarOperation<Sys>& star, const IdealOf<Sys>& a) {
  return star(sys.product(a, inverse(sys, a))) == sys.unit();
}

/// A ⊆ B pointwise for every listed ideal: ⋆1 ≤ ⋆2 on the scope.
template <IdealSystem Sys>
bool star_leq_on(const Sys& sys, const StarOperation<Sys>& lo, const StarOperation<Sys>& hi,
                 const std::vector<IdealOf<Sys>>& scope) {
  for (const auto& a : scope)
    if (!sys.subset(lo(a), hi(a))) return false;
  return true;
}

}  // namespace starideal
