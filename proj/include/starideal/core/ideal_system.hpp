#pragma once

#include <concepts>
#include <string>
#include <string_view>
#include <vector>

namespace starideal {

/// Describes the complete integral closure of a backend's base domain.
struct IntegralClosureDescriptor {
  std::string description;  // e.g. "N", "Z[(1+sqrt(-3))/2]", "N^2"
  bool equals_domain = false;
};

/// Capability contract shared by the three computable ideal systems.
///
/// An ideal system owns a base domain D (a monoid or a ring) and provides
/// exact arithmetic on its nonzero fractional ideals.  Ideals compare equal
/// iff their canonical forms coincide; generator lists are never compared.
/// `subset(a, b)` decides a ⊆ b.  `colon(a, b)` is (a :_K b), the largest
/// ideal c with c·b ⊆ a.  Elements are nonzero elements of the quotient
/// group/field; `principal(x)` is xD and `scale(a, x)` is x·a.
template <class S>
concept IdealSystem = requires(const S& sys, const typename S::ideal_type& a,
                               const typename S::ideal_type& b,
                               const typename S::element_type& x,
                               const std::vector<typename S::element_type>& xs,
                               std::string_view text) {
  typename S::ideal_type;
  typename S::element_type;
  { sys.unit() } -> std::same_as<typename S::ideal_type>;
  { sys.sum(a, b) } -> std::same_as<typename S::ideal_type>;
  { sys.product(a, b) } -> std::same_as<typename S::ideal_type>;
  { sys.intersect(a, b) } -> std::same_as<typename S::ideal_type>;
  { sys.colon(a, b) } -> std::same_as<typename S::ideal_type>;
  { sys.subset(a, b) } -> std::convertible_to<bool>;
  { sys.principal(x) } -> std::same_as<typename S::ideal_type>;
  { sys.scale(a, x) } -> std::same_as<typename S::ideal_type>;
  { sys.generate(xs) } -> std::same_as<typename S::ideal_type>;
  { sys.minimal_generators(a) } -> std::same_as<std::vector<typename S::element_type>>;
  { sys.inverse_element(x) } -> std::same_as<typename S::element_type>;
  { sys.w_closure(a) } -> std::same_as<typename S::ideal_type>;
  { sys.complete_integral_closure() } -> std::same_as<IntegralClosureDescriptor>;
  { sys.format(a) } -> std::same_as<std::string>;
  { sys.format_element(x) } -> std::same_as<std::string>;
  { sys.parse_ideal(text) } -> std::same_as<typename S::ideal_type>;
  { sys.describe() } -> std::same_as<std::string>;
  { a == b } -> std::convertible_to<bool>;
};

template <IdealSystem Sys>
using IdealOf = typename Sys::ideal_type;

template <IdealSystem Sys>
using ElementOf = typename Sys::element_type;

// Derived colon/inverse helpers used throughout the generic layer.

/// A^{-1} = (D : A).
template <IdealSystem Sys>
IdealOf<Sys> inverse(const Sys& sys, const IdealOf<Sys>& a) {
  return sys.colon(sys.unit(), a);
}

/// (A :_D B) = (A : B) ∩ D.
template <IdealSystem Sys>
IdealOf<Sys> colon_in_domain(const Sys& sys, const IdealOf<Sys>& a, const IdealOf<Sys>& b) {
  return sys.intersect(sys.colon(a, b), sys.unit());
}

template <IdealSystem Sys>
bool is_integral(const Sys& sys, const IdealOf<Sys>& a) {
  return sys.subset(a, sys.unit());
}

}  // namespace starideal
