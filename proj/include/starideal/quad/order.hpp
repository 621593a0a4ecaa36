#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "starideal/core/ideal_system.hpp"

namespace starideal::quad {

namespace detail {
struct OrderData;
}

/// Element x + yθ of ℚ(√N), where θ = fω is the second basis vector of the
/// order.  Nonzero in every ideal-system role.
struct QuadElement {
  mpq_class x;
  mpq_class y;

  friend bool operator==(const QuadElement& a, const QuadElement& b) { return a.x == b.x && a.y == b.y; }
};

/// Fractional ideal of a quadratic order: (1/den)·L where L ⊆ ℤ² has basis
/// columns (a, 0) and (b, g) over (1, θ), with 0 ≤ b < a, a, g > 0 and den the
/// least positive integer making the lattice integral.  The tuple
/// (den, a, b, g) is the canonical form.
class QoIdeal {
 public:
  const mpz_class& den() const noexcept { return den_; }
  const mpz_class& a() const noexcept { return a_; }
  const mpz_class& b() const noexcept { return b_; }
  const mpz_class& g() const noexcept { return g_; }
  const detail::OrderData* owner() const noexcept { return owner_; }

  /// Index-style norm a·g/den² (exact).
  mpq_class norm() const;
  std::size_t hash() const noexcept;

  friend bool operator==(const QoIdeal& p, const QoIdeal& q) {
    return p.den_ == q.den_ && p.a_ == q.a_ && p.b_ == q.b_ && p.g_ == q.g_;
  }

 private:
  friend class QuadraticOrder;
  QoIdeal(const detail::OrderData* owner, mpz_class den, mpz_class a, mpz_class b, mpz_class g)
      : owner_(owner), den_(std::move(den)), a_(std::move(a)), b_(std::move(b)), g_(std::move(g)) {}

  const detail::OrderData* owner_;
  mpz_class den_, a_, b_, g_;
};

/// The order ℤ + fωℤ in ℚ(√N), ω = (1+√N)/2 for N ≡ 1 (mod 4) and √N
/// otherwise.  Copies share state; two orders with equal (N, f) accept each
/// other's ideals.
class QuadraticOrder {
 public:
  using ideal_type = QoIdeal;
  using element_type = QuadElement;

  /// Throws UsageError unless N is squarefree, N ∉ {0, 1} and f ≥ 1.
  QuadraticOrder(long N, long f);

  long N() const noexcept;
  long f() const noexcept;
  /// θ² = trace·θ + constant.
  const mpz_class& theta_trace() const noexcept;
  const mpz_class& theta_constant() const noexcept;
  bool is_maximal() const noexcept { return f() == 1; }
  QuadraticOrder maximal_order() const { return QuadraticOrder(N(), 1); }

  // Element arithmetic.
  QuadElement element(const mpq_class& x, const mpq_class& y) const { return {x, y}; }
  QuadElement multiply(const QuadElement& p, const QuadElement& q) const;
  QuadElement conjugate(const QuadElement& p) const;
  mpq_class norm(const QuadElement& p) const;

  /// Canonical ideal spanned over ℤ by the given vectors (x, y) ≅ x + yθ.
  /// Throws DegenerateLattice if they do not span a rank-2 lattice.  The
  /// lattice is not required to be an order-module.
  QoIdeal lattice(const std::vector<QuadElement>& vectors) const;
  /// The ℤ-basis a/den, (b + gθ)/den.
  std::vector<QuadElement> basis(const QoIdeal& a) const;
  bool is_module(const QoIdeal& a) const;
  /// The conductor f·O_K as an ideal of this order.
  QoIdeal conductor_ideal() const;

  // IdealSystem surface.
  QoIdeal unit() const;
  QoIdeal sum(const QoIdeal& a, const QoIdeal& b) const;
  QoIdeal product(const QoIdeal& a, const QoIdeal& b) const;
  QoIdeal intersect(const QoIdeal& a, const QoIdeal& b) const;
  QoIdeal colon(const QoIdeal& a, const QoIdeal& b) const;
  bool subset(const QoIdeal& a, const QoIdeal& b) const;
  bool contains(const QoIdeal& a, const QuadElement& x) const;
  QoIdeal principal(const QuadElement& x) const;
  QoIdeal scale(const QoIdeal& a, const QuadElement& x) const;
  QoIdeal generate(const std::vector<QuadElement>& elements) const;
  std::vector<QuadElement> minimal_generators(const QoIdeal& a) const;
  QuadElement inverse_element(const QuadElement& x) const;
  /// Identity: every maximal ideal of a quadratic order is divisorial, so
  /// maximal t-ideals are maximal ideals and A^w = ∩ A_P = A.
  QoIdeal w_closure(const QoIdeal& a) const { return check(a); }
  IntegralClosureDescriptor complete_integral_closure() const;
  /// A generator α with a = αO, if one exists.  Searches elements of norm
  /// N(a) in a fundamental domain for the unit group (a dyadic sweep up to a
  /// Pell unit when N > 0).  Throws NotApplicable if that unit is too large
  /// to sweep.
  std::optional<QuadElement> principal_generator(const QoIdeal& a) const;
  bool is_principal(const QoIdeal& a) const { return principal_generator(a).has_value(); }
  std::string format(const QoIdeal& a) const;
  std::string format_element(const QuadElement& x) const;
  QoIdeal parse_ideal(std::string_view text) const;
  QuadElement parse_element(std::string_view text) const;
  std::string describe() const;

  /// Deterministic pseudo-random ideal: one or two generators with
  /// coordinates in [-height, height], scaled by 1/k for k ∈ [1, height].
  QoIdeal random_ideal(std::uint64_t seed, long height) const;

  friend bool operator==(const QuadraticOrder& p, const QuadraticOrder& q) noexcept {
    return p.N() == q.N() && p.f() == q.f();
  }

 private:
  const QoIdeal& check(const QoIdeal& a) const;
  QoIdeal canonical(const std::vector<QuadElement>& vectors) const;

  std::shared_ptr<const detail::OrderData> data_;
};

static_assert(IdealSystem<QuadraticOrder>);

}  // namespace starideal::quad
