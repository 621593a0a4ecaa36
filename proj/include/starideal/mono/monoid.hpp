#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "starideal/core/ideal_system.hpp"

namespace starideal::mono {

/// Exponent vector in ℤ^k, the monomial x^e of the quotient group.
using Exponent = std::vector<long>;

/// Finitely generated fractional ideal of ℕ^k: the up-set of a nonempty
/// antichain, kept sorted so equality is structural.
class MonIdeal {
 public:
  int dimension() const noexcept { return k_; }
  const std::vector<Exponent>& generators() const noexcept { return gens_; }
  bool is_principal() const noexcept { return gens_.size() == 1; }
  std::size_t hash() const noexcept;

  friend bool operator==(const MonIdeal&, const MonIdeal&) = default;

 private:
  friend class MonomialMonoid;
  MonIdeal(int k, std::vector<Exponent> gens) : k_(k), gens_(std::move(gens)) {}

  int k_;
  std::vector<Exponent> gens_;
};

class MonomialMonoid {
 public:
  using ideal_type = MonIdeal;
  using element_type = Exponent;

  static constexpr int kMaxDimension = 4;

  /// Throws UsageError unless 1 ≤ k ≤ 4.
  explicit MonomialMonoid(int k);

  int dimension() const noexcept { return k_; }
  /// The coordinate vector e_i (0-based).
  Exponent unit_vector(int i) const;
  bool contains(const MonIdeal& a, const Exponent& x) const;

  MonIdeal unit() const;
  MonIdeal sum(const MonIdeal& a, const MonIdeal& b) const;
  MonIdeal product(const MonIdeal& a, const MonIdeal& b) const;
  MonIdeal intersect(const MonIdeal& a, const MonIdeal& b) const;
  MonIdeal colon(const MonIdeal& a, const MonIdeal& b) const;
  bool subset(const MonIdeal& a, const MonIdeal& b) const;
  MonIdeal principal(const Exponent& x) const;
  MonIdeal scale(const MonIdeal& a, const Exponent& x) const;
  MonIdeal generate(const std::vector<Exponent>& elements) const;
  std::vector<Exponent> minimal_generators(const MonIdeal& a) const;
  Exponent inverse_element(const Exponent& x) const;
  /// Principal at the componentwise minimum.  The maximal t-ideals are the
  /// coordinate primes and each localization makes A principal at that
  /// vector, so A^w = A^v here.
  MonIdeal w_closure(const MonIdeal& a) const;
  IntegralClosureDescriptor complete_integral_closure() const;
  std::string format(const MonIdeal& a) const;
  std::string format_element(const Exponent& x) const;
  /// "(1,0)|(0,1)"
  MonIdeal parse_ideal(std::string_view text) const;
  Exponent parse_element(std::string_view text) const;
  std::string describe() const;

  /// 1..max_generators generators with entries in [-box, box], minimalized.
  MonIdeal random_ideal(std::uint64_t seed, long box, int max_generators) const;

  friend bool operator==(const MonomialMonoid&, const MonomialMonoid&) = default;

 private:
  const MonIdeal& check(const MonIdeal& a) const;
  const Exponent& check(const Exponent& x) const;

  int k_;
};

static_assert(IdealSystem<MonomialMonoid>);

}  // namespace starideal::mono
