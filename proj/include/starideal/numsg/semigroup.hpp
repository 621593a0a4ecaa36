#pragma once

#include <bitset>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "starideal/core/ideal_system.hpp"

namespace starideal::numsg {

/// Largest conductor the window representation supports.
inline constexpr int kMaxConductor = 128;

/// Membership bits over a stretch of twice the maximal window.
using Span = std::bitset<2 * kMaxConductor>;
using Window = std::bitset<kMaxConductor>;

namespace detail {
struct SemigroupData;
}

/// Fractional ideal E ⊆ ℤ of a numerical semigroup S (E + S ⊆ E, bounded below).
///
/// Stored as the true minimum `offset()` plus membership bits for
/// [offset, offset + conductor); everything from offset + conductor on is in E.
/// An ideal must not outlive every copy of the semigroup that created it.
class SgIdeal {
 public:
  int offset() const noexcept { return offset_; }
  const Window& window() const noexcept { return window_; }
  bool contains(long z) const noexcept;
  std::size_t hash() const noexcept;
  const detail::SemigroupData* owner() const noexcept { return owner_; }

  friend bool operator==(const SgIdeal& a, const SgIdeal& b) noexcept {
    return a.owner_ == b.owner_ && a.offset_ == b.offset_ && a.window_ == b.window_;
  }

 private:
  friend class NumericalSemigroup;
  SgIdeal(const detail::SemigroupData* owner, int offset, const Window& window)
      : owner_(owner), offset_(offset), window_(window) {}

  const detail::SemigroupData* owner_;
  int offset_;
  Window window_;
};

struct SgIdealHash {
  std::size_t operator()(const SgIdeal& e) const noexcept { return e.hash(); }
};

/// Cofinite additive submonoid of ℕ together with its fractional-ideal
/// arithmetic.  Copies share state, so ideals stay valid while any copy lives.
class NumericalSemigroup {
 public:
  using ideal_type = SgIdeal;
  using element_type = long;

  /// Throws UsageError on an empty list or a nonpositive generator and
  /// NotANumericalSemigroup when the generators have a common divisor.
  explicit NumericalSemigroup(const std::vector<long>& generators);
  static NumericalSemigroup parse(std::string_view text);

  const std::vector<long>& generators() const noexcept;
  const std::vector<long>& gaps() const noexcept;
  long frobenius() const noexcept;
  int conductor() const noexcept;
  long multiplicity() const noexcept;
  std::size_t genus() const noexcept { return gaps().size(); }
  bool contains(long n) const noexcept;

  // IdealSystem surface.
  SgIdeal unit() const;
  SgIdeal sum(const SgIdeal& a, const SgIdeal& b) const;
  SgIdeal product(const SgIdeal& a, const SgIdeal& b) const;
  SgIdeal intersect(const SgIdeal& a, const SgIdeal& b) const;
  SgIdeal colon(const SgIdeal& a, const SgIdeal& b) const;
  bool subset(const SgIdeal& a, const SgIdeal& b) const;
  SgIdeal principal(long z) const;
  SgIdeal scale(const SgIdeal& a, long z) const;
  SgIdeal generate(const std::vector<long>& elements) const;
  std::vector<long> minimal_generators(const SgIdeal& a) const;
  long inverse_element(long z) const { return -z; }
  /// Identity: the only maximal t-ideal is M = S \ {0}, and localizing at it
  /// inverts nothing but 0.
  SgIdeal w_closure(const SgIdeal& a) const { return check(a); }
  IntegralClosureDescriptor complete_integral_closure() const;
  std::string format(const SgIdeal& a) const;
  std::string format_element(long z) const;
  SgIdeal parse_ideal(std::string_view text) const;
  std::string describe() const;

  /// Translate of `a` with minimum 0.
  SgIdeal normalize(const SgIdeal& a) const { return scale(a, -a.offset()); }
  /// The maximal ideal S \ {0}.
  SgIdeal maximal_ideal() const;
  /// All ideals E with S ⊆ E ⊆ ℕ, ordered by (popcount of added gaps, bits).
  std::vector<SgIdeal> normalized_ideals() const;
  /// Every ideal of the form E ∪ [offset + conductor, ∞) built from raw bits.
  SgIdeal from_window(int offset, const Window& window) const;

  bool owns(const SgIdeal& a) const noexcept { return a.owner() == data_.get(); }
  const detail::SemigroupData* id() const noexcept { return data_.get(); }
  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) noexcept {
    return a.data_ == b.data_;
  }

 private:
  const SgIdeal& check(const SgIdeal& a) const;
  Span span(const SgIdeal& e, long base) const;
  SgIdeal from_span(const Span& bits, long base) const;

  std::shared_ptr<const detail::SemigroupData> data_;
};

static_assert(IdealSystem<NumericalSemigroup>);

}  // namespace starideal::numsg
