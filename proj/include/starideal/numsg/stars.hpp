#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "starideal/core/star.hpp"
#include "starideal/numsg/semigroup.hpp"

namespace starideal::numsg {

using SgStar = StarOperation<NumericalSemigroup>;

/// The normalized ideals of one semigroup with the lookup tables the star
/// enumeration and table stars need.  Index 0 is S itself.
class IdealCatalog {
 public:
  explicit IdealCatalog(NumericalSemigroup sys);

  const NumericalSemigroup& system() const noexcept { return sys_; }
  std::size_t size() const noexcept { return ideals_.size(); }
  const SgIdeal& operator[](std::size_t i) const { return ideals_[i]; }
  const std::vector<SgIdeal>& ideals() const noexcept { return ideals_; }

  /// Index of the translate class of `a` (min moved to 0).
  std::size_t index_of(const SgIdeal& a) const;
  /// Index of E_i^v.
  std::size_t divisorial_of(std::size_t i) const { return vclosure_[i]; }
  bool is_divisorial(std::size_t i) const { return vclosure_[i] == i; }
  /// (E_j : E_i), the integers z with z + E_i ⊆ E_j.
  const SgIdeal& colon(std::size_t j, std::size_t i) const { return colons_[j * size() + i]; }

 private:
  NumericalSemigroup sys_;
  std::vector<SgIdeal> ideals_;
  std::vector<std::size_t> vclosure_;
  std::vector<SgIdeal> colons_;
  std::unordered_map<Window, std::size_t> index_;
};

/// A star operation given by closure[i] = index of c(E_i).
using ClosureTable = std::vector<std::uint16_t>;

struct EnumerationLimits {
  std::size_t max_ideals = 4096;
  std::size_t max_stars = 5'000'000;
};

/// Calls `visit` once per star operation on S, in a deterministic order that
/// starts with d.  Returns the number of operations.  Throws
/// EnumerationTooLarge when a limit is exceeded.
std::size_t for_each_star_table(const IdealCatalog& catalog,
                                const std::function<void(std::span<const std::uint16_t>)>& visit,
                                const EnumerationLimits& limits = {});

std::size_t count_star_operations(const IdealCatalog& catalog, const EnumerationLimits& limits = {});

/// Wraps a closure table as a star operation on every fractional ideal
/// (normalize, look up, translate back).
SgStar table_star(std::shared_ptr<const IdealCatalog> catalog, ClosureTable closure, std::string name);

/// Every star operation, named "d", "v" and "s<k>" for the rest in
/// enumeration order.
std::vector<SgStar> enumerate_star_operations(const NumericalSemigroup& sys,
                                              const EnumerationLimits& limits = {});

/// Table of an arbitrary star operation restricted to the normalized ideals.
ClosureTable tabulate(const IdealCatalog& catalog, const SgStar& star);

/// Text lines "E -> c(E)" in generator notation, one per normalized ideal.
std::vector<std::string> describe_table(const IdealCatalog& catalog, std::span<const std::uint16_t> closure);

}  // namespace starideal::numsg
