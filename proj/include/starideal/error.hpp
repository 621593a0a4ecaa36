#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace starideal {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad literal, empty generator list, out-of-range option.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Zero, empty or otherwise non-fractional ideal handed to an operation.
class InvalidIdeal : public Error {
 public:
  using Error::Error;
};

/// Two ideals (or stars) that belong to different ideal systems were combined.
class OwnerMismatch : public Error {
 public:
  using Error::Error;
};

class NotANumericalSemigroup : public Error {
 public:
  using Error::Error;
};

/// Generators of a quadratic-order lattice do not span a rank-2 lattice.
class DegenerateLattice : public Error {
 public:
  using Error::Error;
};

/// Star-operation enumeration hit its budget; `partial_count` stars were found.
class EnumerationTooLarge : public Error {
 public:
  EnumerationTooLarge(const std::string& what, std::size_t partial_count)
      : Error(what), partial_count_(partial_count) {}
  std::size_t partial_count() const noexcept { return partial_count_; }

 private:
  std::size_t partial_count_;
};

/// An internal cross-check failed (e.g. the t-closure subset union did not
/// agree with the v-closure). Always indicates a bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// An operation's precondition on the algebraic input is not met
/// (gcd decomposition of a non-invertible sum, for instance).
class NotApplicable : public Error {
 public:
  using Error::Error;
};

}  // namespace starideal
