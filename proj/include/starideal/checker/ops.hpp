#pragma once

#include <memory>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "starideal/core/star.hpp"

namespace starideal::check {

/// Ideal arithmetic bound to one star operation, shared by suite lambdas.
/// Star, inverse and invertibility results are memoized per instance; an
/// Ops must not be used from two threads at once.
template <IdealSystem Sys>
struct Ops {
  using Ideal = IdealOf<Sys>;
  using Element = ElementOf<Sys>;

  Ops(Sys s, StarOperation<Sys> op) : sys(std::move(s)), star(std::move(op)), D(sys.unit()) {}

  Sys sys;
  StarOperation<Sys> star;
  Ideal D;

  Ideal st(const Ideal& a) const {
    return memo(st_cache_, a, [&] { return star(a); });
  }
  Ideal v(const Ideal& a) const { return inv(inv(a)); }
  Ideal inv(const Ideal& a) const {
    return memo(inv_cache_, a, [&] { return inverse(sys, a); });
  }
  Ideal mul(const Ideal& a, const Ideal& b) const { return sys.product(a, b); }
  Ideal col(const Ideal& a, const Ideal& b) const { return sys.colon(a, b); }
  Ideal cap(const Ideal& a, const Ideal& b) const { return sys.intersect(a, b); }
  Ideal add(const Ideal& a, const Ideal& b) const { return sys.sum(a, b); }
  bool sub(const Ideal& a, const Ideal& b) const { return sys.subset(a, b); }
  bool integral(const Ideal& a) const { return sys.subset(a, D); }

  /// (AA^{-1})^⋆ = D.
  bool invertible(const Ideal& a) const {
    return memo(invertible_cache_, a, [&] { return st(mul(a, inv(a))) == D; });
  }
  /// (A^v A^{-1})^⋆ = D.
  bool v_invertible(const Ideal& a) const { return st(mul(v(a), inv(a))) == D; }
  /// A ⋆-invertible ⋆-ideal.
  bool in_inv(const Ideal& a) const { return st(a) == a && invertible(a); }

  /// xD for the first minimal generator x of A; always inside A.
  Ideal first_principal(const Ideal& a) const { return sys.principal(sys.minimal_generators(a).front()); }

  /// Reduces an ideal with `bad` to a two-generated one (xD, yD) that is
  /// still bad.  With generators x_1..x_{n+1}, I = (x_1), J = (x_2..x_n),
  /// H = (x_{n+1}) satisfy (I+J+H)(IJ+JH+HI) = (I+J)(J+H)(H+I), so one of the
  /// three n-generated factors inherits a failure of ⋆-invertibility.  Used
  /// for other predicates as a heuristic; returns nullopt when no factor is bad.
  template <class Bad>
  std::optional<std::pair<Ideal, Ideal>> two_generated(const Ideal& a, Bad&& bad) const {
    std::vector<Element> gens = sys.minimal_generators(a);
    while (gens.size() > 2) {
      const std::size_t n = gens.size();
      std::vector<std::vector<Element>> options{
          std::vector<Element>(gens.begin() + 1, gens.end()),
          std::vector<Element>{gens.front(), gens.back()},
          std::vector<Element>(gens.begin(), gens.end() - 1),
      };
      bool found = false;
      for (auto& option : options) {
        if (!bad(sys.generate(option))) continue;
        gens = std::move(option);
        found = true;
        break;
      }
      if (!found || gens.size() >= n) return std::nullopt;
    }
    if (gens.size() < 2) return std::nullopt;
    return std::pair{sys.principal(gens[0]), sys.principal(gens[1])};
  }

  /// Rescales principal ideals (xD, yD) by a common d with dx, dy ∈ D.
  std::pair<Ideal, Ideal> make_integral(const Ideal& x, const Ideal& y) const {
    const auto denominators = colon_in_domain(sys, D, add(x, y));
    const auto d = sys.minimal_generators(denominators).front();
    return {sys.scale(x, d), sys.scale(y, d)};
  }

 private:
  struct Hash {
    std::size_t operator()(const Ideal& a) const noexcept { return a.hash(); }
  };
  template <class V>
  using Cache = std::unordered_map<Ideal, V, Hash>;

  template <class V, class F>
  static V memo(Cache<V>& cache, const Ideal& a, F&& compute) {
    if (auto it = cache.find(a); it != cache.end()) return it->second;
    if (cache.size() > 200000) cache.clear();
    return cache.emplace(a, compute()).first->second;
  }

  mutable Cache<Ideal> st_cache_, inv_cache_;
  mutable Cache<bool> invertible_cache_;
};

template <IdealSystem Sys>
using OpsPtr = std::shared_ptr<const Ops<Sys>>;

}  // namespace starideal::check
