#include <doctest.h>

#include "oracles.hpp"
#include "starideal/checker/scope.hpp"
#include "starideal/core/star.hpp"
#include "starideal/error.hpp"
#include "starideal/numsg/catalog.hpp"
#include "starideal/numsg/stars.hpp"

using namespace starideal;

namespace {

template <class Sys>
void check_chain(const Sys& sys, const std::vector<IdealOf<Sys>>& ideals) {
  const auto d = identity_star(sys), w = w_star(sys), t = t_star(sys), v = divisorial_star(sys);
  CHECK(star_leq_on(sys, d, w, ideals));
  CHECK(star_leq_on(sys, w, t, ideals));
  CHECK(star_leq_on(sys, t, v, ideals));
  for (const auto& star : builtin_stars(sys)) {
    const auto f = finite_character(star);
    CHECK(star_leq_on(sys, f, star, ideals));
    const auto ff = finite_character(f);
    for (const auto& a : ideals) {
      CHECK(ff(a) == f(a));
      if (is_star_invertible(sys, star, a)) CHECK(star(a) == v_closure(sys, a));
      // w- and t-invertibility coincide.
      CHECK(is_star_invertible(sys, w, a) == is_star_invertible(sys, t, a));
    }
  }
}

std::vector<numsg::SgIdeal> translates(const numsg::NumericalSemigroup& s, long r) {
  std::vector<numsg::SgIdeal> out;
  for (const auto& e : s.normalized_ideals())
    for (long z = -r; z <= r; ++z) out.push_back(s.scale(e, z));
  return out;
}

}  // namespace

TEST_CASE("d <= w <= t <= v and finite-character facts on semigroups") {
  for (const auto& s : numsg::semigroups_up_to(4, 6)) {
    CAPTURE(s.describe());
    const auto ideals = translates(s, 1);
    check_chain(s, ideals);
    for (const auto& star : numsg::enumerate_star_operations(s)) {
      const auto f = finite_character(star);
      CHECK(star_leq_on(s, f, star, ideals));
      for (const auto& a : ideals) {
        CHECK(finite_character(f)(a) == f(a));
        if (is_star_invertible(s, star, a)) CHECK(star(a) == v_closure(s, a));
      }
    }
  }
}

TEST_CASE("d <= w <= t <= v on sampled quadratic and monomial ideals") {
  for (const auto& [n, f] : std::vector<std::pair<long, long>>{{-1, 3}, {-5, 1}, {2, 3}}) {
    const quad::QuadraticOrder o(n, f);
    check_chain(o, check::sampled_scope(o, {40, 3, 4, 5}).ideals);
  }
  for (int k : {1, 2, 3}) {
    const mono::MonomialMonoid m(k);
    check_chain(m, check::sampled_scope(m, {60, 3, 5, 5}).ideals);
  }
}

TEST_CASE("t-closure on semigroups: every ideal is finitely generated") {
  for (const auto& s : numsg::semigroups_up_to(4, 6))
    for (const auto& a : translates(s, 1)) CHECK(t_closure(s, a) == v_closure(s, a));
}

TEST_CASE("v-closure agrees with the double-colon oracle") {
  for (const auto& gens : std::vector<std::vector<long>>{{3, 4, 5}, {4, 5, 7}, {4, 6, 9, 11}}) {
    const numsg::NumericalSemigroup s(gens);
    const oracle::WindowOracle w(gens);
    for (const auto& a : translates(s, 2))
      CHECK(oracle::same(w, v_closure(s, a), w.v(oracle::to_window(w, a))));
  }
}

TEST_CASE("family closures agree with intersecting translates") {
  const std::vector<long> gens{4, 5, 7};
  const numsg::NumericalSemigroup s(gens);
  const oracle::WindowOracle w(gens);
  const auto normalized = s.normalized_ideals();
  for (std::size_t i = 1; i < normalized.size(); ++i) {
    const auto star = star_from_family(s, {normalized[i]});
    const std::vector<oracle::WinIdeal> family{w.unit(), oracle::to_window(w, normalized[i])};
    for (const auto& a : translates(s, 1))
      CHECK(oracle::same(w, star(a), w.family_closure(oracle::to_window(w, a), family)));
  }
  const auto v = star_from_family(s, {});
  for (const auto& a : translates(s, 1)) CHECK(v(a) == v_closure(s, a));
}

TEST_CASE("meets and orders of semigroup stars") {
  const auto s = numsg::NumericalSemigroup::parse("3,4,5");
  const auto stars = numsg::enumerate_star_operations(s);
  REQUIRE(stars.size() == 3);
  const auto& mid = stars[1];
  const auto ideals = translates(s, 2);
  const auto meet = star_meet(std::vector{mid, identity_star(s)});
  for (const auto& a : ideals) CHECK(meet(a) == a);
  CHECK(star_leq_on(s, identity_star(s), mid, ideals));
  CHECK(star_leq_on(s, mid, divisorial_star(s), ideals));
  CHECK(!star_leq_on(s, divisorial_star(s), mid, ideals));
  CHECK_THROWS_AS(star_meet(std::vector<numsg::SgStar>{}), UsageError);
  const auto other = numsg::NumericalSemigroup::parse("2,3");
  CHECK_THROWS_AS(star_meet(std::vector{mid, identity_star(other)}), OwnerMismatch);
}

TEST_CASE("builtin names") {
  const auto s = numsg::NumericalSemigroup::parse("3,4,5");
  std::vector<std::string> names;
  for (const auto& star : builtin_stars(s)) names.push_back(star.name());
  CHECK(names == std::vector<std::string>{"d", "w", "t", "v"});
  CHECK(finite_character(divisorial_star(s)).name() == "v_f");
}
