#include <doctest.h>

#include "oracles.hpp"
#include "starideal/core/star.hpp"
#include "starideal/error.hpp"
#include "starideal/mono/monoid.hpp"

using namespace starideal;
using namespace starideal::mono;

namespace {

std::vector<MonIdeal> samples(const MonomialMonoid& m, std::size_t n, std::uint64_t seed) {
  std::vector<MonIdeal> out{m.unit()};
  for (int i = 0; i < m.dimension(); ++i) out.push_back(m.principal(m.unit_vector(i)));
  for (std::size_t i = 0; i < n; ++i) out.push_back(m.random_ideal(seed * 1000 + i, 3, 4));
  return out;
}

}  // namespace

TEST_CASE("operations agree with componentwise membership") {
  for (int k : {1, 2, 3}) {
    const MonomialMonoid m(k);
    const auto ideals = samples(m, 10, 1);
    const auto grid = oracle::mon_grid(k, k == 3 ? 5 : 8);
    for (const auto& a : ideals)
      for (const auto& b : ideals) {
        const auto& ga = a.generators();
        const auto& gb = b.generators();
        const auto sum = m.sum(a, b), meet = m.intersect(a, b), prod = m.product(a, b), col = m.colon(a, b);
        for (const auto& x : grid) {
          CHECK(m.contains(sum, x) == (oracle::mon_member(ga, x) || oracle::mon_member(gb, x)));
          CHECK(m.contains(meet, x) == (oracle::mon_member(ga, x) && oracle::mon_member(gb, x)));
          CHECK(m.contains(prod, x) == oracle::mon_product_member(ga, gb, x));
          CHECK(m.contains(col, x) == oracle::mon_colon_member(ga, gb, x));
        }
      }
  }
}

TEST_CASE("generators form a sorted antichain") {
  const MonomialMonoid m(2);
  const auto a = m.generate({{2, 0}, {1, 1}, {3, 0}, {0, 4}, {1, 2}});
  CHECK(a.generators() == std::vector<Exponent>{{0, 4}, {1, 1}, {2, 0}});
  CHECK(m.format(a) == "(0,4)|(1,1)|(2,0)");
  CHECK(m.parse_ideal(m.format(a)) == a);
  CHECK_THROWS_AS(m.parse_element("(1,2,3)"), UsageError);
}

TEST_CASE("v-closure is principal at the componentwise minimum") {
  for (int k : {1, 2, 3, 4}) {
    const MonomialMonoid m(k);
    for (const auto& a : samples(m, 30, 2)) {
      Exponent low = a.generators().front();
      for (const auto& g : a.generators())
        for (int i = 0; i < k; ++i) low[i] = std::min(low[i], g[i]);
      CHECK(v_closure(m, a) == m.principal(low));
      CHECK(t_closure(m, a) == m.principal(low));
      CHECK(m.w_closure(a) == m.principal(low));
    }
  }
}

TEST_CASE("the two coordinate primes") {
  const MonomialMonoid m(2);
  const auto x = m.principal({1, 0}), y = m.principal({0, 1});
  const auto xy = m.sum(x, y);
  CHECK(m.intersect(m.sum(x, y), x) == x);
  CHECK(m.product(m.intersect(x, y), xy) != m.product(x, y));
  CHECK(!is_star_invertible(m, identity_star(m), xy));
  CHECK(is_star_invertible(m, t_star(m), xy));
  CHECK(m.colon(m.principal({2, 0}), x) == x);
}

TEST_CASE("dimension guard") {
  CHECK_THROWS_AS(MonomialMonoid(0), UsageError);
  CHECK_THROWS_AS(MonomialMonoid(5), UsageError);
  CHECK_THROWS_AS(MonomialMonoid(2).sum(MonomialMonoid(2).unit(), MonomialMonoid(3).unit()), OwnerMismatch);
}
