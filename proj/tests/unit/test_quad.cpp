#include <doctest.h>

#include "oracles.hpp"
#include "starideal/core/star.hpp"
#include "starideal/error.hpp"
#include "starideal/quad/order.hpp"

using namespace starideal;
using namespace starideal::quad;

namespace {

const std::vector<std::pair<long, long>> kOrders{{-1, 1}, {-1, 3}, {-5, 1}, {-5, 2}, {2, 1}, {2, 3}, {-3, 1}, {5, 2}};

std::vector<QoIdeal> samples(const QuadraticOrder& o, std::size_t n, std::uint64_t seed, long height) {
  std::vector<QoIdeal> out{o.unit(), o.conductor_ideal()};
  for (std::size_t i = 0; i < n; ++i) out.push_back(o.random_ideal(seed * 1000 + i, height));
  return out;
}

QuadElement el(long x, long y) { return {mpq_class(x), mpq_class(y)}; }

}  // namespace

TEST_CASE("construction guards") {
  CHECK_THROWS_AS(QuadraticOrder(4, 1), UsageError);
  CHECK_THROWS_AS(QuadraticOrder(1, 1), UsageError);
  CHECK_THROWS_AS(QuadraticOrder(0, 1), UsageError);
  CHECK_THROWS_AS(QuadraticOrder(-5, 0), UsageError);
  CHECK(QuadraticOrder(-1, 3).describe() == "Z[3*sqrt(-1)]");
  CHECK(QuadraticOrder(-3, 1).describe() == "Z[(1+sqrt(-3))/2]");
}

TEST_CASE("canonical form is a rescaled triangular basis") {
  const QuadraticOrder o(-5, 1);
  for (const auto& a : samples(o, 40, 1, 6)) {
    CHECK(a.a() > 0);
    CHECK(a.g() > 0);
    CHECK(a.b() >= 0);
    CHECK(a.b() < a.a());
    CHECK(a.den() >= 1);
    CHECK(o.is_module(a));
  }
  CHECK_THROWS_AS(o.lattice({el(1, 0), el(2, 0)}), DegenerateLattice);
}

TEST_CASE("operations agree with lattice membership") {
  for (const auto& [n, f] : kOrders) {
    const QuadraticOrder o(n, f);
    CAPTURE(o.describe());
    const auto ideals = samples(o, 6, 2, 3);
    const auto grid = oracle::qo_grid(12, 2);
    for (const auto& a : ideals)
      for (const auto& b : ideals) {
        const auto meet = o.intersect(a, b);
        const auto join = o.sum(a, b);
        const auto col = o.colon(a, b);
        const auto prod = o.product(a, b);
        // The index [A : A∩B] kills A/(A∩B).
        const mpq_class ratio = meet.norm() / a.norm();
        REQUIRE(ratio.get_den() == 1);
        const long m = ratio.get_num().get_si();
        for (const auto& p : grid) {
          CHECK(oracle::qo_member(meet, p) == (oracle::qo_member(a, p) && oracle::qo_member(b, p)));
          CHECK(oracle::qo_member(col, p) == oracle::qo_colon_member(o, a, b, p));
          if (m <= 12) CHECK(oracle::qo_member(join, p) == oracle::qo_sum_member(o, a, b, p, m));
          CHECK(o.contains(a, p) == oracle::qo_member(a, p));
        }
        for (const auto& x : o.basis(a))
          for (const auto& y : o.basis(b)) CHECK(oracle::qo_member(prod, o.multiply(x, y)));
        CHECK(o.subset(a, join));
        CHECK(o.subset(meet, b));
        CHECK(o.subset(prod, o.product(join, join)));
      }
  }
}

TEST_CASE("norm is multiplicative on invertible ideals of maximal orders") {
  for (long n : {-1L, -5L, 2L, -3L, 10L}) {
    const QuadraticOrder o(n, 1);
    const auto ideals = samples(o, 12, 3, 5);
    for (const auto& a : ideals)
      for (const auto& b : ideals) CHECK(o.product(a, b).norm() == a.norm() * b.norm());
  }
}

TEST_CASE("the prime above 2 in Z[sqrt(-5)]") {
  const QuadraticOrder o(-5, 1);
  const auto p2 = o.generate({el(2, 0), el(1, 1)});
  CHECK(o.product(p2, p2) == o.principal(el(2, 0)));
  const auto d = identity_star(o);
  CHECK(is_star_invertible(o, d, p2));
  CHECK(!o.is_principal(p2));
  CHECK(o.format(p2) == "(2, 1+w)");
  CHECK(o.parse_ideal("(2, 1+w)") == p2);
}

TEST_CASE("conductor ideal of Z[3i] is self-dual and not invertible") {
  const QuadraticOrder o(-1, 3);
  const auto c = o.conductor_ideal();
  CHECK(o.format(c) == "(3, 3w)");
  const auto inv = o.colon(o.unit(), c);
  CHECK(o.product(c, inv) == c);
  CHECK(!is_star_invertible(o, divisorial_star(o), c));
}

TEST_CASE("every ideal is divisorial and w is the identity") {
  for (const auto& [n, f] : kOrders) {
    const QuadraticOrder o(n, f);
    for (const auto& a : samples(o, 60, 4, 5)) {
      CHECK(v_closure(o, a) == a);
      CHECK(t_closure(o, a) == a);
      CHECK(o.w_closure(a) == a);
    }
  }
}

TEST_CASE("principality matches known class numbers") {
  // Class number one.
  for (long n : {-1L, -2L, -3L, -7L, 2L, 3L, 5L, 46L, 94L}) {
    const QuadraticOrder o(n, 1);
    CAPTURE(n);
    for (const auto& a : samples(o, 25, 5, 6)) CHECK(o.is_principal(a));
  }
  // Class number > 1: the prime above 2 (or 3) is not principal.
  CHECK(!QuadraticOrder(10, 1).is_principal(QuadraticOrder(10, 1).parse_ideal("(2, w)")));
  CHECK(!QuadraticOrder(-23, 1).is_principal(QuadraticOrder(-23, 1).parse_ideal("(2, w)")));
  CHECK(!QuadraticOrder(79, 1).is_principal(QuadraticOrder(79, 1).parse_ideal("(3, 1+w)")));
  // Generators found really generate.
  const QuadraticOrder o(94, 1);
  const auto a = o.parse_ideal("(3, 1+w)");
  const auto g = o.principal_generator(a);
  REQUIRE(g);
  CHECK(o.principal(*g) == a);
}

TEST_CASE("orders with equal parameters share ideals, others do not") {
  const QuadraticOrder o(-5, 1), p(-5, 1), q(-5, 2);
  CHECK(o.sum(o.unit(), p.unit()) == o.unit());
  CHECK_THROWS_AS(o.sum(o.unit(), q.unit()), OwnerMismatch);
}

TEST_CASE("random ideals are deterministic") {
  const QuadraticOrder o(2, 3);
  for (std::uint64_t s = 0; s < 20; ++s) CHECK(o.random_ideal(s, 5) == o.random_ideal(s, 5));
}
