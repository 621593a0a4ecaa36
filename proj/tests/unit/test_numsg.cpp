#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "starideal/error.hpp"
#include "starideal/numsg/catalog.hpp"
#include "starideal/numsg/stars.hpp"

using namespace starideal;
using namespace starideal::numsg;

namespace {

// Catalog small enough for the 2^k family oracle.
std::vector<NumericalSemigroup> small_catalog() { return semigroups_up_to(4, 6); }

// Every ideal z + E with E normalized and |z| ≤ 2.
std::vector<SgIdeal> translates(const NumericalSemigroup& s) {
  std::vector<SgIdeal> out;
  for (const auto& e : s.normalized_ideals())
    for (long z = -2; z <= 2; ++z) out.push_back(s.scale(e, z));
  return out;
}

}  // namespace

TEST_CASE("semigroup invariants") {
  const auto s = NumericalSemigroup::parse("3,4,5");
  CHECK(s.frobenius() == 2);
  CHECK(s.conductor() == 3);
  CHECK(s.multiplicity() == 3);
  CHECK(s.genus() == 2);
  CHECK(s.gaps() == std::vector<long>{1, 2});
  const auto t = NumericalSemigroup::parse("5,7");
  CHECK(t.frobenius() == 23);
  CHECK(t.genus() == 12);
  CHECK(NumericalSemigroup::parse("1").conductor() == 0);
}

TEST_CASE("semigroup parse errors") {
  CHECK_THROWS_AS(NumericalSemigroup::parse("4,6"), NotANumericalSemigroup);
  CHECK_THROWS_AS(NumericalSemigroup::parse(""), UsageError);
  CHECK_THROWS_AS(NumericalSemigroup::parse("3,x"), UsageError);
}

TEST_CASE("ideal operations agree with the window oracle") {
  for (const auto& gens : std::vector<std::vector<long>>{{1}, {2, 3}, {3, 4, 5}, {3, 5, 7}, {4, 6, 9}, {5, 6, 7, 8}}) {
    const NumericalSemigroup s(gens);
    const oracle::WindowOracle w(gens);
    const auto ideals = translates(s);
    CAPTURE(s.describe());
    for (const auto& a : ideals) {
      const auto ra = oracle::to_window(w, a);
      REQUIRE(oracle::same(w, s.normalize(a), w.translate(ra, -ra.min)));
      for (const auto& b : ideals) {
        const auto rb = oracle::to_window(w, b);
        CHECK(oracle::same(w, s.sum(a, b), w.sum(ra, rb)));
        CHECK(oracle::same(w, s.product(a, b), w.product(ra, rb)));
        CHECK(oracle::same(w, s.intersect(a, b), w.intersect(ra, rb)));
        CHECK(oracle::same(w, s.colon(a, b), w.colon(ra, rb)));
        CHECK(s.subset(a, b) == w.subset(ra, rb));
      }
    }
  }
}

TEST_CASE("normalized ideals match the oracle enumeration") {
  for (const auto& s : small_catalog()) {
    const oracle::WindowOracle w(s.generators());
    const auto ref = w.normalized();
    const auto lib = s.normalized_ideals();
    REQUIRE(lib.size() == ref.size());
    std::vector<oracle::WinIdeal> mapped;
    for (const auto& e : lib) mapped.push_back(oracle::to_window(w, e));
    std::sort(mapped.begin(), mapped.end());
    CHECK(mapped == ref);
    CHECK(lib.front() == s.unit());
  }
}

TEST_CASE("generators round-trip through the text form") {
  const auto s = NumericalSemigroup::parse("3,4,5");
  CHECK(s.format(s.unit()) == "{0}");
  CHECK(s.format(s.maximal_ideal()) == "{3,4,5}");
  const auto m = s.parse_ideal("{3,4,5}");
  CHECK(m == s.maximal_ideal());
  for (const auto& e : translates(s)) CHECK(s.parse_ideal(s.format(e)) == e);
  CHECK_THROWS_AS(s.parse_ideal("{}"), InvalidIdeal);
}

TEST_CASE("star counts on small semigroups") {
  CHECK(enumerate_star_operations(NumericalSemigroup::parse("1")).size() == 1);
  CHECK(enumerate_star_operations(NumericalSemigroup::parse("2,3")).size() == 1);
  // The frozen count for <3,4,5> is 3, not 4: sending S∪{2} to ℕ while
  // fixing S∪{1} is not monotone, since S∪{2} ⊆ −1 + (S∪{1}).
  const auto s = NumericalSemigroup::parse("3,4,5");
  const auto stars = enumerate_star_operations(s);
  REQUIRE(stars.size() == 3);
  CHECK(stars.front().name() == "d");
  CHECK(std::count_if(stars.begin(), stars.end(), [](const SgStar& x) { return x.name() == "v"; }) == 1);
  const oracle::WindowOracle w(s.generators());
  CHECK(w.star_fixed_sets().size() == 3);
  CHECK(s.subset(s.parse_ideal("{0,2}"), s.scale(s.parse_ideal("{0,1}"), -1)));
}

TEST_CASE("enumerator agrees with the family oracle on the small catalog") {
  for (const auto& s : small_catalog()) {
    CAPTURE(s.describe());
    const oracle::WindowOracle w(s.generators());
    const auto ref_ideals = w.normalized();
    const auto ref = w.star_fixed_sets();
    const auto catalog = std::make_shared<const IdealCatalog>(s);
    std::set<std::vector<std::size_t>> lib;
    for_each_star_table(*catalog, [&](std::span<const std::uint16_t> table) {
      std::vector<std::size_t> fixed;
      for (std::size_t i = 0; i < table.size(); ++i)
        if (table[i] == i) {
          const auto e = oracle::to_window(w, (*catalog)[i]);
          fixed.push_back(static_cast<std::size_t>(std::lower_bound(ref_ideals.begin(), ref_ideals.end(), e) -
                                                   ref_ideals.begin()));
        }
      std::sort(fixed.begin(), fixed.end());
      lib.insert(fixed);
    });
    CHECK(lib == ref);
    CHECK(count_star_operations(*catalog) == ref.size());
  }
}

TEST_CASE("enumerated stars satisfy the closure axioms") {
  for (const auto& s : semigroups_up_to(3, 5)) {
    const auto ideals = translates(s);
    for (const auto& star : enumerate_star_operations(s)) {
      CAPTURE(s.describe());
      CAPTURE(star.name());
      CHECK(star(s.unit()) == s.unit());
      for (long z = -3; z <= 3; ++z) CHECK(star(s.principal(z)) == s.principal(z));
      for (const auto& a : ideals) {
        const auto sa = star(a);
        CHECK(s.subset(a, sa));
        CHECK(star(sa) == sa);
        CHECK(star(s.scale(a, 7)) == s.scale(sa, 7));
        CHECK(s.subset(sa, v_closure(s, a)));
        for (const auto& b : ideals)
          if (s.subset(a, b)) CHECK(s.subset(sa, star(b)));
      }
    }
  }
}

TEST_CASE("enumeration budget reports the partial count") {
  const auto s = NumericalSemigroup::parse("6,7,8,9,10,11");
  EnumerationLimits limits;
  limits.max_stars = 100;
  try {
    (void)enumerate_star_operations(s, limits);
    FAIL("expected EnumerationTooLarge");
  } catch (const EnumerationTooLarge& e) {
    CHECK(e.partial_count() == 100);
  }
}

TEST_CASE("catalog ordering and membership") {
  const auto cat = semigroups_up_to(3, 4);
  REQUIRE(!cat.empty());
  CHECK(cat.front().genus() == 0);
  for (std::size_t i = 1; i < cat.size(); ++i) CHECK(cat[i - 1].genus() <= cat[i].genus());
  for (const auto& s : cat) CHECK(s.multiplicity() <= 4);
  // Genus ≤ 3 semigroups number 1 + 1 + 2 + 4 = 8, of which all have multiplicity ≤ 4.
  CHECK(cat.size() == 8);
  CHECK(semigroup_from_gaps({1, 2}).generators() == std::vector<long>{3, 4, 5});
}

TEST_CASE("owner mismatch is rejected") {
  const auto s = NumericalSemigroup::parse("3,4,5");
  const auto t = NumericalSemigroup::parse("2,3");
  CHECK_THROWS_AS(s.sum(s.unit(), t.unit()), OwnerMismatch);
}
