#include <doctest.h>

#include <random>
#include <string>

#include "pdiag/area.hpp"
#include "pdiag/errors.hpp"

using namespace pdiag;
using P = LatticePoint;

namespace {

// Test-side shoelace over an explicit vertex list.
Rational oracle_area(const std::vector<P>& v) {
  Integer twice = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % v.size()];
    twice += a.x * Integer(b.y) - b.x * Integer(a.y);
  }
  return make_fraction(abs(twice), 2);
}

// Diagram vertices built independently of build_diagram().
std::vector<P> oracle_vertices(unsigned long q, unsigned long n, unsigned long k) {
  std::vector<P> v;
  Integer x = 1;
  for (unsigned long j = 0; j < n; ++j) x *= q;
  v.push_back({x, 0});
  for (unsigned long i = 0; i <= k; ++i, x *= q) v.push_back({x, k - i});
  return v;
}

SpecialPolynomial poly(unsigned long q, unsigned long n, unsigned long k) {
  return build_polynomial(q, n, k);
}

ExactArea area(const Rational& r) { return ExactArea(r); }

}  // namespace

TEST_CASE("oracle sanity") {
  CHECK(oracle_area({{0, 0}, {0, 1}, {1, 0}}) == make_fraction(1, 2));
  CHECK(oracle_vertices(2, 0, 3) == std::vector<P>{{1, 0}, {1, 3}, {2, 2}, {4, 1}, {8, 0}});
}

TEST_CASE("ExactArea stays reduced") {
  const ExactArea a(Rational(make_fraction(10, 4)));
  CHECK(a.numerator() == 5);
  CHECK(a.denominator() == 2);
  CHECK(a + a == area(5));
  CHECK(ExactArea().is_zero());
}

TEST_CASE("area_closed_form_k2") {
  CHECK(area_closed_form_k2(2, 0) == area(make_fraction(5, 2)));
  CHECK(area_closed_form_k2(16, 0) == area(make_fraction(285, 2)));
  CHECK(area_closed_form_k2(1, 5) == area(0));
  // 5, frozen from the oracle on (2,0),(2,2),(4,1),(8,0)
  CHECK(oracle_area({{2, 0}, {2, 2}, {4, 1}, {8, 0}}) == 5);
  CHECK(area_closed_form_k2(2, 1) == area(5));
}

TEST_CASE("trapezoid_area") {
  CHECK(trapezoid_area(poly(2, 0, 2), 0) == area(make_fraction(3, 2)));
  // 3, frozen from the oracle on the slab (2,0),(2,2),(4,1),(4,0)
  CHECK(oracle_area({{2, 0}, {2, 2}, {4, 1}, {4, 0}}) == 3);
  CHECK(trapezoid_area(poly(2, 0, 3), 1) == area(3));
  CHECK(trapezoid_area(poly(1, 0, 3), 0) == area(0));

  CHECK_THROWS_AS(trapezoid_area(poly(2, 0, 3), 2), ValidationError);  // m = k-1 is the triangle
  CHECK_THROWS_AS(trapezoid_area(poly(2, 0, 1), 0), ValidationError);
  try {
    trapezoid_area(poly(2, 0, 2), 5);
  } catch (const ValidationError& e) {
    CHECK(e.parameter() == "m");
  }
}

TEST_CASE("triangle_area") {
  CHECK(triangle_area(poly(2, 0, 2)) == area(1));
  CHECK(triangle_area(poly(3, 0, 1)) == area(1));
  // 4, frozen from the oracle on (8,1),(16,0),(8,0)
  CHECK(oracle_area({{8, 1}, {16, 0}, {8, 0}}) == 4);
  CHECK(triangle_area(poly(2, 1, 3)) == area(4));
}

TEST_CASE("area_general") {
  CHECK(area_general(poly(5, 0, 2)) == area(16));
  CHECK(oracle_area(oracle_vertices(2, 0, 3)) == make_fraction(15, 2));
  CHECK(area_general(poly(2, 0, 3)) == area(make_fraction(15, 2)));
  CHECK(area_general(poly(1, 4, 7)) == area(0));
  // k = 1: only the triangle term
  CHECK(area_general(poly(3, 2, 1)) == triangle_area(poly(3, 2, 1)));
}

TEST_CASE("area_shoelace") {
  CHECK(area_shoelace(build_diagram(poly(2, 0, 2))) == area(make_fraction(5, 2)));
  CHECK(area_shoelace(build_diagram(poly(1, 0, 2))) == area(0));
  CHECK(area_shoelace(build_diagram(poly(2, 0, 3))) == area(make_fraction(15, 2)));
}

TEST_CASE("area_pick") {
  const auto k2 = area_pick(build_diagram(poly(2, 0, 2)));
  CHECK(k2.interior == 0);
  CHECK(k2.boundary == 7);
  CHECK(k2.area == area(make_fraction(5, 2)));

  const auto unit = area_pick(build_diagram(poly(2, 0, 1)));
  CHECK(unit.interior == 0);
  CHECK(unit.boundary == 3);
  CHECK(unit.area == area(make_fraction(1, 2)));

  CHECK(area_pick(build_diagram(poly(3, 0, 2))).area == area(6));

  CHECK_THROWS_AS(area_pick(build_diagram(poly(1, 0, 2))), ValidationError);
  CHECK_THROWS_AS(area_pick(build_diagram(poly(2, 0, 12)), 100), OracleBudgetExceeded);
  CHECK_NOTHROW(area_pick(build_diagram(poly(2, 0, 12)), 4095));
}

TEST_CASE("cross_check") {
  const auto table_row = cross_check(poly(4, 0, 2));
  CHECK(table_row.agree);
  REQUIRE(table_row.closed_form);
  REQUIRE(table_row.pick);
  const ExactArea expected(make_fraction(21, 2));
  CHECK(*table_row.closed_form == expected);
  CHECK(table_row.general_formula == expected);
  CHECK(table_row.shoelace == expected);
  CHECK(*table_row.pick == expected);

  const auto flat = cross_check(poly(1, 0, 2));
  CHECK(flat.agree);
  CHECK(flat.general_formula.is_zero());
  CHECK(flat.shoelace.is_zero());
  CHECK_FALSE(flat.pick);

  const auto big = cross_check(poly(7, 2, 5));
  CHECK(big.agree);
  CHECK_FALSE(big.closed_form);
  CHECK(big.general_formula.value() == oracle_area(oracle_vertices(7, 2, 5)));

  const auto over_budget = cross_check(poly(2, 0, 6), 10);
  CHECK(over_budget.agree);
  CHECK_FALSE(over_budget.pick);
}

TEST_CASE("general formula equals the independent shoelace oracle") {
  for (unsigned long q = 1; q <= 50; ++q)
    for (unsigned long n = 0; n <= 10; ++n)
      for (unsigned long k = 1; k <= 12; ++k)
        CHECK(area_general(poly(q, n, k)).value() == oracle_area(oracle_vertices(q, n, k)));
}

TEST_CASE("random large instances: general = shoelace, denominator 1 or 2") {
  std::mt19937_64 rng(20261016);
  gmp_randclass gmp_rng(gmp_randinit_default);
  gmp_rng.seed(20261016);
  for (int trial = 0; trial < 200; ++trial) {
    const Integer q = gmp_rng.get_z_bits(1 + rng() % 100) + 1;
    const auto n = static_cast<std::int64_t>(rng() % 30);
    const auto k = static_cast<std::int64_t>(1 + rng() % 30);
    const auto p = build_polynomial(q, n, k);
    const auto general = area_general(p);
    CHECK(general == area_shoelace(build_diagram(p)));
    CHECK((general.denominator() == 1 || general.denominator() == 2));
  }
}

TEST_CASE("closed form, trapezoid + triangle decomposition and scaling") {
  for (unsigned long q = 1; q <= 200; ++q)
    for (unsigned long n = 0; n <= 20; ++n) {
      const auto p = poly(q, n, 2);
      const auto general = area_general(p);
      CHECK(area_closed_form_k2(q, n) == general);
      CHECK(trapezoid_area(p, 0) + triangle_area(p) == general);
    }

  for (unsigned long q = 1; q <= 30; ++q)
    for (unsigned long n = 0; n < 10; ++n)
      for (unsigned long k = 1; k <= 12; ++k)
        CHECK(area_general(poly(q, n + 1, k)).value() == area_general(poly(q, n, k)).value() * q);
}

TEST_CASE("Pick matches shoelace on small diagrams") {
  for (unsigned long q = 2; q <= 6; ++q)
    for (unsigned long n = 0; n <= 3; ++n)
      for (unsigned long k = 1; k <= 5; ++k) {
        const auto d = build_diagram(poly(q, n, k));
        const auto pick = area_pick(d, 2'000'000);
        CHECK(pick.area == area_shoelace(d));
      }
}
