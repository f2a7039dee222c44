#include <doctest.h>

#include "pdiag/diagram.hpp"
#include "pdiag/geometry.hpp"

using namespace pdiag;
using P = LatticePoint;

namespace {

PolynomialDiagram diagram(unsigned long q, unsigned long n, unsigned long k) {
  return build_diagram(build_polynomial(q, n, k));
}

// Region test written against the diagram's shape directly: strictly right of
// the left wall, strictly above the x-axis, strictly below the upper chain.
bool strictly_inside_region(const std::vector<P>& v, const Rational& x, const Rational& y) {
  if (x <= Rational(v[1].x) || x >= Rational(v.back().x) || y <= 0) return false;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    const Rational x0(v[i].x), x1(v[i + 1].x);
    if (x0 <= x && x <= x1) {
      const Rational y0(Integer(v[i].y)), y1(Integer(v[i + 1].y));
      const Rational upper = y0 + (y1 - y0) * (x - x0) / (x1 - x0);
      return y < upper;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("build_diagram prepends A to the monomial points") {
  CHECK(diagram(2, 0, 2).vertices() == std::vector<P>{{1, 0}, {1, 2}, {2, 1}, {4, 0}});
  CHECK(diagram(2, 0, 3).vertices() == std::vector<P>{{1, 0}, {1, 3}, {2, 2}, {4, 1}, {8, 0}});

  const auto flat = diagram(1, 0, 2);
  CHECK(flat.vertices() == std::vector<P>{{1, 0}, {1, 2}, {1, 1}, {1, 0}});
  CHECK(flat.degenerate());
  CHECK(flat.source() == build_polynomial(1, 0, 2));
}

TEST_CASE("validate_diagram examples") {
  const auto k2 = validate_diagram(diagram(2, 0, 2));
  CHECK(k2.simple);
  CHECK_FALSE(k2.convex);
  CHECK(k2.chain_slopes_increasing);
  CHECK(k2.vertex_count == 4);

  // The chord A_0 A_2 leaves the polygon at its midpoint (5/2, 1).
  const auto v = diagram(2, 0, 2).vertices();
  CHECK_FALSE(strictly_inside_region(v, make_fraction(5, 2), 1));
  CHECK(geometry::locate(v, make_fraction(5, 2), 1) == geometry::Location::outside);

  const auto triangle = validate_diagram(diagram(2, 0, 1));
  CHECK(triangle.simple);
  CHECK(triangle.convex);
  CHECK(triangle.chain_slopes_increasing);

  const auto flat = validate_diagram(diagram(1, 0, 2));
  CHECK(flat.degenerate);
  CHECK_FALSE(flat.simple);
  CHECK_FALSE(flat.convex);
  CHECK_FALSE(flat.chain_slopes_increasing);
}

TEST_CASE("structural invariants over the q >= 2 grid") {
  for (unsigned long q = 2; q <= 50; ++q)
    for (unsigned long n = 0; n <= 10; ++n)
      for (unsigned long k = 1; k <= 12; ++k) {
        const auto d = diagram(q, n, k);
        const auto& v = d.vertices();
        REQUIRE(v.size() == k + 2);
        CHECK(v[0] == P{power(q, n), 0});
        for (std::size_t i = 1; i + 1 < v.size(); ++i) {
          CHECK(v[i].x < v[i + 1].x);
          CHECK(v[i].y == v[i + 1].y + 1);
        }

        const auto diag = validate_diagram(d);
        CHECK_FALSE(diag.degenerate);
        CHECK(diag.simple);
        CHECK(diag.chain_slopes_increasing);
        CHECK(diag.convex == (k == 1));
        if (k >= 2) {
          // Witness of non-convexity: midpoint of A_0 A_2 is outside.
          const Rational mx = Rational(v[1].x + v[3].x) / 2;
          const Rational my = Rational(Integer(v[1].y + v[3].y)) / 2;
          CHECK_FALSE(strictly_inside_region(v, mx, my));
        }
      }
}

TEST_CASE("slope monotonicity by cross-multiplication") {
  for (unsigned long q = 2; q <= 20; ++q)
    for (unsigned long k = 3; k <= 8; ++k) {
      const auto v = diagram(q, 1, k).vertices();
      for (std::size_t i = 1; i + 2 < v.size(); ++i) {
        // slope_i = -1 / dx_i, so increasing slopes mean growing run lengths.
        const Integer dx1 = v[i + 1].x - v[i].x;
        const Integer dx2 = v[i + 2].x - v[i + 1].x;
        CHECK(-1 * dx2 < -1 * dx1);
      }
    }
}

TEST_CASE("geometry predicates on hand-made polygons") {
  const std::vector<P> square{{0, 0}, {0, 2}, {2, 2}, {2, 0}};
  CHECK(geometry::is_simple(square));
  CHECK(geometry::is_convex(square));
  CHECK(geometry::twice_signed_area(square) == -8);
  CHECK(geometry::locate(square, 1, 1) == geometry::Location::inside);
  CHECK(geometry::locate(square, 2, 1) == geometry::Location::boundary);
  CHECK(geometry::locate(square, 3, 1) == geometry::Location::outside);

  const std::vector<P> bowtie{{0, 0}, {2, 2}, {2, 0}, {0, 2}};
  CHECK_FALSE(geometry::is_simple(bowtie));
  CHECK_FALSE(geometry::is_convex(bowtie));

  const std::vector<P> ell{{0, 0}, {0, 2}, {1, 2}, {1, 1}, {2, 1}, {2, 0}};
  CHECK(geometry::is_simple(ell));
  CHECK_FALSE(geometry::is_convex(ell));

  const std::vector<P> repeated{{0, 0}, {0, 2}, {0, 2}, {2, 0}};
  CHECK_FALSE(geometry::is_simple(repeated));

  const std::vector<P> fold{{0, 0}, {3, 0}, {1, 0}, {1, 2}};
  CHECK_FALSE(geometry::is_simple(fold));

  CHECK(geometry::orientation({0, 0}, {1, 0}, {1, 1}) == 1);
  CHECK(geometry::orientation({0, 0}, {1, 0}, {2, 0}) == 0);
  CHECK(geometry::segments_intersect({0, 0}, {2, 0}, {1, 0}, {1, 1}));
  CHECK_FALSE(geometry::segments_intersect({0, 0}, {1, 0}, {2, 0}, {3, 0}));
}
