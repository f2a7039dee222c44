#include "pdiag/area.hpp"

#include <cstdint>
#include <string>

#include "pdiag/errors.hpp"
#include "pdiag/geometry.hpp"

namespace pdiag {

ExactArea area_closed_form_k2(const Integer& q, unsigned long n) {
  return ExactArea(make_fraction(power(q, n) * (q + 3) * (q - 1), 2));
}

ExactArea trapezoid_area(const SpecialPolynomial& p, unsigned long m) {
  if (p.k() < 2 || m > p.k() - 2)
    throw ValidationError("m", "trapezoid index must satisfy 0 <= m <= k-2 (k = " +
                                   std::to_string(p.k()) + "), got " + std::to_string(m));
  const Integer left = p.coefficient(m);
  const Integer right = left * p.q();
  const Integer heights = 2 * Integer(p.k() - m) - 1;  // (k-m) + (k-m-1)
  return ExactArea(make_fraction((right - left) * heights, 2));
}

ExactArea triangle_area(const SpecialPolynomial& p) {
  const Integer right = p.coefficient(p.k());
  const Integer left = p.coefficient(p.k() - 1);
  return ExactArea(make_fraction(right - left, 2));
}

ExactArea area_general(const SpecialPolynomial& p) {
  Rational sum = triangle_area(p).value();
  for (unsigned long m = 0; m + 2 <= p.k(); ++m) sum += trapezoid_area(p, m).value();
  return ExactArea(sum);
}

ExactArea area_shoelace(const PolynomialDiagram& d) {
  const Integer twice = abs(geometry::twice_signed_area(d.vertices()));
  return ExactArea(make_fraction(twice, 2));
}

namespace {

std::int64_t to_int64(const Integer& value) {
  // Callers only pass values bounded by the column budget.
  return static_cast<std::int64_t>(value.get_si());
}

// Ceiling of num/den for den > 0.
std::int64_t ceil_div(std::int64_t num, std::int64_t den) {
  const std::int64_t q = num / den;
  return (num % den > 0) ? q + 1 : q;
}

}  // namespace

PickCount area_pick(const PolynomialDiagram& d, std::uint64_t column_budget) {
  if (d.degenerate()) throw ValidationError("diagram", "Pick's theorem needs a non-degenerate diagram");

  const auto& v = d.vertices();
  const Integer extent = v.back().x - v.front().x;
  if (extent > Integer(std::to_string(column_budget)))
    throw OracleBudgetExceeded("pick oracle out of budget: x-extent " + extent.get_str() +
                               " exceeds " + std::to_string(column_budget) + " columns");
  // Column arithmetic below runs in 64 bits: y * width must not overflow.
  if (extent * Integer(d.source().k() + 1) > Integer(std::to_string(INT64_MAX)))
    throw OracleBudgetExceeded("pick oracle out of budget: instance too large for 64-bit column scan");

  Integer boundary = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % v.size()];
    Integer dx = abs(b.x - a.x);
    Integer dy = abs(Integer(b.y) - Integer(a.y));
    Integer g;
    mpz_gcd(g.get_mpz_t(), dx.get_mpz_t(), dy.get_mpz_t());
    boundary += g;
  }

  // Region between the x-axis and the upper chain v[1..]. The leftmost column is
  // the vertical edge A -> A_0, the rightmost the single vertex A_k; both are boundary.
  const std::int64_t x_begin = to_int64(v.front().x);
  const std::int64_t x_end = to_int64(v.back().x);
  std::size_t segment = 1;
  std::int64_t interior = 0;
  for (std::int64_t x = x_begin + 1; x < x_end; ++x) {
    while (to_int64(v[segment + 1].x) <= x) ++segment;
    const std::int64_t x0 = to_int64(v[segment].x);
    const std::int64_t x1 = to_int64(v[segment + 1].x);
    const std::int64_t y0 = static_cast<std::int64_t>(v[segment].y);
    const std::int64_t y1 = static_cast<std::int64_t>(v[segment + 1].y);
    const std::int64_t width = x1 - x0;
    const std::int64_t upper_num = y0 * width + (y1 - y0) * (x - x0);
    // Lattice points strictly between y = 0 and the chain.
    const std::int64_t above_axis = ceil_div(upper_num, width) - 1;
    if (above_axis > 0) interior += static_cast<std::int64_t>(above_axis);
  }

  PickCount out;
  out.interior = Integer(std::to_string(interior));
  out.boundary = boundary;
  out.area = ExactArea(Rational(out.interior) + make_fraction(boundary, 2) - 1);
  return out;
}

AreaCrossCheck cross_check(const SpecialPolynomial& p, std::uint64_t pick_budget) {
  const auto diagram = build_diagram(p);
  AreaCrossCheck out;
  out.general_formula = area_general(p);
  out.shoelace = area_shoelace(diagram);
  if (p.k() == 2) out.closed_form = area_closed_form_k2(p.q(), p.n());
  if (!diagram.degenerate()) {
    try {
      out.pick = area_pick(diagram, pick_budget).area;
    } catch (const OracleBudgetExceeded&) {
      // Too wide to scan; the Pick field stays empty.
    }
  }

  const auto& reference = out.general_formula;
  out.agree = out.shoelace == reference && (!out.closed_form || *out.closed_form == reference) &&
              (!out.pick || *out.pick == reference);
  return out;
}

}  // namespace pdiag
