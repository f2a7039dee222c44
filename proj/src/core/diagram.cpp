#include "pdiag/diagram.hpp"

#include "pdiag/geometry.hpp"

namespace pdiag {

PolynomialDiagram build_diagram(const SpecialPolynomial& p) {
  std::vector<LatticePoint> vertices;
  vertices.reserve(p.k() + 2);
  vertices.push_back({power(p.q(), p.n()), 0});
  for (auto& point : monomial_map(p)) vertices.push_back(std::move(point));
  return PolynomialDiagram(std::move(vertices), p, p.degenerate());
}

namespace {

// slope(a->b) < slope(b->c), both edges running rightwards. Cross-multiplied.
bool slope_increases(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
  const Integer dx1 = b.x - a.x;
  const Integer dx2 = c.x - b.x;
  if (dx1 <= 0 || dx2 <= 0) return false;
  const Integer dy1 = Integer(b.y) - Integer(a.y);
  const Integer dy2 = Integer(c.y) - Integer(b.y);
  return dy1 * dx2 < dy2 * dx1;
}

}  // namespace

DiagramDiagnostics validate_diagram(const PolynomialDiagram& d) {
  const auto& v = d.vertices();
  DiagramDiagnostics out;
  out.vertex_count = v.size();
  out.degenerate = d.degenerate();
  out.simple = geometry::is_simple(v);
  out.convex = out.simple && geometry::is_convex(v);

  // Upper chain is A_0..A_k, i.e. v[1..].
  bool increasing = true;
  if (v.size() == 3) {
    increasing = v[2].x > v[1].x;
  } else {
    for (std::size_t i = 1; i + 2 < v.size(); ++i)
      increasing = increasing && slope_increases(v[i], v[i + 1], v[i + 2]);
  }
  out.chain_slopes_increasing = increasing;
  return out;
}

}  // namespace pdiag
