#pragma once

#include <cstddef>
#include <vector>

#include "pdiag/lattice_point.hpp"
#include "pdiag/polynomial.hpp"

namespace pdiag {

/// Closed polygon A, A_0, ..., A_k with A = (q^n, 0) and A_i = (q^{n+i}, k-i).
/// The order is clockwise for q >= 2. For q = 1 every vertex has x = 1 and the
/// diagram is flagged degenerate.
class PolynomialDiagram {
 public:
  const std::vector<LatticePoint>& vertices() const noexcept { return vertices_; }
  const SpecialPolynomial& source() const noexcept { return source_; }
  bool degenerate() const noexcept { return degenerate_; }

 private:
  friend PolynomialDiagram build_diagram(const SpecialPolynomial& p);

  PolynomialDiagram(std::vector<LatticePoint> vertices, SpecialPolynomial source, bool degenerate)
      : vertices_(std::move(vertices)), source_(std::move(source)), degenerate_(degenerate) {}

  std::vector<LatticePoint> vertices_;
  SpecialPolynomial source_;
  bool degenerate_;
};

PolynomialDiagram build_diagram(const SpecialPolynomial& p);

struct DiagramDiagnostics {
  std::size_t vertex_count = 0;
  bool degenerate = false;
  bool simple = false;
  bool convex = false;
  /// Slopes of A_i -> A_{i+1} strictly increase along the chain. Vacuously true
  /// for k = 1; false when some chain edge is vertical (q = 1).
  bool chain_slopes_increasing = false;
};

/// Findings only, never throws. All comparisons are exact.
DiagramDiagnostics validate_diagram(const PolynomialDiagram& d);

}  // namespace pdiag
