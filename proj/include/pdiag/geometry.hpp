#pragma once

#include <span>

#include "pdiag/lattice_point.hpp"

// Exact predicates on closed lattice polygons. Vertices are given in order; the
// edge from the last vertex back to the first is implied.
namespace pdiag::geometry {

/// Sign of the cross product (b - a) x (c - a): +1 left turn, -1 right turn, 0 collinear.
int orientation(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c);

/// Closed segments [a,b] and [c,d] share at least one point.
bool segments_intersect(const LatticePoint& a, const LatticePoint& b,
                        const LatticePoint& c, const LatticePoint& d);

/// Twice the signed area (shoelace sum). Negative for clockwise order.
Integer twice_signed_area(std::span<const LatticePoint> polygon);

/// No two non-adjacent edges touch, adjacent edges meet only at their shared
/// vertex, and no edge has zero length.
bool is_simple(std::span<const LatticePoint> polygon);

/// Simple, and every turn has the same orientation (collinear turns allowed).
bool is_convex(std::span<const LatticePoint> polygon);

/// Where `p` sits relative to a simple polygon.
enum class Location { inside, boundary, outside };
Location locate(std::span<const LatticePoint> polygon, const Rational& px, const Rational& py);

}  // namespace pdiag::geometry
