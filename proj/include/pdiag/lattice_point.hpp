#pragma once

#include "pdiag/rational.hpp"

namespace pdiag {

/// Integer point of the plane. x can grow without bound (powers of q); y is a
/// monomial exponent and stays small.
struct LatticePoint {
  Integer x;
  unsigned long y = 0;

  friend bool operator==(const LatticePoint& a, const LatticePoint& b) {
    return a.x == b.x && a.y == b.y;
  }
};

}  // namespace pdiag
