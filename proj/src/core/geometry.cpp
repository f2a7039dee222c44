#include "pdiag/geometry.hpp"

#include <algorithm>
#include <cstddef>

namespace pdiag::geometry {
namespace {

Integer cross(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
  const Integer abx = b.x - a.x;
  const Integer acx = c.x - a.x;
  const Integer aby = Integer(b.y) - Integer(a.y);
  const Integer acy = Integer(c.y) - Integer(a.y);
  return abx * acy - aby * acx;
}

// c is collinear with [a,b]; is it within the segment's bounding box?
bool within_box(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
  return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= c.y && c.y <= std::max(a.y, b.y);
}

}  // namespace

int orientation(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
  return sgn(cross(a, b, c));
}

bool segments_intersect(const LatticePoint& a, const LatticePoint& b,
                        const LatticePoint& c, const LatticePoint& d) {
  const int o1 = orientation(a, b, c);
  const int o2 = orientation(a, b, d);
  const int o3 = orientation(c, d, a);
  const int o4 = orientation(c, d, b);
  if (o1 == 0 && within_box(a, b, c)) return true;
  if (o2 == 0 && within_box(a, b, d)) return true;
  if (o3 == 0 && within_box(c, d, a)) return true;
  if (o4 == 0 && within_box(c, d, b)) return true;
  return o1 * o2 < 0 && o3 * o4 < 0;
}

Integer twice_signed_area(std::span<const LatticePoint> polygon) {
  Integer sum = 0;
  const std::size_t count = polygon.size();
  for (std::size_t i = 0; i < count; ++i) {
    const auto& p = polygon[i];
    const auto& next = polygon[(i + 1) % count];
    sum += p.x * next.y - next.x * p.y;
  }
  return sum;
}

bool is_simple(std::span<const LatticePoint> polygon) {
  const std::size_t count = polygon.size();
  if (count < 3) return false;
  auto start = [&](std::size_t e) -> const LatticePoint& { return polygon[e]; };
  auto end = [&](std::size_t e) -> const LatticePoint& { return polygon[(e + 1) % count]; };

  for (std::size_t e = 0; e < count; ++e)
    if (start(e) == end(e)) return false;

  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      const bool adjacent = j == i + 1 || (i == 0 && j == count - 1);
      if (!adjacent) {
        if (segments_intersect(start(i), end(i), start(j), end(j))) return false;
        continue;
      }
      // Adjacent edges share one vertex; they must not fold back over each other.
      const std::size_t first = (j == i + 1) ? i : j;
      const auto& a = start(first);
      const auto& shared = end(first);
      const auto& c = end((first + 1) % count);
      if (orientation(a, shared, c) == 0 &&
          (within_box(a, shared, c) || within_box(shared, c, a)))
        return false;
    }
  }
  return true;
}

bool is_convex(std::span<const LatticePoint> polygon) {
  if (!is_simple(polygon)) return false;
  const std::size_t count = polygon.size();
  int sign = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const int turn = orientation(polygon[i], polygon[(i + 1) % count], polygon[(i + 2) % count]);
    if (turn == 0) continue;
    if (sign == 0) sign = turn;
    else if (turn != sign) return false;
  }
  return sign != 0;
}

Location locate(std::span<const LatticePoint> polygon, const Rational& px, const Rational& py) {
  const std::size_t count = polygon.size();
  bool inside = false;
  for (std::size_t i = 0; i < count; ++i) {
    const Rational ax(polygon[i].x), ay(Integer(polygon[i].y));
    const auto& next = polygon[(i + 1) % count];
    const Rational bx(next.x), by(Integer(next.y));

    const Rational c = (bx - ax) * (py - ay) - (by - ay) * (px - ax);
    if (sgn(c) == 0 && std::min(ax, bx) <= px && px <= std::max(ax, bx) &&
        std::min(ay, by) <= py && py <= std::max(ay, by))
      return Location::boundary;

    // Half-open rule on y avoids double counting vertices.
    if ((ay > py) != (by > py)) {
      const Rational cross_x = ax + (py - ay) * (bx - ax) / (by - ay);
      if (px < cross_x) inside = !inside;
    }
  }
  return inside ? Location::inside : Location::outside;
}

}  // namespace pdiag::geometry
