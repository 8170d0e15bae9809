#include "gdm/geometry.hpp"

namespace gdm {

double polygon_signed_area(std::span<const Vec2> pts) {
  double twice = 0.0;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a = pts[i];
    const Vec2& b = pts[(i + 1) % n];
    twice += a.cross(b);
  }
  return 0.5 * twice;
}

Vec2 polygon_centroid(std::span<const Vec2> pts) {
  const std::size_t n = pts.size();
  double cx = 0.0, cy = 0.0, twice = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a = pts[i];
    const Vec2& b = pts[(i + 1) % n];
    const double w = a.cross(b);
    twice += w;
    cx += (a.x + b.x) * w;
    cy += (a.y + b.y) * w;
  }
  const double area6 = 3.0 * twice;
  return {cx / area6, cy / area6};
}

bool point_in_convex_polygon(const Vec2& p, std::span<const Vec2> pts,
                             double tol) {
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a = pts[i];
    const Vec2& b = pts[(i + 1) % n];
    if ((b - a).cross(p - a) < -tol) return false;
  }
  return true;
}

}  // namespace gdm
