#pragma once

#include <cmath>
#include <span>
#include <vector>

namespace gdm {

/// Plain 2D point / vector.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2 operator/(double s) const { return {x / s, y / s}; }
  Vec2& operator+=(const Vec2& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  double dot(const Vec2& o) const { return x * o.x + y * o.y; }
  double cross(const Vec2& o) const { return x * o.y - y * o.x; }
  double norm() const { return std::hypot(x, y); }
  /// 90-degree counter-clockwise rotation.
  Vec2 perp() const { return {-y, x}; }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }

/// Symmetric 2x2 matrix, stored as the three independent entries.
struct Sym2 {
  double a11 = 0.0;
  double a12 = 0.0;
  double a22 = 0.0;

  static Sym2 identity() { return {1.0, 0.0, 1.0}; }
  Vec2 apply(const Vec2& v) const {
    return {a11 * v.x + a12 * v.y, a12 * v.x + a22 * v.y};
  }
  Sym2 operator+(const Sym2& o) const {
    return {a11 + o.a11, a12 + o.a12, a22 + o.a22};
  }
  Sym2 operator*(double s) const { return {a11 * s, a12 * s, a22 * s}; }
  double min_eigenvalue() const {
    const double tr = a11 + a22;
    const double disc = std::sqrt((a11 - a22) * (a11 - a22) + 4.0 * a12 * a12);
    return 0.5 * (tr - disc);
  }
  double max_eigenvalue() const {
    const double tr = a11 + a22;
    const double disc = std::sqrt((a11 - a22) * (a11 - a22) + 4.0 * a12 * a12);
    return 0.5 * (tr + disc);
  }
};

/// Signed area of a simple polygon (positive when counter-clockwise).
double polygon_signed_area(std::span<const Vec2> pts);

/// Centre of mass of a simple polygon.
Vec2 polygon_centroid(std::span<const Vec2> pts);

/// Point-in-polygon test for a convex counter-clockwise polygon.
/// Points on the boundary count as inside (tolerance in area units).
bool point_in_convex_polygon(const Vec2& p, std::span<const Vec2> pts,
                             double tol = 1e-12);

}  // namespace gdm
