// Planar vector algebra for the attractor-centred working frame.
#pragma once

#include <cmath>

namespace kepler {

struct PlanarVector {
  double x = 0.0;
  double y = 0.0;

  constexpr PlanarVector& operator+=(const PlanarVector& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  constexpr PlanarVector& operator-=(const PlanarVector& o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  constexpr PlanarVector& operator*=(double s) {
    x *= s;
    y *= s;
    return *this;
  }

  friend constexpr PlanarVector operator+(PlanarVector a, const PlanarVector& b) { return a += b; }
  friend constexpr PlanarVector operator-(PlanarVector a, const PlanarVector& b) { return a -= b; }
  friend constexpr PlanarVector operator-(const PlanarVector& a) { return {-a.x, -a.y}; }
  friend constexpr PlanarVector operator*(PlanarVector a, double s) { return a *= s; }
  friend constexpr PlanarVector operator*(double s, PlanarVector a) { return a *= s; }
  friend constexpr PlanarVector operator/(const PlanarVector& a, double s) { return {a.x / s, a.y / s}; }
  friend constexpr bool operator==(const PlanarVector&, const PlanarVector&) = default;
};

constexpr double dot(const PlanarVector& a, const PlanarVector& b) { return a.x * b.x + a.y * b.y; }

/// z-component of the 3D cross product; positive when b is counterclockwise of a.
constexpr double cross(const PlanarVector& a, const PlanarVector& b) { return a.x * b.y - a.y * b.x; }

inline double norm(const PlanarVector& a) { return std::hypot(a.x, a.y); }

inline PlanarVector unit(const PlanarVector& a) { return a / norm(a); }

inline PlanarVector from_polar(double radius, double angle) {
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

inline bool is_finite(const PlanarVector& a) { return std::isfinite(a.x) && std::isfinite(a.y); }

}  // namespace kepler
