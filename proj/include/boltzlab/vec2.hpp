// Planar velocity vector with the small amount of algebra the simulator needs.
#pragma once

#include <cmath>

namespace boltzlab {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend Vec2 operator*(Vec2 a, double s) { return s * a; }
  Vec2& operator+=(Vec2 b) { x += b.x; y += b.y; return *this; }
  Vec2& operator-=(Vec2 b) { x -= b.x; y -= b.y; return *this; }
  friend bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }

  double norm2() const { return x * x + y * y; }
  double norm() const { return std::hypot(x, y); }
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

}  // namespace boltzlab
