#pragma once

#include "pwrot/exact/quadnum.hpp"

#include <compare>
#include <ostream>
#include <string>

namespace pwrot {

/// A point (or vector) of the plane with exact coordinates; z = x + iy.
struct Point {
  QuadNum x;
  QuadNum y;

  Point() = default;
  Point(QuadNum px, QuadNum py) : x(std::move(px)), y(std::move(py)) {
    // both coordinates must live in one field
    (void)(x + y);
  }

  friend Point operator+(const Point& p, const Point& q) { return {p.x + q.x, p.y + q.y}; }
  friend Point operator-(const Point& p, const Point& q) { return {p.x - q.x, p.y - q.y}; }
  friend Point operator*(const QuadNum& s, const Point& p) { return {s * p.x, s * p.y}; }
  Point operator-() const { return {-x, -y}; }

  friend bool operator==(const Point& p, const Point& q) = default;

  /// Lexicographic (x, then y).
  friend std::strong_ordering operator<=>(const Point& p, const Point& q) {
    if (auto c = p.x <=> q.x; c != 0) return c;
    return p.y <=> q.y;
  }

  bool is_zero() const { return x.is_zero() && y.is_zero(); }
  std::string to_string() const { return "(" + x.to_string() + ", " + y.to_string() + ")"; }
  friend std::ostream& operator<<(std::ostream& os, const Point& p) { return os << p.to_string(); }
};

inline QuadNum dot(const Point& p, const Point& q) { return p.x * q.x + p.y * q.y; }
inline QuadNum cross(const Point& p, const Point& q) { return p.x * q.y - p.y * q.x; }
inline QuadNum norm2(const Point& p) { return dot(p, p); }

/// Complex product of (x1 + i y1)(x2 + i y2).
inline Point complex_mul(const Point& p, const Point& q) {
  return {p.x * q.x - p.y * q.y, p.x * q.y + p.y * q.x};
}

}  // namespace pwrot
