#pragma once

// Orientation-preserving isometries z -> R^k z + t where R is the rotation by
// 2*pi/q, and orientation-preserving similarities z -> s R^k z + t.

#include "pwrot/geometry/point.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pwrot {

/// Quadratic field holding cos(2*pi/q) and sin(2*pi/q).
inline int field_for_order(int q) {
  switch (q) {
    case 1: case 2: case 4: return 1;
    case 3: case 6: return 3;
    case 8: return 2;
    default: throw std::invalid_argument("rotation order " + std::to_string(q) + " is not supported");
  }
}

/// (cos, sin) of 2*pi*k/q, exact.
inline const Point& unit_root(int q, int k) {
  static const std::vector<std::vector<Point>> table = [] {
    std::vector<std::vector<Point>> t(9);
    auto half = Rational(1, 2);
    auto fill = [&](int q, Point base) {
      t[q].push_back(Point(QuadNum(1), QuadNum(0)));
      for (int j = 1; j < q; ++j) t[q].push_back(complex_mul(t[q].back(), base));
    };
    fill(1, Point(QuadNum(1), QuadNum(0)));
    fill(2, Point(QuadNum(-1), QuadNum(0)));
    fill(3, Point(QuadNum(-half), QuadNum(Rational(0), half, 3)));
    fill(4, Point(QuadNum(0), QuadNum(1)));
    fill(6, Point(QuadNum(half), QuadNum(Rational(0), half, 3)));
    fill(8, Point(QuadNum(Rational(0), half, 2), QuadNum(Rational(0), half, 2)));
    return t;
  }();
  field_for_order(q);
  int m = ((k % q) + q) % q;
  return table[q][m];
}

inline Point rotate(int q, int k, const Point& p) { return complex_mul(unit_root(q, k), p); }

class Isometry {
 public:
  Isometry() = default;
  Isometry(int q, int k, Point t) : q_(q), k_(((k % q) + q) % q), t_(std::move(t)) { field_for_order(q); }

  static Isometry identity(int q) { return Isometry(q, 0, Point(QuadNum(0), QuadNum(0))); }
  static Isometry translation(int q, Point t) { return Isometry(q, 0, std::move(t)); }

  int order() const { return q_; }
  int k() const { return k_; }
  const Point& t() const { return t_; }

  Point operator()(const Point& z) const { return rotate(q_, k_, z) + t_; }

  /// (this o other)(z) = this(other(z)).
  Isometry compose(const Isometry& other) const {
    check(other);
    return Isometry(q_, k_ + other.k_, rotate(q_, k_, other.t_) + t_);
  }
  Isometry inverse() const { return Isometry(q_, -k_, -rotate(q_, -k_, t_)); }
  Isometry power(int n) const {
    Isometry r = identity(q_);
    Isometry base = n >= 0 ? *this : inverse();
    for (int i = 0; i < (n >= 0 ? n : -n); ++i) r = base.compose(r);
    return r;
  }

  bool is_identity() const { return k_ == 0 && t_.is_zero(); }
  bool is_translation() const { return k_ == 0; }
  /// Smallest m >= 1 with R^(k m) = 1.
  int rotation_order() const {
    int m = 1;
    while ((k_ * m) % q_ != 0) ++m;
    return m;
  }
  /// The unique fixed point when the rotation part is not the identity.
  std::optional<Point> fixed_point() const {
    if (k_ == 0) return std::nullopt;
    // (I - R) z = t
    const Point& r = unit_root(q_, k_);
    QuadNum a = QuadNum(1) - r.x, b = r.y;  // I - R = [[a, b], [-b, a]]
    QuadNum det = a * a + b * b;
    return Point((a * t_.x - b * t_.y) / det, (b * t_.x + a * t_.y) / det);
  }

  friend bool operator==(const Isometry& g, const Isometry& h) = default;

  std::string to_string() const {
    return "{k=" + std::to_string(k_) + "/" + std::to_string(q_) + ", t=" + t_.to_string() + "}";
  }

 private:
  void check(const Isometry& o) const {
    if (o.q_ != q_) throw std::invalid_argument("Isometry: mixed rotation orders");
  }
  int q_ = 1;
  int k_ = 0;
  Point t_{QuadNum(0), QuadNum(0)};
};

/// z -> scale * R^k z + t with scale > 0.
class Similarity {
 public:
  Similarity() = default;
  Similarity(QuadNum scale, int q, int k, Point t)
      : scale_(std::move(scale)), q_(q), k_(((k % q) + q) % q), t_(std::move(t)) {
    if (scale_.sign() <= 0) throw std::invalid_argument("Similarity: scale must be positive");
    field_for_order(q);
  }
  static Similarity identity(int q) { return Similarity(QuadNum(1), q, 0, Point(QuadNum(0), QuadNum(0))); }

  const QuadNum& scale() const { return scale_; }
  int order() const { return q_; }
  int k() const { return k_; }
  const Point& t() const { return t_; }

  Point operator()(const Point& z) const { return scale_ * rotate(q_, k_, z) + t_; }
  Similarity inverse() const {
    QuadNum inv = QuadNum(1) / scale_;
    return Similarity(inv, q_, -k_, -(inv * rotate(q_, -k_, t_)));
  }

  /// h o g o h^-1, again an isometry with the rotation part of g.
  Isometry conjugate(const Isometry& g) const {
    // h g h^-1 (z) = R^m (z - t) + t + s R^k tg
    Point tt = t_ - rotate(q_, g.k(), t_) + scale_ * rotate(q_, k_, g.t());
    return Isometry(q_, g.k(), tt);
  }

  bool is_identity() const { return k_ == 0 && t_.is_zero() && scale_ == QuadNum(1); }
  friend bool operator==(const Similarity& a, const Similarity& b) = default;

  std::string to_string() const {
    return "{scale=" + scale_.to_string() + ", k=" + std::to_string(k_) + "/" + std::to_string(q_) +
           ", t=" + t_.to_string() + "}";
  }

 private:
  QuadNum scale_{1};
  int q_ = 1;
  int k_ = 0;
  Point t_{QuadNum(0), QuadNum(0)};
};

}  // namespace pwrot
