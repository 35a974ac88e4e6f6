#pragma once

#include "pwrot/geometry/isometry.hpp"

#include <compare>
#include <stdexcept>
#include <string>

namespace pwrot {

/// { (x, y) : a x + b y + c > 0 } when strict, ">= 0" otherwise.
///
/// Stored normalized: the first nonzero of (a, b) is +1 or -1, so two
/// half-planes describe the same set iff their fields compare equal.
class HalfPlane {
 public:
  HalfPlane(QuadNum a, QuadNum b, QuadNum c, bool strict = true)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), strict_(strict) {
    const QuadNum& lead = !a_.is_zero() ? a_ : b_;
    if (lead.is_zero()) throw std::invalid_argument("HalfPlane: zero normal");
    bool unit = lead == QuadNum(1) || lead == QuadNum(-1);
    if (!unit) {
      QuadNum s = QuadNum(1) / lead.abs();
      a_ *= s;
      b_ *= s;
      c_ *= s;
    }
    (void)(a_ + b_ + c_);
  }

  /// Im z > 0 and Im z < 0.
  static HalfPlane upper(bool strict = true) { return HalfPlane(0, 1, 0, strict); }
  static HalfPlane lower(bool strict = true) { return HalfPlane(0, -1, 0, strict); }

  const QuadNum& a() const { return a_; }
  const QuadNum& b() const { return b_; }
  const QuadNum& c() const { return c_; }
  bool strict() const { return strict_; }
  Point normal() const { return Point(a_, b_); }
  /// Direction along the boundary with the half-plane on its left.
  Point direction() const { return Point(b_, -a_); }

  QuadNum evaluate(const Point& p) const { return a_ * p.x + b_ * p.y + c_; }
  bool contains(const Point& p) const {
    int s = evaluate(p).sign();
    return strict_ ? s > 0 : s >= 0;
  }
  bool on_boundary(const Point& p) const { return evaluate(p).is_zero(); }

  /// Exact set complement.
  HalfPlane complement() const { return HalfPlane(-a_, -b_, -c_, !strict_, Normalized{}); }
  /// The open half-plane on the other side of the same line.
  HalfPlane open_opposite() const { return HalfPlane(-a_, -b_, -c_, true, Normalized{}); }
  HalfPlane with_strict(bool s) const { return HalfPlane(a_, b_, c_, s, Normalized{}); }
  bool same_line(const HalfPlane& o) const {
    return (a_ == o.a_ && b_ == o.b_ && c_ == o.c_) || (a_ == -o.a_ && b_ == -o.b_ && c_ == -o.c_);
  }
  bool parallel_same_side(const HalfPlane& o) const { return a_ == o.a_ && b_ == o.b_; }

  /// Image of the half-plane under g.
  HalfPlane mapped(const Isometry& g) const {
    Point n = rotate(g.order(), g.k(), normal());
    return HalfPlane(n.x, n.y, c_ - dot(n, g.t()), strict_);
  }
  HalfPlane mapped(const Similarity& h) const {
    Point n = rotate(h.order(), h.k(), normal());
    return HalfPlane(n.x, n.y, h.scale() * c_ - dot(n, h.t()), strict_);
  }

  friend bool operator==(const HalfPlane& p, const HalfPlane& q) = default;
  friend std::strong_ordering operator<=>(const HalfPlane& p, const HalfPlane& q) {
    if (auto r = p.a_ <=> q.a_; r != 0) return r;
    if (auto r = p.b_ <=> q.b_; r != 0) return r;
    if (auto r = p.c_ <=> q.c_; r != 0) return r;
    return p.strict_ <=> q.strict_;
  }

  std::string to_string() const {
    return "[" + a_.to_string() + ", " + b_.to_string() + ", " + c_.to_string() + "]" +
           (strict_ ? " > 0" : " >= 0");
  }

 private:
  struct Normalized {};
  HalfPlane(QuadNum a, QuadNum b, QuadNum c, bool strict, Normalized)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), strict_(strict) {}

  QuadNum a_, b_, c_;
  bool strict_;
};

}  // namespace pwrot
