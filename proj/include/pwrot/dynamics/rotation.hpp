#pragma once

// The piecewise rotation T(z) = e^{2i pi theta}(z + sigma + 1) on Im z > 0 and
// e^{2i pi theta}(z + sigma - 1) on Im z < 0, theta in {1/4, 1/3, 1/8} and
// rational sigma.

#include "pwrot/dynamics/piecewise.hpp"

#include <utility>
#include <vector>

namespace pwrot {

struct OrbitSample {
  Point start;
  std::vector<Point> points;
  Word word;
};

class PiecewiseRotation {
 public:
  PiecewiseRotation(Rational theta, Rational sigma) : theta_(std::move(theta)), sigma_(std::move(sigma)) {
    if (theta_ == Rational(1, 4)) q_ = 4;
    else if (theta_ == Rational(1, 3)) q_ = 3;
    else if (theta_ == Rational(1, 8)) q_ = 8;
    else throw std::invalid_argument("unsupported theta " + theta_.to_string() + " (expected 1/4, 1/3 or 1/8)");
    const Point& r = unit_root(q_, 1);
    b1_ = Isometry(q_, 1, QuadNum(sigma_ + Rational(1)) * r);
    b2_ = Isometry(q_, 1, QuadNum(sigma_ - Rational(1)) * r);
  }

  const Rational& theta() const { return theta_; }
  const Rational& sigma() const { return sigma_; }
  int order() const { return q_; }
  int field() const { return field_for_order(q_); }

  const Isometry& branch(char letter) const {
    if (letter == '1') return b1_;
    if (letter == '2') return b2_;
    throw std::invalid_argument(std::string("no branch ") + letter);
  }
  static HalfPlane half_plane(char letter) {
    if (letter == '1') return HalfPlane::upper();
    if (letter == '2') return HalfPlane::lower();
    throw std::invalid_argument(std::string("no half-plane ") + letter);
  }

  /// Fixed points z1, z2 of the two branches.
  std::pair<Point, Point> centers() const {
    auto z1 = b1_.fixed_point(), z2 = b2_.fixed_point();
    return {*z1, *z2};
  }

  char letter(const Point& z, std::size_t index = 0) const {
    int s = z.y.sign();
    if (s == 0) throw DiscontinuityHit(index, z);
    return s > 0 ? '1' : '2';
  }
  Point step(const Point& z, std::size_t index = 0) const { return branch(letter(z, index))(z); }

  OrbitSample orbit(const Point& z, std::size_t n) const {
    OrbitSample o{z, {z}, {}};
    Point cur = z;
    for (std::size_t i = 0; i < n; ++i) {
      char c = letter(cur, i);
      o.word += c;
      cur = branch(c)(cur);
      o.points.push_back(cur);
    }
    return o;
  }
  Word code_orbit(const Point& z, std::size_t n) const { return orbit(z, n).word; }

  /// T as a two-piece isometry of the plane.
  PiecewiseIsometry as_piecewise() const {
    std::vector<Piece> ps{{'1', ConvexRegion({HalfPlane::upper()}), b1_, "1", "1"},
                          {'2', ConvexRegion({HalfPlane::lower()}), b2_, "2", "2"}};
    return PiecewiseIsometry(q_, ConvexRegion::plane(), std::move(ps), Alphabet("12"));
  }

  /// The images of the open half-planes are disjoint open half-planes whose
  /// union is the plane minus one line.
  bool bijectivity_witness() const {
    HalfPlane i1 = HalfPlane::upper().mapped(b1_), i2 = HalfPlane::lower().mapped(b2_);
    return i1.complement().with_strict(true) == i2;
  }

  /// S o T o S for S(z) = -z, compared exactly with T for -sigma (letters swapped).
  bool symmetry_identity(const PiecewiseRotation& minus) const {
    if (minus.q_ != q_ || minus.sigma_ != -sigma_) return false;
    // S g S = (k, -t) and S {a x + b y + c > 0} = {-a x - b y + c > 0}
    auto conj = [](const Isometry& g) { return Isometry(g.order(), g.k(), -g.t()); };
    auto reflect = [](const HalfPlane& h) { return HalfPlane(-h.a(), -h.b(), h.c(), h.strict()); };
    return reflect(HalfPlane::upper()) == HalfPlane::lower() && reflect(HalfPlane::lower()) == HalfPlane::upper() &&
           conj(b2_) == minus.b1_ && conj(b1_) == minus.b2_;
  }

  PiecewiseRotation mirrored() const { return PiecewiseRotation(theta_, -sigma_); }

 private:
  Rational theta_, sigma_;
  int q_ = 4;
  Isometry b1_, b2_;
};

/// Conjugating T_{theta, sigma} by S(z) = -z; the returned flag records the exact
/// branchwise identity with T_{theta, -sigma} under 1 <-> 2.
inline std::pair<PiecewiseRotation, bool> symmetry_conjugate(const PiecewiseRotation& t) {
  PiecewiseRotation m = t.mirrored();
  return {m, t.symmetry_identity(m)};
}

}  // namespace pwrot
