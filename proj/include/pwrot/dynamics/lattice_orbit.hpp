#pragma once

// Exact orbits in machine integers. For a rational start z0 every orbit point
// is z_n = u_n + zeta^n z0 with u_n in (1/den sigma) Z[zeta], so u_n is kept
// as integer coordinates in the power basis of the cyclotomic ring.

#include "pwrot/dynamics/rotation.hpp"

#include <array>
#include <cmath>
#include <cstdint>

namespace pwrot {

class LatticeOrbit {
  using i128 = __int128;

 public:
  LatticeOrbit(const PiecewiseRotation& t, const Rational& x, const Rational& y) : q_(t.order()), d_(t.field()) {
    m_ = q_ == 8 ? 4 : 2;
    r_ = small(t.sigma().denominator());
    p_ = small(t.sigma().numerator());
    mpz_class dz = lcm(x.denominator(), y.denominator());
    dz_ = small(dz);
    X_ = small(x.numerator() * (dz / x.denominator()));
    Y_ = small(y.numerator() * (dz / y.denominator()));
    for (int k = 0; k < q_; ++k) {
      const Point& w = unit_root(q_, k);
      re_[k] = twice(w.x);
      im_[k] = twice(w.y);
    }
  }

  std::size_t steps() const { return n_; }

  char letter() const {
    int s = sign(imag());
    if (s == 0) throw DiscontinuityHit(n_, point());
    return s > 0 ? '1' : '2';
  }

  char step() {
    char c = letter();
    u_[0] += c == '1' ? p_ + r_ : p_ - r_;
    rotate();
    ++n_;
    return c;
  }

  /// Exact test |z| <= radius.
  bool within(long radius) const {
    auto [ar, br] = real();
    auto [ai, bi] = imag();
    i128 s = i128(2) * r_ * dz_ * radius;
    i128 a = ar * ar + d_ * br * br + ai * ai + d_ * bi * bi - s * s, b = 2 * (ar * br + ai * bi);
    return sign({a, b}) <= 0;
  }

  double radius() const { return std::hypot(approx(real()), approx(imag())); }

  Point point() const {
    Rational den(mpz_class(2 * r_ * dz_), mpz_class(1));
    auto coord = [&](std::pair<i128, i128> v) {
      return QuadNum(Rational(big(v.first), 1) / den, Rational(big(v.second), 1) / den, d_);
    };
    return Point(coord(real()), coord(imag()));
  }

 private:
  using Pair = std::pair<i128, i128>;

  static constexpr long kLimit = 1L << 40;

  static long small(const mpz_class& v) {
    if (!v.fits_slong_p() || std::abs(v.get_si()) > kLimit) throw std::overflow_error("LatticeOrbit: start too large");
    return v.get_si();
  }
  static mpz_class big(i128 v) {
    bool neg = v < 0;
    unsigned __int128 m = neg ? -static_cast<unsigned __int128>(v) : v;
    mpz_class hi(static_cast<unsigned long>(m >> 64)), lo(static_cast<unsigned long>(m));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
  }
  static Pair twice(const QuadNum& v) {
    Rational a = v.a() * Rational(2), b = v.b() * Rational(2);
    return {small(a.numerator()), small(b.numerator())};
  }

  int sign(Pair v) const {
    auto [a, b] = v;
    if (d_ == 1) a += b, b = 0;
    auto sg = [](i128 x) { return x > 0 ? 1 : x < 0 ? -1 : 0; };
    if (b == 0) return sg(a);
    if (a == 0 || sg(a) == sg(b)) return sg(b);
    return a * a > d_ * b * b ? sg(a) : sg(b);
  }

  /// 2 r dz Re z and 2 r dz Im z as a + b sqrt(d).
  Pair real() const { return eval(re_, 1); }
  Pair imag() const { return eval(im_, 0); }

  Pair eval(const std::array<Pair, 8>& part, int real) const {
    i128 a = 0, b = 0;
    for (int k = 0; k < m_; ++k) a += i128(u_[k]) * part[k].first, b += i128(u_[k]) * part[k].second;
    a *= dz_, b *= dz_;
    const Pair &c = re_[rot_], &s = im_[rot_];
    // Re(w z0) = c x - s y, Im(w z0) = s x + c y
    if (real) {
      a += i128(r_) * (c.first * X_ - s.first * Y_);
      b += i128(r_) * (c.second * X_ - s.second * Y_);
    } else {
      a += i128(r_) * (s.first * X_ + c.first * Y_);
      b += i128(r_) * (s.second * X_ + c.second * Y_);
    }
    return {a, b};
  }

  double approx(Pair v) const {
    return (static_cast<double>(v.first) + static_cast<double>(v.second) * std::sqrt(double(d_))) /
           (2.0 * r_ * dz_);
  }

  void rotate() {
    if (q_ == 4) u_ = {-u_[1], u_[0]};
    else if (q_ == 3) u_ = {-u_[1], u_[0] - u_[1]};
    else u_ = {-u_[3], u_[0], u_[1], u_[2]};
    rot_ = (rot_ + 1) % q_;
    for (int k = 0; k < m_; ++k)
      if (std::abs(u_[k]) > kLimit) throw std::overflow_error("LatticeOrbit: orbit left the representable range");
  }

  int q_, d_, m_;
  long r_, p_, dz_, X_, Y_;
  std::array<long, 4> u_{};
  std::array<Pair, 8> re_{}, im_{};
  int rot_ = 0;
  std::size_t n_ = 0;
};

}  // namespace pwrot
