#pragma once

// Elements a + b*sqrt(d) of the real quadratic fields Q(sqrt 2), Q(sqrt 3)
// and of Q itself (d = 1). These are the scalars of every geometric object in
// the library: the rotation matrices for angles 2*pi/q with q in
// {1, 2, 3, 4, 6, 8} have entries in one of these fields.

#include "pwrot/exact/rational.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace pwrot {

/// Raised when two numbers from different quadratic fields are combined.
class FieldMismatch : public std::invalid_argument {
 public:
  FieldMismatch(int d1, int d2)
      : std::invalid_argument("QuadNum: incompatible fields sqrt(" + std::to_string(d1) +
                              ") and sqrt(" + std::to_string(d2) + ")") {}
};

class QuadNum {
 public:
  QuadNum() = default;
  QuadNum(long n) : a_(n) {}                        // NOLINT(google-explicit-constructor)
  QuadNum(Rational a) : a_(std::move(a)) {}         // NOLINT(google-explicit-constructor)
  QuadNum(Rational a, Rational b, int d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (d != 1 && d != 2 && d != 3)
      throw std::invalid_argument("QuadNum: discriminant must be 1, 2 or 3");
    canonicalize();
  }

  static QuadNum sqrt_of(int d) { return QuadNum(Rational(0), Rational(1), d); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  /// 1 when the value is rational, otherwise the field discriminant.
  int d() const { return d_; }
  bool is_rational() const { return b_.is_zero(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  /// Exact sign, by comparing a^2 with b^2 d when a and b disagree in sign.
  int sign() const {
    int sa = a_.sign(), sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // a and b have opposite signs: a + b sqrt(d) has the sign of a iff a^2 > b^2 d.
    Rational lhs = a_ * a_;
    Rational rhs = b_ * b_ * Rational(d_);
    if (lhs == rhs) return 0;  // unreachable for squarefree d > 1
    return lhs > rhs ? sa : sb;
  }

  QuadNum operator-() const { return QuadNum(-a_, -b_, d_); }

  QuadNum& operator+=(const QuadNum& o) {
    int d = join(o);
    a_ += o.a_;
    b_ += o.b_;
    d_ = d;
    canonicalize();
    return *this;
  }
  QuadNum& operator-=(const QuadNum& o) {
    int d = join(o);
    a_ -= o.a_;
    b_ -= o.b_;
    d_ = d;
    canonicalize();
    return *this;
  }
  QuadNum& operator*=(const QuadNum& o) {
    int d = join(o);
    if (o.b_.is_zero()) {
      a_ *= o.a_;
      b_ *= o.a_;
    } else if (b_.is_zero()) {
      b_ = a_ * o.b_;
      a_ *= o.a_;
    } else {
      Rational na = a_ * o.a_ + b_ * o.b_ * Rational(d);
      Rational nb = a_ * o.b_ + b_ * o.a_;
      a_ = std::move(na);
      b_ = std::move(nb);
    }
    d_ = d;
    canonicalize();
    return *this;
  }
  QuadNum& operator/=(const QuadNum& o) {
    if (o.is_zero()) throw std::domain_error("QuadNum: division by zero");
    join(o);
    if (o.b_.is_zero()) {
      a_ /= o.a_;
      b_ /= o.a_;
      canonicalize();
      return *this;
    }
    // multiply by the conjugate over the norm
    Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * Rational(o.d_);
    QuadNum conj(o.a_ / norm, -o.b_ / norm, o.d_);
    return *this *= conj;
  }

  friend QuadNum operator+(QuadNum x, const QuadNum& y) { return x += y; }
  friend QuadNum operator-(QuadNum x, const QuadNum& y) { return x -= y; }
  friend QuadNum operator*(QuadNum x, const QuadNum& y) { return x *= y; }
  friend QuadNum operator/(QuadNum x, const QuadNum& y) { return x /= y; }

  friend bool operator==(const QuadNum& x, const QuadNum& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_.is_zero() || x.d_ == y.d_);
  }

  /// Total order of the reals restricted to the field.
  friend std::strong_ordering operator<=>(const QuadNum& x, const QuadNum& y) {
    int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  QuadNum abs() const { return sign() < 0 ? -*this : *this; }
  QuadNum conjugate() const { return QuadNum(a_, -b_, d_); }

  double to_double() const {
    if (b_.is_zero()) return a_.to_double();
    return a_.to_double() + b_.to_double() * std::sqrt(static_cast<double>(d_));
  }

  /// Rational bracket lo <= x <= hi with hi - lo <= |b| 2^-bits.
  std::pair<Rational, Rational> bracket(unsigned bits) const {
    if (b_.is_zero()) return {a_, a_};
    mpz_class scale = mpz_class(1) << bits;
    mpz_class s = isqrt(mpz_class(d_) * scale * scale);
    Rational lo_root(s, scale), hi_root(s + 1, scale);
    Rational p = a_ + b_ * lo_root, q = a_ + b_ * hi_root;
    if (p > q) std::swap(p, q);
    return {p, q};
  }

  /// Serialized as "a", "b*sqrt(d)" or "a + b*sqrt(d)" with rational a, b.
  std::string to_string() const {
    if (b_.is_zero()) return a_.to_string();
    std::string root = "sqrt(" + std::to_string(d_) + ")";
    auto coef = [&](const Rational& r) {
      return r == Rational(1) ? root : r.to_string() + "*" + root;
    };
    if (a_.is_zero()) return b_.sign() < 0 ? "-" + coef(-b_) : coef(b_);
    return a_.to_string() + (b_.sign() < 0 ? " - " + coef(-b_) : " + " + coef(b_));
  }

  /// Inverse of to_string; also accepts "a +- b/c*sqrt(d)" without blanks.
  static QuadNum parse(std::string_view text) {
    std::string s;
    for (char c : text)
      if (c != ' ' && c != '\t') s.push_back(c);
    auto root = s.find("sqrt(");
    if (root == std::string::npos) return QuadNum(Rational::parse(s));
    auto close = s.find(')', root);
    if (close == std::string::npos || close + 1 != s.size())
      throw std::invalid_argument("QuadNum: malformed '" + std::string(text) + "'");
    int d = std::stoi(s.substr(root + 5, close - root - 5));
    std::string head = s.substr(0, root);
    // head is "[a](+|-)[b*]" ; find the sign that separates a from b
    Rational coef(1);
    Rational a(0);
    if (!head.empty() && head.back() == '*') head.pop_back();
    else if (!head.empty() && head.back() != '+' && head.back() != '-')
      throw std::invalid_argument("QuadNum: expected '*' before sqrt in '" + std::string(text) + "'");
    std::size_t split = std::string::npos;
    for (std::size_t i = head.size(); i-- > 1;)
      if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '/') {
        split = i;
        break;
      }
    std::string btext = head;
    if (split != std::string::npos) {
      a = Rational::parse(head.substr(0, split));
      btext = head.substr(split);
    }
    if (btext.empty() || btext == "+") coef = Rational(1);
    else if (btext == "-") coef = Rational(-1);
    else coef = Rational::parse(btext);
    return QuadNum(a, coef, d);
  }

  friend std::ostream& operator<<(std::ostream& os, const QuadNum& x) { return os << x.to_string(); }

 private:
  void canonicalize() {
    if (d_ == 1 && !b_.is_zero()) {
      a_ += b_;
      b_ = Rational(0);
    }
    if (b_.is_zero()) d_ = 1;
  }
  int join(const QuadNum& o) const {
    if (b_.is_zero()) return o.d_;
    if (o.b_.is_zero() || o.d_ == d_) return d_;
    throw FieldMismatch(d_, o.d_);
  }

  Rational a_;
  Rational b_;
  int d_ = 1;
};

inline int sign(const QuadNum& x) { return x.sign(); }

}  // namespace pwrot

template <>
struct std::hash<pwrot::QuadNum> {
  std::size_t operator()(const pwrot::QuadNum& x) const noexcept {
    std::size_t h = std::hash<pwrot::Rational>{}(x.a());
    return h ^ (std::hash<pwrot::Rational>{}(x.b()) * 0x9e3779b97f4a7c15ULL + static_cast<std::size_t>(x.d()));
  }
};
