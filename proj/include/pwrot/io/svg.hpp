#pragma once

// SVG output of regions clipped to a window. Coordinates stay exact until
// they are written, then are rounded to a fixed number of decimals. The
// y-axis is flipped so that Im(z) > 0 is drawn upwards.

#include "pwrot/cells/cells.hpp"

#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace pwrot::io {

/// x rounded half-up to `decimals` places, written without exponent.
inline std::string format_fixed(const QuadNum& x, int decimals) {
  Rational scale(1);
  for (int i = 0; i < decimals; ++i) scale *= Rational(10);
  QuadNum r = x * QuadNum(scale);
  double approx = r.to_double();
  if (!(std::abs(approx) < 9e15)) throw std::invalid_argument("format_fixed: value out of range");
  long m = std::lround(approx);
  const Rational half(1, 2);
  while (QuadNum(Rational(m) + half) <= r) ++m;
  while (QuadNum(Rational(m) - half) > r) --m;
  bool neg = m < 0;
  std::string digits = std::to_string(neg ? -m : m);
  if (decimals > 0) {
    if (static_cast<int>(digits.size()) <= decimals) digits.insert(0, decimals + 1 - digits.size(), '0');
    digits.insert(digits.size() - decimals, ".");
  }
  return (neg ? "-" : "") + digits;
}

struct SvgStyle {
  std::string fill = "none";
  std::string stroke = "#000";
  double stroke_width = 0.02;
  double opacity = 1.0;
};

class SvgCanvas {
 public:
  /// The window (x0, x1) x (y0, y1) in plane coordinates.
  SvgCanvas(QuadNum x0, QuadNum y0, QuadNum x1, QuadNum y1, int decimals = 12)
      : x0_(std::move(x0)), y0_(std::move(y0)), x1_(std::move(x1)), y1_(std::move(y1)), decimals_(decimals) {
    if (!(x0_ < x1_) || !(y0_ < y1_)) throw std::invalid_argument("SvgCanvas: empty window");
  }

  ConvexRegion window() const { return ConvexRegion::box(x0_, y0_, x1_, y1_); }

  /// Draws region clipped to the window; returns false when nothing is visible.
  bool region(const ConvexRegion& r, const SvgStyle& st = {}, const std::string& label = "") {
    ConvexRegion clip = intersect(r, window());
    if (!has_interior(clip)) return false;
    Boundary b = boundary(clip);
    std::ostringstream path;
    for (std::size_t i = 0; i < b.vertices.size(); ++i)
      path << (i ? " L " : "M ") << x(b.vertices[i].x) << ' ' << y(b.vertices[i].y);
    path << " Z";
    body_ << "<path d=\"" << path.str() << "\" fill=\"" << st.fill << "\" stroke=\"" << st.stroke
          << "\" stroke-width=\"" << st.stroke_width << "\"";
    if (st.opacity != 1.0) body_ << " fill-opacity=\"" << st.opacity << "\"";
    body_ << "/>\n";
    if (!label.empty()) text(vertex_centroid(clip), label);
    return true;
  }

  void text(const Point& at, const std::string& s, double size = 0.3) {
    body_ << "<text x=\"" << x(at.x) << "\" y=\"" << y(at.y) << "\" font-size=\"" << size
          << "\" text-anchor=\"middle\" dominant-baseline=\"middle\">" << escape(s) << "</text>\n";
  }

  void segment(const Point& p, const Point& q, const std::string& stroke = "#888", double width = 0.02) {
    body_ << "<line x1=\"" << x(p.x) << "\" y1=\"" << y(p.y) << "\" x2=\"" << x(q.x) << "\" y2=\"" << y(q.y)
          << "\" stroke=\"" << stroke << "\" stroke-width=\"" << width << "\"/>\n";
  }

  /// The discontinuity line and the imaginary axis, across the window.
  void axes() {
    QuadNum zero(0);
    if (y0_ < zero && zero < y1_) segment(Point(x0_, zero), Point(x1_, zero), "#c00", 0.03);
    if (x0_ < zero && zero < x1_) segment(Point(zero, y0_), Point(zero, y1_), "#bbb", 0.01);
  }

  std::string str() const {
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << x(x0_) << ' ' << y(y1_) << ' '
        << format_fixed(x1_ - x0_, decimals_) << ' ' << format_fixed(y1_ - y0_, decimals_) << "\">\n"
        << body_.str() << "</svg>\n";
    return out.str();
  }

 private:
  std::string x(const QuadNum& v) const { return format_fixed(v, decimals_); }
  std::string y(const QuadNum& v) const { return format_fixed(-v, decimals_); }

  static std::string escape(const std::string& s) {
    std::string o;
    for (char c : s) {
      if (c == '<') o += "&lt;";
      else if (c == '>') o += "&gt;";
      else if (c == '&') o += "&amp;";
      else o += c;
    }
    return o;
  }

  QuadNum x0_, y0_, x1_, y1_;
  int decimals_;
  std::ostringstream body_;
};

/// Smallest window holding every region, widened by margin; throws for unbounded regions.
inline SvgCanvas fit_canvas(const std::vector<ConvexRegion>& regions, const Rational& margin = Rational(1, 2),
                            int decimals = 12) {
  std::optional<QuadNum> x0, y0, x1, y1;
  for (const auto& r : regions) {
    if (!has_interior(r)) continue;
    Boundary b = boundary(r);
    if (!b.bounded) throw std::invalid_argument("render: unbounded region needs a clipping window");
    for (const auto& v : b.vertices) {
      if (!x0 || v.x < *x0) x0 = v.x;
      if (!x1 || v.x > *x1) x1 = v.x;
      if (!y0 || v.y < *y0) y0 = v.y;
      if (!y1 || v.y > *y1) y1 = v.y;
    }
  }
  QuadNum m(margin);
  if (!x0) return SvgCanvas(QuadNum(-1), QuadNum(-1), QuadNum(1), QuadNum(1), decimals);
  return SvgCanvas(*x0 - m, *y0 - m, *x1 + m, *y1 + m, decimals);
}

}  // namespace pwrot::io
