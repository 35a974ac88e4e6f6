#pragma once

// Cylinder and periodic cells, periodic-cell enumeration on a region, and the
// ring (annulus) check on orbits of periodic cells.

#include "pwrot/dynamics/rotation.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pwrot {

struct Cell {
  enum class Kind { kCylinder, kPeriodic };
  Word word;
  ConvexRegion region;
  Kind kind = Kind::kPeriodic;
};

/// Points of the domain whose first |w| letters are w (an open convex region, possibly empty).
inline ConvexRegion cylinder_cell(const PiecewiseIsometry& pw, const Word& w) {
  if (w.empty()) throw std::invalid_argument("cylinder_cell: empty word");
  ConvexRegion cyl = pw.domain();
  Isometry g = Isometry::identity(pw.order());
  for (char c : w) {
    const Piece& p = pw.piece(c);
    cyl = intersect(cyl, map(p.region, g.inverse()));
    if (!has_interior(cyl)) return ConvexRegion::empty();
    g = p.map.compose(g);
  }
  return cyl;
}

inline ConvexRegion cylinder_cell(const PiecewiseRotation& t, const Word& w) { return cylinder_cell(t.as_piecewise(), w); }

/// The open cell of the periodic word w^omega, when it has interior.
inline std::optional<Cell> periodic_cell(const PiecewiseIsometry& pw, const Word& w) {
  ConvexRegion cyl = cylinder_cell(pw, w);
  if (!has_interior(cyl)) return std::nullopt;
  Isometry g = pw.along(w);
  if (g.is_identity()) return Cell{w, cyl, Cell::Kind::kPeriodic};
  if (g.is_translation()) return std::nullopt;
  ConvexRegion cell = cyl;
  Isometry gj = g;
  for (int j = 1; j < g.rotation_order(); ++j, gj = g.compose(gj)) cell = intersect(cell, map(cyl, gj));
  if (!has_interior(cell) || !cell.contains(*g.fixed_point())) return std::nullopt;
  return Cell{w, cell, Cell::Kind::kPeriodic};
}

inline std::optional<Cell> periodic_cell(const PiecewiseRotation& t, const Word& w) {
  return periodic_cell(t.as_piecewise(), w);
}

/// Images of the cell along its word: the cells of the cyclic shifts of w.
inline std::vector<Cell> cell_orbit(const PiecewiseIsometry& pw, const Cell& c) {
  Word root = primitive_root(c.word);
  std::vector<Cell> out{{root, c.region, c.kind}};
  ConvexRegion cur = c.region;
  for (std::size_t i = 0; i + 1 < root.size(); ++i) {
    cur = map(cur, pw.piece(root[i]).map);
    out.push_back({root.substr(i + 1) + root.substr(0, i + 1), cur, c.kind});
  }
  return out;
}

/// Candidate interior points: the vertex average (bounded) or an FM witness,
/// then points pulled towards each vertex, away from symmetric positions.
inline std::vector<Point> witness_candidates(const ConvexRegion& r, std::size_t extra = 8) {
  std::vector<Point> out;
  Boundary b = boundary(r);
  Point c;
  if (b.bounded) {
    c = vertex_centroid(r);
  } else {
    auto w = classify(r);
    if (!w.interior()) return out;
    c = *w.witness;
  }
  out.push_back(c);
  for (std::size_t i = 0; i < extra && !b.vertices.empty(); ++i) {
    const Point& v = b.vertices[i % b.vertices.size()];
    Rational t = Rational(1, static_cast<long>(i) + 2) + Rational(1, 97 * (static_cast<long>(i) + 3));
    Point p = c + QuadNum(t) * (v - c);
    if (r.contains(p)) out.push_back(p);
  }
  return out;
}

/// Primitive periodic word of z under pw, when z returns to itself within max_period steps.
inline std::optional<Word> periodic_word(const PiecewiseIsometry& pw, const Point& z, std::size_t max_period) {
  Point cur = z;
  Word w;
  for (std::size_t i = 0; i < max_period; ++i) {
    const Piece* p = pw.locate(cur);
    if (!p) return std::nullopt;
    w += p->label;
    cur = p->map(cur);
    if (cur == z) return primitive_root(w);
  }
  return std::nullopt;
}

namespace detail {

/// Floating bounding box, widened so that disjoint boxes imply disjoint regions.
struct Box {
  double x0 = -HUGE_VAL, x1 = HUGE_VAL, y0 = -HUGE_VAL, y1 = HUGE_VAL;
  bool apart(const Box& o) const { return x1 < o.x0 || o.x1 < x0 || y1 < o.y0 || o.y1 < y0; }
};

inline Box box_of(const ConvexRegion& r) {
  Box bx;
  Boundary b = boundary(r);
  if (!b.bounded || b.vertices.empty()) return bx;
  bx.x0 = bx.y0 = HUGE_VAL;
  bx.x1 = bx.y1 = -HUGE_VAL;
  for (const auto& v : b.vertices) {
    double x = v.x.to_double(), y = v.y.to_double();
    bx.x0 = std::min(bx.x0, x), bx.x1 = std::max(bx.x1, x);
    bx.y0 = std::min(bx.y0, y), bx.y1 = std::max(bx.y1, y);
  }
  double m = 1e-7 * (1 + std::max({std::abs(bx.x0), std::abs(bx.x1), std::abs(bx.y0), std::abs(bx.y1)}));
  bx.x0 -= m, bx.x1 += m, bx.y0 -= m, bx.y1 += m;
  return bx;
}

}  // namespace detail

struct PeriodicCover {
  /// Periodic cells met, each followed by the rest of its orbit.
  std::vector<Cell> cells;
  /// Parts of the region no found cell covers.
  std::vector<ConvexRegion> uncovered;
  /// Number of distinct cell orbits.
  std::size_t orbits = 0;
  bool complete() const { return uncovered.empty(); }
};

struct CoverOptions {
  std::size_t max_period = 2000;
  /// Stop after this many cell orbits; the remaining parts are reported uncovered.
  std::size_t max_orbits = 1000;
  std::size_t witnesses = 8;
  /// Stop after this many parts without a periodic witness.
  std::size_t max_failures = 1000;
};

/// Covers the given open convex parts by periodic cells of pw. Parts are
/// processed largest first (unbounded before bounded) and each found orbit is
/// subtracted from every remaining part.
inline PeriodicCover periodic_cover(const PiecewiseIsometry& pw, std::vector<ConvexRegion> parts,
                                    const CoverOptions& opt = {}) {
  PeriodicCover out;
  struct Part {
    ConvexRegion region;
    bool bounded;
    QuadNum area;
    detail::Box box;
  };
  auto make = [](ConvexRegion r) {
    bool b = is_bounded(r);
    QuadNum a = b ? area(r) : QuadNum(0);
    detail::Box bx = detail::box_of(r);
    return Part{std::move(r), b, std::move(a), bx};
  };
  std::vector<Part> work;
  for (auto& p : parts)
    if (has_interior(p)) work.push_back(make(reduce(p.interior())));
  auto larger = [](const Part& x, const Part& y) {
    if (x.bounded != y.bounded) return !x.bounded;
    return x.area > y.area;
  };
  std::size_t failures = 0;
  while (!work.empty()) {
    if (out.orbits >= opt.max_orbits || failures >= opt.max_failures) break;
    auto it = std::min_element(work.begin(), work.end(), larger);
    Part part = std::move(*it);
    work.erase(it);
    std::optional<Cell> found;
    for (const auto& z : witness_candidates(part.region, opt.witnesses)) {
      auto w = periodic_word(pw, z, opt.max_period);
      if (!w) continue;
      auto c = periodic_cell(pw, *w);
      if (c && c->region.contains(z)) {
        found = c;
        break;
      }
    }
    if (!found) {
      ++failures;
      out.uncovered.push_back(std::move(part.region));
      continue;
    }
    ++out.orbits;
    work.push_back(std::move(part));
    for (auto& oc : cell_orbit(pw, *found)) {
      std::vector<Part> rest;
      detail::Box cb = detail::box_of(oc.region);
      for (auto& w : work) {
        if (cb.apart(w.box)) {
          rest.push_back(std::move(w));
          continue;
        }
        auto pieces = subtract_open(w.region, oc.region);
        if (pieces.size() == 1 && same_set(pieces[0], w.region)) rest.push_back(std::move(w));
        else
          for (auto& r : pieces) rest.push_back(make(std::move(r)));
      }
      work = std::move(rest);
      out.cells.push_back(std::move(oc));
    }
  }
  for (auto& w : work) out.uncovered.push_back(std::move(w.region));
  return out;
}

struct Tiling {
  /// Periodic cells meeting the region, with their orbits.
  std::vector<Cell> cells;
  /// Parts of the region left without a periodic cell.
  std::vector<ConvexRegion> gaps;
  QuadNum region_area, covered_area;
  QuadNum defect() const { return region_area - covered_area; }
  bool exact() const { return gaps.empty() && defect().is_zero(); }
};

class UnboundedRegion : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Periodic cells of pw tiling the bounded region, searched up to period max_period.
inline Tiling tiling_enumerate(const PiecewiseIsometry& pw, const ConvexRegion& region, std::size_t max_period = 2000) {
  if (!has_interior(region) || !is_bounded(region)) throw UnboundedRegion("tiling_enumerate: region must be bounded");
  CoverOptions opt;
  opt.max_period = max_period;
  PeriodicCover cov = periodic_cover(pw, {region}, opt);
  Tiling t;
  t.region_area = area(region);
  for (auto& c : cov.cells) {
    ConvexRegion part = intersect(c.region, region);
    if (!has_interior(part)) continue;
    t.covered_area += area(part);
    t.cells.push_back(std::move(c));
  }
  t.gaps = std::move(cov.uncovered);
  return t;
}

/// Convex parts of domain minus the union of the given open regions.
inline std::vector<ConvexRegion> complement_in(const ConvexRegion& domain, const std::vector<ConvexRegion>& holes) {
  std::vector<ConvexRegion> parts{reduce(domain.interior())};
  for (const auto& h : holes) {
    std::vector<ConvexRegion> next;
    for (const auto& p : parts)
      for (auto& r : subtract_open(p, h)) next.push_back(std::move(r));
    parts = std::move(next);
    if (parts.empty()) break;
  }
  return parts;
}

/// When two orbit polygons count as touching.
enum class Contact {
  /// Closures share a segment of positive length.
  kSegment,
  /// Closures meet, possibly in a single point.
  kPoint,
};

struct RingReport {
  std::vector<Word> words;
  std::vector<Cell> polygons;
  /// Pairs of polygon indices whose closures share a segment of positive length.
  std::vector<std::pair<std::size_t, std::size_t>> adjacency;
  Point center;
  Contact contact = Contact::kSegment;
  int winding = 0;
  bool closed = false;
};

namespace detail {

/// Closures of r and s meet along a segment of positive length.
inline bool share_segment(const ConvexRegion& r, const ConvexRegion& s) {
  ConvexRegion a = reduce(r.closure()), b = reduce(s.closure());
  for (const auto& h : a.constraints())
    for (const auto& g : b.constraints()) {
      if (!(g.a() == -h.a() && g.b() == -h.b() && g.c() == -h.c())) continue;
      Point o = line_origin(h), u = h.direction();
      std::vector<Linear1> cs;
      for (const auto* reg : {&a, &b})
        for (const auto& f : reg->constraints())
          if (!f.same_line(h)) cs.push_back({dot(f.normal(), u), f.evaluate(o), false});
      Interval iv = solve1(cs);
      if (!interval_ok(iv)) continue;
      if (!iv.lo.value || !iv.hi.value || (*iv.hi.value - *iv.lo.value).sign() > 0) return true;
    }
  return false;
}

/// Winding number of the closed polygon through pts around c (exact crossing count).
inline int winding_number(const std::vector<Point>& pts, const Point& c) {
  int wn = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Point& p = pts[i];
    const Point& q = pts[(i + 1) % pts.size()];
    int side = cross(q - p, c - p).sign();
    if ((p.y - c.y).sign() <= 0) {
      if ((q.y - c.y).sign() > 0 && side > 0) ++wn;
    } else if ((q.y - c.y).sign() <= 0 && side < 0) {
      --wn;
    }
  }
  return wn;
}

}  // namespace detail

class RingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Orbit polygons of the periodic cells of the given words under T, their
/// adjacency graph, and whether they close up into a ring around the center
/// (default: the origin).
inline RingReport ring_check(const PiecewiseRotation& t, const std::vector<Word>& words,
                             std::optional<Point> center = std::nullopt, Contact contact = Contact::kSegment) {
  if (words.empty()) throw RingError("ring_check: no words");
  PiecewiseIsometry pw = t.as_piecewise();
  RingReport rep;
  rep.words = words;
  for (const auto& w : words) {
    auto c = periodic_cell(pw, w);
    if (!c) throw RingError("ring_check: no periodic cell for " + compact(w));
    Isometry g = pw.along(w);
    if (g.is_translation() && !g.is_identity()) throw RingError("ring_check: translation-type return for " + compact(w));
    for (auto& oc : cell_orbit(pw, *c)) rep.polygons.push_back(std::move(oc));
  }
  rep.center = center.value_or(Point(QuadNum(0), QuadNum(0)));
  rep.contact = contact;
  auto touch = [&](const ConvexRegion& r, const ConvexRegion& s) {
    if (contact == Contact::kSegment) return detail::share_segment(r, s);
    return !is_empty(intersect(r.closure(), s.closure()));
  };
  const std::size_t n = rep.polygons.size();
  std::vector<std::vector<std::size_t>> nbr(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (touch(rep.polygons[i].region, rep.polygons[j].region)) {
        rep.adjacency.push_back({i, j});
        nbr[i].push_back(j);
        nbr[j].push_back(i);
      }
  if (n == 1) {
    rep.closed = true;
    rep.winding = rep.polygons[0].region.contains(rep.center) ? 1 : 0;
    return rep;
  }
  for (const auto& v : nbr)
    if (v.size() != 2) return rep;
  // walk the cycle
  std::vector<std::size_t> cycle{0};
  std::size_t prev = 0, cur = nbr[0][0];
  while (cur != 0 && cycle.size() <= n) {
    cycle.push_back(cur);
    std::size_t nxt = nbr[cur][0] == prev ? nbr[cur][1] : nbr[cur][0];
    prev = cur;
    cur = nxt;
  }
  if (cycle.size() != n) return rep;
  std::vector<Point> centroids;
  for (std::size_t i : cycle) centroids.push_back(vertex_centroid(rep.polygons[i].region));
  rep.winding = detail::winding_number(centroids, rep.center);
  rep.closed = rep.winding != 0;
  return rep;
}

}  // namespace pwrot
