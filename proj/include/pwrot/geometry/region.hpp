#pragma once

// Possibly unbounded convex regions of the plane in H-representation, with
// exact emptiness (two-variable Fourier-Motzkin elimination over the ordered
// field), redundancy elimination, images under isometries and similarities,
// boundary extraction and exact set differences.

#include "pwrot/geometry/halfplane.hpp"

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pwrot {

class ConvexRegion {
 public:
  /// The whole plane.
  ConvexRegion() = default;
  explicit ConvexRegion(std::vector<HalfPlane> constraints) : constraints_(std::move(constraints)) {}
  ConvexRegion(std::initializer_list<HalfPlane> constraints) : constraints_(constraints) {}

  static ConvexRegion plane() { return ConvexRegion(); }
  static ConvexRegion empty() {
    ConvexRegion r;
    r.known_empty_ = true;
    return r;
  }

  /// The open box (x0, x1) x (y0, y1).
  static ConvexRegion box(const QuadNum& x0, const QuadNum& y0, const QuadNum& x1, const QuadNum& y1) {
    return ConvexRegion({HalfPlane(QuadNum(1), QuadNum(0), -x0), HalfPlane(QuadNum(-1), QuadNum(0), x1),
                         HalfPlane(QuadNum(0), QuadNum(1), -y0), HalfPlane(QuadNum(0), QuadNum(-1), y1)});
  }

  const std::vector<HalfPlane>& constraints() const { return constraints_; }
  /// True only when reduction proved the set empty.
  bool known_empty() const { return known_empty_; }
  bool is_plane() const { return !known_empty_ && constraints_.empty(); }

  bool contains(const Point& p) const {
    if (known_empty_) return false;
    return std::all_of(constraints_.begin(), constraints_.end(),
                       [&](const HalfPlane& h) { return h.contains(p); });
  }
  bool contains_interior(const Point& p) const {
    if (known_empty_) return false;
    return std::all_of(constraints_.begin(), constraints_.end(),
                       [&](const HalfPlane& h) { return h.evaluate(p).sign() > 0; });
  }

  /// Same region with every constraint strict (the interior) or non-strict (the closure).
  ConvexRegion interior() const { return with_strictness(true); }
  ConvexRegion closure() const { return with_strictness(false); }

  friend bool operator==(const ConvexRegion& r, const ConvexRegion& s) = default;

  std::string to_string() const {
    if (known_empty_) return "{empty}";
    std::string s = "{";
    for (std::size_t i = 0; i < constraints_.size(); ++i)
      s += (i ? ", " : "") + constraints_[i].to_string();
    return s + "}";
  }

 private:
  ConvexRegion with_strictness(bool strict) const {
    if (known_empty_) return *this;
    std::vector<HalfPlane> out;
    out.reserve(constraints_.size());
    for (const auto& h : constraints_) out.push_back(h.with_strict(strict));
    return ConvexRegion(std::move(out));
  }

  std::vector<HalfPlane> constraints_;
  bool known_empty_ = false;
};

namespace detail {

// A one-variable constraint a x + c (> | >=) 0.
struct Linear1 {
  QuadNum a, c;
  bool strict;
};

struct Bound {
  std::optional<QuadNum> value;
  bool strict = false;
};

struct Interval {
  Bound lo, hi;
  bool feasible = true;
};

inline void tighten_lower(Bound& b, const QuadNum& v, bool strict) {
  if (!b.value) {
    b.value = v;
    b.strict = strict;
    return;
  }
  int s = (v - *b.value).sign();
  if (s > 0) {
    b.value = v;
    b.strict = strict;
  } else if (s == 0) {
    b.strict = b.strict || strict;
  }
}

inline void tighten_upper(Bound& b, const QuadNum& v, bool strict) {
  if (!b.value) {
    b.value = v;
    b.strict = strict;
    return;
  }
  int s = (v - *b.value).sign();
  if (s < 0) {
    b.value = v;
    b.strict = strict;
  } else if (s == 0) {
    b.strict = b.strict || strict;
  }
}

inline bool interval_ok(const Interval& iv) {
  if (!iv.feasible) return false;
  if (!iv.lo.value || !iv.hi.value) return true;
  int s = (*iv.hi.value - *iv.lo.value).sign();
  if (s > 0) return true;
  return s == 0 && !iv.lo.strict && !iv.hi.strict;
}

inline Interval solve1(const std::vector<Linear1>& cs) {
  Interval iv;
  for (const auto& l : cs) {
    int s = l.a.sign();
    if (s == 0) {
      int sc = l.c.sign();
      if (sc < 0 || (sc == 0 && l.strict)) iv.feasible = false;
    } else if (s > 0) {
      tighten_lower(iv.lo, -l.c / l.a, l.strict);
    } else {
      tighten_upper(iv.hi, -l.c / l.a, l.strict);
    }
  }
  return iv;
}

/// A point of the interval, strictly inside it when the interval is open and nonempty.
inline QuadNum pick(const Interval& iv) {
  if (iv.lo.value && iv.hi.value) return (*iv.lo.value + *iv.hi.value) * QuadNum(Rational(1, 2));
  if (iv.lo.value) return *iv.lo.value + QuadNum(1);
  if (iv.hi.value) return *iv.hi.value - QuadNum(1);
  return QuadNum(0);
}

// y-bounds: y + p x + r (>|>=) 0 for lower bounds, y + p x + r (<|<=) 0 for upper.
struct YBound {
  QuadNum p, r;
  bool strict;
};

struct Split {
  std::vector<YBound> lows, ups;
  std::vector<Linear1> xs;
};

inline Split split_y(std::span<const HalfPlane> hs) {
  Split s;
  for (const auto& h : hs) {
    int sb = h.b().sign();
    if (sb == 0) {
      s.xs.push_back({h.a(), h.c(), h.strict()});
    } else {
      QuadNum p = h.a() / h.b(), r = h.c() / h.b();
      (sb > 0 ? s.lows : s.ups).push_back({std::move(p), std::move(r), h.strict()});
    }
  }
  return s;
}

/// Fourier-Motzkin: exact nonemptiness, optionally producing a point.
inline bool fm_solve(std::span<const HalfPlane> hs, Point* witness) {
  Split s = split_y(hs);
  std::vector<Linear1> xs = s.xs;
  for (const auto& lo : s.lows)
    for (const auto& up : s.ups)
      // -p x - r < -p' x - r'
      xs.push_back({lo.p - up.p, lo.r - up.r, lo.strict || up.strict});
  Interval ix = solve1(xs);
  if (!interval_ok(ix)) return false;
  if (witness) {
    QuadNum x = pick(ix);
    Interval iy;
    for (const auto& lo : s.lows) tighten_lower(iy.lo, -(lo.p * x) - lo.r, lo.strict);
    for (const auto& up : s.ups) tighten_upper(iy.hi, -(up.p * x) - up.r, up.strict);
    *witness = Point(x, pick(iy));
  }
  return true;
}

}  // namespace detail

/// Literal nonemptiness of the intersection of the given half-planes.
inline bool feasible(std::span<const HalfPlane> hs) { return detail::fm_solve(hs, nullptr); }

/// Nonempty interior (every constraint made strict).
inline bool has_interior(std::span<const HalfPlane> hs) {
  std::vector<HalfPlane> open;
  open.reserve(hs.size());
  for (const auto& h : hs) open.push_back(h.with_strict(true));
  return detail::fm_solve(open, nullptr);
}

inline bool is_empty(const ConvexRegion& r) { return r.known_empty() || !feasible(r.constraints()); }
inline bool has_interior(const ConvexRegion& r) { return !r.known_empty() && has_interior(std::span(r.constraints())); }

/// Outcome of an emptiness query.
struct Emptiness {
  enum class Kind { kEmpty, kDegenerate, kInterior };
  Kind kind;
  /// Rational interior point when kind == kInterior.
  std::optional<Point> witness;

  bool empty() const { return kind == Kind::kEmpty; }
  bool degenerate() const { return kind == Kind::kDegenerate; }
  bool interior() const { return kind == Kind::kInterior; }
};

/// Rational point approximating p and still in the open region.
inline std::optional<Point> rational_point_near(const ConvexRegion& r, const Point& p) {
  if (p.x.is_rational() && p.y.is_rational()) return r.contains_interior(p) ? std::optional(p) : std::nullopt;
  for (unsigned bits = 8; bits <= 512; bits *= 2) {
    Rational x = p.x.bracket(bits).first, y = p.y.bracket(bits).first;
    Point q{QuadNum(x), QuadNum(y)};
    if (r.contains_interior(q)) return q;
  }
  return std::nullopt;
}

inline Emptiness classify(const ConvexRegion& r) {
  if (r.known_empty()) return {Emptiness::Kind::kEmpty, std::nullopt};
  const auto open = r.interior();
  Point w;
  if (detail::fm_solve(open.constraints(), &w)) {
    auto q = rational_point_near(r, w);
    if (!q) throw std::logic_error("classify: interior point could not be rounded");
    return {Emptiness::Kind::kInterior, q};
  }
  if (feasible(r.constraints())) return {Emptiness::Kind::kDegenerate, std::nullopt};
  return {Emptiness::Kind::kEmpty, std::nullopt};
}

/// An exact point strictly inside the region (field coordinates), if any.
inline std::optional<Point> interior_point(const ConvexRegion& r) {
  if (r.known_empty()) return std::nullopt;
  Point w;
  auto open = r.interior();
  if (!detail::fm_solve(open.constraints(), &w)) return std::nullopt;
  return w;
}

/// Drops duplicate/parallel-dominated and redundant constraints; detects emptiness.
inline ConvexRegion reduce(const ConvexRegion& r) {
  if (r.known_empty()) return r;
  std::vector<HalfPlane> cs;
  for (const auto& h : r.constraints()) {
    bool merged = false;
    for (auto& g : cs) {
      if (!g.parallel_same_side(h)) continue;
      // same normal: the smaller offset is the tighter one
      int s = (h.c() - g.c()).sign();
      if (s < 0 || (s == 0 && h.strict() && !g.strict())) g = h;
      merged = true;
      break;
    }
    if (!merged) cs.push_back(h);
  }
  if (!feasible(cs)) return ConvexRegion::empty();
  for (std::size_t i = 0; i < cs.size();) {
    std::vector<HalfPlane> probe;
    probe.reserve(cs.size());
    for (std::size_t j = 0; j < cs.size(); ++j)
      if (j != i) probe.push_back(cs[j]);
    probe.push_back(cs[i].complement());
    if (!feasible(probe)) cs.erase(cs.begin() + static_cast<std::ptrdiff_t>(i));
    else ++i;
  }
  std::sort(cs.begin(), cs.end());
  return ConvexRegion(std::move(cs));
}

inline ConvexRegion intersect(const ConvexRegion& r1, const ConvexRegion& r2) {
  if (r1.known_empty() || r2.known_empty()) return ConvexRegion::empty();
  std::vector<HalfPlane> cs = r1.constraints();
  cs.insert(cs.end(), r2.constraints().begin(), r2.constraints().end());
  return reduce(ConvexRegion(std::move(cs)));
}

inline ConvexRegion intersect(const ConvexRegion& r, const HalfPlane& h) {
  if (r.known_empty()) return r;
  std::vector<HalfPlane> cs = r.constraints();
  cs.push_back(h);
  return reduce(ConvexRegion(std::move(cs)));
}

/// g(r) as a set.
inline ConvexRegion map(const ConvexRegion& r, const Isometry& g) {
  if (r.known_empty()) return r;
  std::vector<HalfPlane> cs;
  cs.reserve(r.constraints().size());
  for (const auto& h : r.constraints()) cs.push_back(h.mapped(g));
  std::sort(cs.begin(), cs.end());
  return ConvexRegion(std::move(cs));
}

inline ConvexRegion map(const ConvexRegion& r, const Similarity& g) {
  if (r.known_empty()) return r;
  std::vector<HalfPlane> cs;
  cs.reserve(r.constraints().size());
  for (const auto& h : r.constraints()) cs.push_back(h.mapped(g));
  std::sort(cs.begin(), cs.end());
  return ConvexRegion(std::move(cs));
}

/// inner is a subset of outer.
inline bool contains(const ConvexRegion& outer, const ConvexRegion& inner) {
  if (inner.known_empty() || is_empty(inner)) return true;
  if (outer.known_empty()) return false;
  for (const auto& h : outer.constraints()) {
    std::vector<HalfPlane> probe = inner.constraints();
    probe.push_back(h.complement());
    if (feasible(probe)) return false;
  }
  return true;
}

inline bool same_set(const ConvexRegion& r1, const ConvexRegion& r2) {
  return contains(r1, r2) && contains(r2, r1);
}

/// Interiors coincide (equality up to boundary lines).
inline bool same_interior(const ConvexRegion& r1, const ConvexRegion& r2) {
  return same_set(r1.interior(), r2.interior());
}

/// Exact r \ w as pairwise-disjoint convex pieces.
inline std::vector<ConvexRegion> subtract(const ConvexRegion& r, const ConvexRegion& w) {
  std::vector<ConvexRegion> out;
  if (is_empty(r)) return out;
  if (w.known_empty()) return {r};
  if (is_empty(intersect(r, w))) return {r};
  std::vector<HalfPlane> acc = r.constraints();
  for (const auto& h : w.constraints()) {
    auto piece = intersect(ConvexRegion(acc), h.complement());
    if (!is_empty(piece)) out.push_back(std::move(piece));
    acc.push_back(h);
    if (!feasible(acc)) break;
  }
  return out;
}

/// Interior of r minus the closure of w, as disjoint open convex pieces with
/// nonempty interior. Lower-dimensional leftovers are dropped.
inline std::vector<ConvexRegion> subtract_open(const ConvexRegion& r, const ConvexRegion& w) {
  std::vector<ConvexRegion> out;
  if (r.known_empty()) return out;
  ConvexRegion open = r.interior();
  if (w.known_empty()) {
    if (has_interior(open)) out.push_back(reduce(open));
    return out;
  }
  {
    // disjoint: keep the region whole rather than slicing it along w's lines
    std::vector<HalfPlane> both = open.constraints();
    for (const auto& h : w.constraints()) both.push_back(h.with_strict(true));
    if (!has_interior(std::span<const HalfPlane>(both))) {
      if (has_interior(open)) out.push_back(reduce(open));
      return out;
    }
  }
  std::vector<HalfPlane> acc = open.constraints();
  for (const auto& h : w.constraints()) {
    std::vector<HalfPlane> probe = acc;
    probe.push_back(h.open_opposite());
    if (has_interior(std::span<const HalfPlane>(probe))) out.push_back(reduce(ConvexRegion(std::move(probe))));
    acc.push_back(h.with_strict(true));
    if (!has_interior(std::span<const HalfPlane>(acc))) break;
  }
  return out;
}

/// Boundary of a region with nonempty interior, walked counterclockwise.
struct Boundary {
  /// Vertices in counterclockwise order. For bounded regions the list starts
  /// at the lexicographically smallest vertex; for unbounded regions it runs
  /// from the end of the incoming ray to the start of the outgoing ray.
  std::vector<Point> vertices;
  /// Outward directions of unbounded edges: for a region with vertices,
  /// rays[0] leaves vertices.front() and rays[1] leaves vertices.back().
  std::vector<Point> rays;
  bool bounded = true;
};

namespace detail {

struct Edge {
  HalfPlane h;
  Point origin;  // a point of the line
  Bound t_lo, t_hi;
};

inline Point line_origin(const HalfPlane& h) {
  if (!h.a().is_zero()) return Point(-h.c() / h.a(), QuadNum(0));
  return Point(QuadNum(0), -h.c() / h.b());
}

inline Point at(const Edge& e, const QuadNum& t) { return e.origin + t * e.h.direction(); }

}  // namespace detail

/// Counterclockwise boundary description. Throws for regions without interior.
inline Boundary boundary(const ConvexRegion& region) {
  ConvexRegion r = reduce(region.closure());
  if (r.known_empty() || !has_interior(r)) throw std::invalid_argument("boundary: region has empty interior");
  Boundary out;
  if (r.constraints().empty()) {
    out.bounded = false;
    return out;
  }
  std::vector<detail::Edge> edges;
  for (std::size_t i = 0; i < r.constraints().size(); ++i) {
    const auto& h = r.constraints()[i];
    detail::Edge e{h, detail::line_origin(h), {}, {}};
    Point u = h.direction();
    std::vector<detail::Linear1> cs;
    for (std::size_t j = 0; j < r.constraints().size(); ++j) {
      if (j == i) continue;
      const auto& g = r.constraints()[j];
      cs.push_back({dot(g.normal(), u), g.evaluate(e.origin), false});
    }
    detail::Interval iv = detail::solve1(cs);
    if (!detail::interval_ok(iv)) continue;
    if (iv.lo.value && iv.hi.value && *iv.lo.value == *iv.hi.value) continue;
    e.t_lo = iv.lo;
    e.t_hi = iv.hi;
    edges.push_back(std::move(e));
  }
  bool has_vertex = std::any_of(edges.begin(), edges.end(),
                                [](const detail::Edge& e) { return e.t_lo.value || e.t_hi.value; });
  if (!has_vertex) {
    // half-plane or strip: no vertices
    out.bounded = false;
    out.rays.push_back(edges.front().h.direction());
    out.rays.push_back(-edges.front().h.direction());
    return out;
  }
  // chain edges head to tail
  std::size_t start = 0;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (!edges[i].t_lo.value) start = i;
  std::vector<std::size_t> order{start};
  std::vector<bool> used(edges.size(), false);
  used[start] = true;
  while (order.size() < edges.size()) {
    const auto& cur = edges[order.back()];
    if (!cur.t_hi.value) break;
    Point end = detail::at(cur, *cur.t_hi.value);
    bool found = false;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (used[i] || !edges[i].t_lo.value) continue;
      if (detail::at(edges[i], *edges[i].t_lo.value) == end) {
        order.push_back(i);
        used[i] = true;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("boundary: broken edge chain");
  }
  const auto& first = edges[order.front()];
  const auto& last = edges[order.back()];
  if (!first.t_lo.value) {
    out.bounded = false;
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
      const auto& e = edges[order[i]];
      out.vertices.push_back(detail::at(e, *e.t_hi.value));
    }
    out.rays.push_back(-first.h.direction());
    out.rays.push_back(last.h.direction());
    return out;
  }
  for (std::size_t idx : order) {
    const auto& e = edges[idx];
    out.vertices.push_back(detail::at(e, *e.t_lo.value));
  }
  auto smallest = std::min_element(out.vertices.begin(), out.vertices.end());
  std::rotate(out.vertices.begin(), smallest, out.vertices.end());
  return out;
}

/// Exact area of a bounded region with interior (counterclockwise shoelace).
inline QuadNum area(const ConvexRegion& r) {
  Boundary b = boundary(r);
  if (!b.bounded) throw std::invalid_argument("area: region is unbounded");
  QuadNum twice(0);
  for (std::size_t i = 0; i < b.vertices.size(); ++i)
    twice += cross(b.vertices[i], b.vertices[(i + 1) % b.vertices.size()]);
  return twice * QuadNum(Rational(1, 2));
}

inline bool is_bounded(const ConvexRegion& r) { return boundary(r).bounded; }

/// Average of the vertices; an interior point of a bounded region.
inline Point vertex_centroid(const ConvexRegion& r) {
  Boundary b = boundary(r);
  if (!b.bounded) throw std::invalid_argument("vertex_centroid: region is unbounded");
  QuadNum sx(0), sy(0);
  for (const auto& v : b.vertices) {
    sx += v.x;
    sy += v.y;
  }
  QuadNum n(static_cast<long>(b.vertices.size()));
  return Point(sx / n, sy / n);
}

/// Exact area centroid of a bounded region.
inline Point centroid(const ConvexRegion& r) {
  Boundary b = boundary(r);
  if (!b.bounded) throw std::invalid_argument("centroid: region is unbounded");
  QuadNum a2(0), cx(0), cy(0);
  const auto& v = b.vertices;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& p = v[i];
    const Point& q = v[(i + 1) % v.size()];
    QuadNum w = cross(p, q);
    a2 += w;
    cx += (p.x + q.x) * w;
    cy += (p.y + q.y) * w;
  }
  QuadNum six_a = QuadNum(3) * a2;
  return Point(cx / six_a, cy / six_a);
}

/// The open region whose closure is closure(r1) u closure(r2), when that union is convex.
inline std::optional<ConvexRegion> merge_adjacent(const ConvexRegion& r1, const ConvexRegion& r2) {
  ConvexRegion c1 = r1.closure(), c2 = r2.closure();
  std::vector<HalfPlane> hull;
  for (const auto& h : c1.constraints())
    if (contains(ConvexRegion({h}), c2)) hull.push_back(h);
  for (const auto& h : c2.constraints())
    if (contains(ConvexRegion({h}), c1)) hull.push_back(h);
  ConvexRegion candidate = reduce(ConvexRegion(std::move(hull)).interior());
  // candidate minus both pieces must have empty interior
  for (const auto& rest : subtract_open(candidate, r1))
    if (!subtract_open(rest, r2).empty()) return std::nullopt;
  return candidate;
}

}  // namespace pwrot
