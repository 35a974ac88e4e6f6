#include "pwrot/geometry/region.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace pwrot;

namespace {

QuadNum Q(long n, long d = 1) { return QuadNum(Rational(n, d)); }
Point P(long x, long y) { return Point(Q(x), Q(y)); }
HalfPlane H(long a, long b, long c, bool strict = true) { return HalfPlane(Q(a), Q(b), Q(c), strict); }

ConvexRegion box(long x0, long y0, long x1, long y1, bool strict = false) {
  return ConvexRegion({H(1, 0, -x0, strict), H(-1, 0, x1, strict), H(0, 1, -y0, strict), H(0, -1, y1, strict)});
}

}  // namespace

TEST(Region, IntersectExamples) {
  ConvexRegion up({HalfPlane::upper()});
  EXPECT_TRUE(same_set(intersect(ConvexRegion::plane(), up), up));
  EXPECT_TRUE(is_empty(intersect(up, ConvexRegion({HalfPlane::lower()}))));
  ConvexRegion tri = intersect(ConvexRegion({H(1, 0, 0, false), H(0, 1, 0, false)}), ConvexRegion({H(-1, -1, 1, false)}));
  auto b = boundary(tri);
  ASSERT_TRUE(b.bounded);
  EXPECT_EQ(b.vertices, (std::vector<Point>{P(0, 0), P(1, 0), P(0, 1)}));
}

TEST(Region, Classify) {
  EXPECT_TRUE(classify(ConvexRegion({H(0, 1, 0), H(0, -1, 0)})).empty());
  ConvexRegion tri({H(0, 1, 0), H(1, 0, 0), H(-1, -1, 1)});
  auto c = classify(tri);
  ASSERT_TRUE(c.interior());
  EXPECT_TRUE(tri.contains(*c.witness));
  EXPECT_TRUE(c.witness->x.is_rational() && c.witness->y.is_rational());
  auto ray = classify(ConvexRegion({H(0, 1, 0, false), H(0, -1, 0, false), H(1, 0, 0, false)}));
  EXPECT_TRUE(ray.degenerate());
}

TEST(Region, MapExamples) {
  ConvexRegion up({HalfPlane::upper()});
  EXPECT_EQ(map(up, Isometry(4, 2, P(0, 0))), ConvexRegion({HalfPlane::lower()}));
  EXPECT_TRUE(same_set(map(box(0, 0, 1, 1), Isometry::translation(4, P(2, 0))), box(2, 0, 3, 1)));
  ConvexRegion quad({H(1, 0, 0, false), H(0, 1, 0, false)});
  EXPECT_TRUE(same_set(map(quad, Isometry(4, 1, P(0, 0))), ConvexRegion({H(0, 1, 0, false), H(-1, 0, 0, false)})));
}

TEST(Region, Vertices) {
  auto cone = boundary(ConvexRegion({H(0, 1, 0, false), H(1, -1, 0, false)}));
  EXPECT_FALSE(cone.bounded);
  EXPECT_EQ(cone.vertices, (std::vector<Point>{P(0, 0)}));
  ASSERT_EQ(cone.rays.size(), 2u);
  EXPECT_EQ(cone.rays[0], P(1, 1));
  EXPECT_EQ(cone.rays[1], P(1, 0));
  auto sq = boundary(box(-2, 0, 0, 2, true));
  EXPECT_EQ(sq.vertices, (std::vector<Point>{P(-2, 0), P(0, 0), P(0, 2), P(-2, 2)}));
  EXPECT_THROW(boundary(ConvexRegion({H(0, 1, 0), H(0, -1, 0)})), std::invalid_argument);
}

TEST(Region, ReduceDropsRedundant) {
  ConvexRegion r({H(1, 0, 0), H(1, 0, 1), H(0, 1, 0), H(1, 1, 5)});
  auto red = reduce(r);
  EXPECT_EQ(red.constraints().size(), 2u);
  EXPECT_TRUE(same_set(red, r));
}

TEST(Region, SubtractPartitions) {
  auto outer = box(0, 0, 4, 4, true);
  auto inner = box(1, 1, 2, 3, true);
  auto parts = subtract_open(outer, inner);
  QuadNum total = area(inner);
  for (const auto& p : parts) total += area(p);
  EXPECT_EQ(total, Q(16));
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j) EXPECT_FALSE(has_interior(intersect(parts[i], parts[j])));
}

TEST(Region, Merge) {
  auto m = merge_adjacent(box(0, 0, 1, 1, true), box(1, 0, 3, 1, true));
  ASSERT_TRUE(m.has_value());
  EXPECT_TRUE(same_set(*m, box(0, 0, 3, 1, true)));
  EXPECT_FALSE(merge_adjacent(box(0, 0, 1, 1, true), box(1, 0, 3, 2, true)).has_value());
}

TEST(Isometry, Algebra) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> c(-9, 9);
  for (int q : {4, 3, 8}) {
    int d = field_for_order(q);
    auto coord = [&] { return QuadNum(Rational(c(rng), 3), d == 1 ? Rational(0) : Rational(c(rng), 2), d); };
    for (int i = 0; i < 50; ++i) {
      Isometry f(q, c(rng), Point(coord(), coord()));
      Isometry g(q, c(rng), Point(coord(), coord()));
      Isometry h(q, c(rng), Point(coord(), coord()));
      EXPECT_EQ(f.compose(g).compose(h), f.compose(g.compose(h)));
      EXPECT_TRUE(f.compose(f.inverse()).is_identity());
      Point z(coord(), coord());
      EXPECT_EQ(f.compose(g)(z), f(g(z)));
      if (auto fp = f.fixed_point()) {
        EXPECT_EQ(f(*fp), *fp);
      }
    }
  }
}

TEST(RegionProperty, MapRoundTripAndArea) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> c(-6, 6);
  for (int q : {4, 3, 8}) {
    int d = field_for_order(q);
    for (int i = 0; i < 30; ++i) {
      long x0 = c(rng), y0 = c(rng);
      ConvexRegion r = intersect(box(x0, y0, x0 + 3, y0 + 2), ConvexRegion({H(1, 1, -(x0 + y0) - 1)}));
      Point t(QuadNum(Rational(c(rng)), Rational(d == 1 ? 0 : c(rng)), d), QuadNum(Rational(c(rng), 5)));
      Isometry g(q, c(rng), t);
      auto img = map(r, g);
      EXPECT_TRUE(same_set(map(img, g.inverse()), r));
      EXPECT_EQ(area(img), area(r));
    }
  }
}

TEST(RegionProperty, IntersectCommutativeIdempotent) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> c(-5, 5);
  for (int i = 0; i < 50; ++i) {
    ConvexRegion a({H(c(rng), 1, c(rng)), H(1, c(rng), c(rng))});
    ConvexRegion b({H(-1, c(rng), c(rng)), H(c(rng), -1, c(rng))});
    EXPECT_TRUE(same_set(intersect(a, b), intersect(b, a)));
    EXPECT_TRUE(same_set(intersect(a, a), a));
  }
}
