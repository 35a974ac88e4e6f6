#include "pwrot/cells/cells.hpp"
#include "pwrot/induction/first_return.hpp"
#include "pwrot/presets.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace pwrot;

namespace {

QuadNum Q(long n, long d = 1) { return QuadNum(Rational(n, d)); }

/// Strict convex combinations of the vertices of a bounded region.
std::vector<Point> interior_samples(const ConvexRegion& r, std::size_t n, std::mt19937_64& rng) {
  Boundary b = boundary(r);
  std::uniform_int_distribution<long> wt(1, 100);
  std::vector<Point> out;
  while (out.size() < n) {
    Point p(Q(0), Q(0));
    long total = 0;
    std::vector<long> w;
    for (std::size_t i = 0; i < b.vertices.size(); ++i) total += w.emplace_back(wt(rng));
    for (std::size_t i = 0; i < b.vertices.size(); ++i) p = p + Q(w[i], total) * b.vertices[i];
    out.push_back(p);
  }
  return out;
}

std::vector<Word> all_words(std::size_t n) {
  std::vector<Word> out{""};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Word> next;
    for (const auto& w : out) next.push_back(w + '1'), next.push_back(w + '2');
    out = next;
  }
  return out;
}

}  // namespace

TEST(Cylinder, Examples) {
  PiecewiseRotation t(Rational(1, 4), Rational(1));
  EXPECT_TRUE(same_set(cylinder_cell(t, "1"), ConvexRegion({HalfPlane::upper()})));
  EXPECT_TRUE(same_set(cylinder_cell(t, repeat("1", 8)), ConvexRegion::box(Q(-2), Q(0), Q(0), Q(2))));
  EXPECT_THROW(cylinder_cell(t, ""), std::invalid_argument);
}

TEST(Cylinder, SampledAgainstCoding) {
  PiecewiseRotation t(Rational(1, 4), Rational(1, 2));
  ConvexRegion c = cylinder_cell(t, "12");
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> num(-4000, 4000);
  int inside = 0, outside = 0;
  while (inside < 100 || outside < 100) {
    Point p(Q(num(rng), 401), Q(num(rng), 397));
    std::optional<Word> w;
    try {
      w = t.code_orbit(p, 2);
    } catch (const DiscontinuityHit&) {
    }
    if (c.contains(p)) {
      ++inside;
      ASSERT_EQ(w, Word("12"));
    } else {
      ++outside;
      EXPECT_NE(w, Word("12"));
    }
  }
}

TEST(PeriodicCell, QuarterSquares) {
  PiecewiseRotation t(Rational(1, 4), Rational(1, 2));
  auto [z1, z2] = t.centers();
  auto c1 = periodic_cell(t, "1"), c2 = periodic_cell(t, "2");
  ASSERT_TRUE(c1 && c2);
  EXPECT_EQ(area(c1->region), Q(9, 4));
  EXPECT_EQ(area(c2->region), Q(1, 4));
  EXPECT_EQ(boundary(c1->region).vertices.size(), 4u);
  EXPECT_EQ(boundary(c2->region).vertices.size(), 4u);
  EXPECT_TRUE(c1->region.contains(z1));
  EXPECT_TRUE(c2->region.contains(z2));
  EXPECT_EQ(vertex_centroid(c1->region), z1);
  EXPECT_FALSE(periodic_cell(t, "12"));
}

TEST(PeriodicCell, WitnessSoundnessAndInvariance) {
  std::mt19937_64 rng(32);
  struct Case {
    Rational theta, sigma;
    const char* word;
  };
  const Case cases[] = {{Rational(1, 4), Rational(1, 2), "1"},       {Rational(1, 4), Rational(1, 2), "2"},
                        {Rational(1, 4), Rational(2), "12211"},      {Rational(1, 8), Rational(1, 3), "1^42^5"},
                        {Rational(1, 8), Rational(1, 3), "2^41^5"},  {Rational(1, 8), Rational(1, 3), "1^52^5"},
                        {Rational(1, 8), Rational(1, 3), "1^52^41^52^4"}, {Rational(1, 3), Rational(4), "1"},
                        {Rational(1, 8), Rational(1), "1"}};
  for (const auto& cs : cases) {
    PiecewiseRotation t(cs.theta, cs.sigma);
    Word w = parse_word(cs.word);
    auto c = periodic_cell(t, w);
    ASSERT_TRUE(c) << cs.word;
    for (const auto& p : interior_samples(c->region, 20, rng)) EXPECT_EQ(t.code_orbit(p, 3 * w.size()), repeat(w, 3));
    PiecewiseIsometry pw = t.as_piecewise();
    EXPECT_TRUE(same_set(map(c->region, pw.along(w)), c->region)) << cs.word;
    for (const auto& oc : cell_orbit(pw, *c)) EXPECT_EQ(area(oc.region), area(c->region));
  }
}

TEST(Cylinder, EqualLengthPartition) {
  for (Rational th : {Rational(1, 4), Rational(1, 8)}) {
    PiecewiseRotation t(th, Rational(1, 2));
    ConvexRegion window = ConvexRegion::box(Q(-3), Q(-2), Q(2), Q(3));
    std::vector<ConvexRegion> parts;
    for (const auto& w : all_words(5)) {
      ConvexRegion c = intersect(cylinder_cell(t, w), window);
      if (has_interior(c)) parts.push_back(c);
    }
    QuadNum total(0);
    for (const auto& p : parts) total = total + area(p);
    EXPECT_EQ(total, area(window));
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (std::size_t j = i + 1; j < parts.size(); ++j) EXPECT_FALSE(has_interior(intersect(parts[i], parts[j])));
  }
}

TEST(Tiling, ThirdLarge) {
  const Preset& p = preset("third-large");
  FirstReturnOptions fo;
  fo.names = p.names;
  PiecewiseRotation t = p.rotation();
  FirstReturn fr = first_return(t.as_piecewise(), p.cone(), fo);
  ConvexRegion region = intersect(p.cone(), ConvexRegion::box(Q(-11), Q(-1), Q(1), Q(6)));
  Tiling tl = tiling_enumerate(fr.map, region);
  EXPECT_TRUE(tl.exact());
  EXPECT_EQ(tl.defect(), Q(0));
  std::size_t triangles = 0;
  for (const auto& c : tl.cells) {
    auto b = boundary(c.region);
    ASSERT_TRUE(b.vertices.size() == 3 || b.vertices.size() == 6) << b.vertices.size();
    if (b.vertices.size() == 3) {
      ++triangles;
      Point e = b.vertices[1] - b.vertices[0];
      EXPECT_EQ(dot(e, e), Q(1));
    }
  }
  EXPECT_GT(triangles, 0u);
  std::mt19937_64 rng(34);
  for (std::size_t i = 0; i < tl.cells.size(); i += 7)
    for (const auto& z : interior_samples(tl.cells[i].region, 3, rng))
      EXPECT_EQ(periodic_word(fr.map, z, 2000), primitive_root(tl.cells[i].word));
  EXPECT_THROW(tiling_enumerate(fr.map, p.cone()), UnboundedRegion);
}

TEST(Tiling, ConePointsPeriodic) {
  const Preset& p = preset("third-large");
  FirstReturnOptions fo;
  fo.names = p.names;
  FirstReturn fr = first_return(p.rotation().as_piecewise(), p.cone(), fo);
  std::mt19937_64 rng(33);
  std::uniform_int_distribution<long> num(-3000, 3000);
  int n = 0;
  while (n < 100) {
    Point z(Q(num(rng), 307) - Q(5), Q(num(rng), 311));
    if (!p.cone().contains(z) || !fr.map.locate(z)) continue;
    ++n;
    EXPECT_TRUE(periodic_word(fr.map, z, 2000)) << z.to_string();
  }
}

TEST(Ring, TrivialSingleCell) {
  PiecewiseRotation t(Rational(1, 4), Rational(1, 2));
  auto r = ring_check(t, {"1"}, t.centers().first);
  EXPECT_EQ(r.polygons.size(), 1u);
  EXPECT_TRUE(r.closed);
}

TEST(Ring, QuarterOpen) {
  EXPECT_THROW(ring_check(PiecewiseRotation(Rational(1, 4), Rational(3)), {"12211"}), RingError);
  auto r = ring_check(PiecewiseRotation(Rational(1, 4), Rational(2)), {"12211"});
  EXPECT_EQ(r.polygons.size(), 5u);
  EXPECT_TRUE(r.adjacency.empty());
  EXPECT_FALSE(r.closed);
}

TEST(Ring, EighthAnnulus) {
  PiecewiseRotation t(Rational(1, 8), Rational(1, 3));
  std::vector<Word> ws{parse_word("1^42^5"), parse_word("2^41^5")};
  auto seg = ring_check(t, ws);
  EXPECT_EQ(seg.polygons.size(), 18u);
  EXPECT_TRUE(seg.adjacency.empty());
  EXPECT_FALSE(seg.closed);
  auto pt = ring_check(t, ws, std::nullopt, Contact::kPoint);
  EXPECT_TRUE(pt.closed);
  EXPECT_NE(pt.winding, 0);
  for (const auto& c : seg.polygons) EXPECT_EQ(boundary(c.region).vertices.size(), 8u);
}

TEST(Ring, EighthShapes) {
  PiecewiseRotation t(Rational(1, 8), Rational(1, 3));
  auto sq = periodic_cell(t, parse_word("1^52^5"));
  auto oc = periodic_cell(t, parse_word("1^52^41^52^4"));
  ASSERT_TRUE(sq && oc);
  EXPECT_EQ(boundary(sq->region).vertices.size(), 4u);
  EXPECT_EQ(boundary(oc->region).vertices.size(), 8u);
  EXPECT_THROW(ring_check(t, {"12"}), RingError);
}
