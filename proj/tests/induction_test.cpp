#include "pwrot/induction/language.hpp"
#include "pwrot/induction/renormalize.hpp"
#include "pwrot/presets.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace pwrot;

namespace {

QuadNum Q(long n, long d = 1) { return QuadNum(Rational(n, d)); }

FirstReturn induce(const Preset& p) {
  FirstReturnOptions fo;
  fo.names = p.names;
  return first_return(p.rotation().as_piecewise(), p.cone(), fo);
}

std::vector<std::string> spelled_words(const PiecewiseIsometry& pw, const Alphabet& parent) {
  std::vector<std::string> out;
  for (const auto& pc : pw.pieces()) out.push_back(parent.spell(pc.word));
  return out;
}

std::vector<std::string> codes(const PiecewiseIsometry& pw) {
  std::vector<std::string> out;
  for (const auto& pc : pw.pieces()) out.push_back(pc.code);
  return out;
}

ConvexRegion truncation(const Preset& p, long d) {
  QuadNum ax(-(p.sigma + Rational(1)));
  return ConvexRegion::box(ax - Q(d), Q(-1), ax + Q(d), Q(d));
}

std::vector<Point> samples(const ConvexRegion& r, std::size_t n, std::mt19937_64& rng) {
  Boundary b = boundary(r);
  std::uniform_int_distribution<long> wt(1, 50);
  std::vector<Point> out;
  while (out.size() < n) {
    std::vector<long> w;
    long total = 0;
    for (std::size_t i = 0; i < b.vertices.size(); ++i) total += w.emplace_back(wt(rng));
    Point p(Q(0), Q(0));
    for (std::size_t i = 0; i < b.vertices.size(); ++i) p = p + Q(w[i], total) * b.vertices[i];
    out.push_back(p);
  }
  return out;
}

}  // namespace

TEST(FirstReturn, QuarterSmallTable) {
  const Preset& p = preset("quarter-small");
  FirstReturn fr = induce(p);
  EXPECT_EQ(fr.map.alphabet().spell("ABCD"), "ABCD");
  EXPECT_EQ(codes(fr.map), (std::vector<std::string>{"1221", "12221", "12211", "122211"}));
  EXPECT_EQ(fr.unmerged, 0u);
}

TEST(FirstReturn, EighthOneTable) {
  FirstReturn fr = induce(preset("eighth-one"));
  std::vector<std::string> want;
  for (const char* w : {"12^41^3", "12^41^4", "12^41^5", "12^41^6"}) want.push_back(parse_word(w));
  EXPECT_EQ(codes(fr.map), want);
}

TEST(FirstReturn, Exhausted) {
  const Preset& p = preset("quarter-small");
  FirstReturnOptions fo;
  fo.max_steps = 2;
  EXPECT_THROW(first_return(p.rotation().as_piecewise(), p.cone(), fo), FirstReturnIncomplete);
}

TEST(FirstReturn, PartitionExactness) {
  for (const char* name : {"quarter-small", "quarter-large", "third-large", "eighth-one"}) {
    const Preset& p = preset(name);
    FirstReturn fr = induce(p);
    ConvexRegion box = truncation(p, 7);
    QuadNum total(0);
    std::vector<ConvexRegion> parts;
    for (const auto& pc : fr.map.pieces()) {
      ConvexRegion c = intersect(pc.region, box);
      if (has_interior(c)) total = total + area(c), parts.push_back(c);
    }
    EXPECT_EQ(total, area(intersect(p.cone(), box))) << name;
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (std::size_t j = i + 1; j < parts.size(); ++j) EXPECT_FALSE(has_interior(intersect(parts[i], parts[j])));
  }
}

TEST(FirstReturn, ReturnSoundnessAndIsometry) {
  std::mt19937_64 rng(41);
  for (const char* name : {"quarter-small", "quarter-one", "quarter-large", "third-large", "eighth-one"}) {
    const Preset& p = preset(name);
    PiecewiseRotation t = p.rotation();
    PiecewiseIsometry base = t.as_piecewise();
    ConvexRegion cone = p.cone();
    FirstReturn fr = induce(p);
    for (const auto& pc : fr.map.pieces()) {
      EXPECT_EQ(pc.map, base.along(pc.code)) << name;
      ConvexRegion part = intersect(pc.region, truncation(p, 9));
      ASSERT_TRUE(has_interior(part));
      for (const auto& z : samples(part, 10, rng)) {
        Point cur = z;
        for (std::size_t k = 0; k < pc.code.size(); ++k) {
          ASSERT_EQ(t.letter(cur), pc.code[k]);
          cur = t.step(cur);
          if (k + 1 < pc.code.size()) {
            EXPECT_FALSE(cone.contains(cur));
          }
        }
        EXPECT_TRUE(cone.contains(cur));
        EXPECT_EQ(cur, pc.map(z));
      }
    }
  }
}

TEST(Similarity, Identity) {
  FirstReturn fr = induce(preset("quarter-small"));
  auto s = self_similarity(fr.map, fr.map);
  ASSERT_TRUE(s);
  EXPECT_TRUE(s->h.is_identity());
  for (const auto& [a, b] : s->bijection) EXPECT_EQ(a, b);
  EXPECT_TRUE(s->vanished.empty());
}

TEST(Similarity, InducedOnA) {
  struct Case {
    const char* preset;
    std::vector<std::string> words;
    std::string substitution;
  };
  const Case cases[] = {
      {"quarter-small", {"A", "AB", "ABC", "AC"}, "A->A, B->AB, C->AC, D->ABC"},
      {"quarter-one", {"A", "AC"}, "A->A, C->AC"},
      {"eighth-one", {"A", "AB", "ABB", "ABBB"}, "A->A, B->AB, C->ABB, D->ABBB"},
  };
  for (const auto& cs : cases) {
    FirstReturn fr = induce(preset(cs.preset));
    FirstReturn in = induce_on_piece(fr.map, 'A');
    auto words = spelled_words(in.map, fr.map.alphabet());
    std::sort(words.begin(), words.end());
    EXPECT_EQ(words, cs.words) << cs.preset;
    auto s = self_similarity(fr.map, in.map);
    ASSERT_TRUE(s) << cs.preset;
    EXPECT_FALSE(s->h.is_identity());
    for (const auto& ip : in.map.pieces()) {
      const Piece& op = fr.map.piece(s->bijection.at(ip.label));
      EXPECT_EQ(s->h.conjugate(ip.map), op.map);
      EXPECT_TRUE(same_interior(map(ip.region, s->h), op.region));
    }
    const Alphabet& a = fr.map.alphabet();
    EXPECT_EQ(extract_substitution(in.map, *s).to_string(&a, &a), cs.substitution);
  }
}

TEST(Similarity, ParameterIndependence) {
  for (Rational s : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
    Preset p = preset("quarter-small");
    p.sigma = s;
    TowerOptions to;
    to.residual = false;
    Tower tw = renormalize(induce(p).map, to);
    ASSERT_TRUE(tw.self_similar());
    const Alphabet& a = tw.levels[tw.top].map.alphabet();
    EXPECT_EQ(tw.substitution.to_string(&a, &a), "A->A, B->AB, C->AC, D->ABC") << s.to_string();
  }
}

TEST(Tower, QuarterSmallResidual) {
  Tower tw = renormalize(induce(preset("quarter-small")).map);
  ASSERT_TRUE(tw.self_similar());
  EXPECT_EQ(tw.top, 0u);
  const Alphabet& a = tw.levels[0].map.alphabet();
  std::vector<std::string> rw;
  for (const auto& w : tw.residual_words(0)) rw.push_back(a.spell(w));
  EXPECT_EQ(rw, (std::vector<std::string>{"B", "C", "D"}));
  EXPECT_TRUE(tw.levels[0].residual.complete());
}

// The second level at sigma = 4, as computed; the widths of the two strips are 1 and 1.
TEST(Tower, QuarterLargeTwoLevels) {
  FirstReturn fr = induce(preset("quarter-large"));
  TowerOptions to;
  to.residual = false;
  Tower tw = renormalize(fr.map, to);
  ASSERT_TRUE(tw.self_similar());
  ASSERT_EQ(tw.top, 1u);
  const Alphabet& top = tw.levels[1].map.alphabet();
  EXPECT_EQ(tw.substitution.to_string(&top, &top), "A1->A1, A2->A1 A2, A3->A1 A3");
  EXPECT_EQ(spelled_words(tw.levels[1].map, fr.map.alphabet()), (std::vector<std::string>{"A", "ACB", "ACBB"}));
  for (char c : {'B', 'C'}) {
    Boundary b = boundary(intersect(tw.levels[1].map.piece(c).region, ConvexRegion::box(Q(-20), Q(-1), Q(0), Q(20))));
    QuadNum lo = b.vertices[0].x, hi = lo;
    for (const auto& v : b.vertices) lo = std::min(lo, v.x), hi = std::max(hi, v.x);
    EXPECT_EQ(hi - lo, Q(1));
  }
}

TEST(Language, QuarterSmallLength8) {
  const Preset& p = preset("quarter-small");
  FirstReturn fr = induce(p);
  Tower tw = renormalize(fr.map);
  Language sub = substitutive_language(tower_seeds(tw), 8);
  Language emp = empirical_language(p.rotation().as_piecewise(), cone_orbit_windows(fr), 8);
  EXPECT_TRUE(language_compare(sub, emp).equal());
  EXPECT_TRUE(emp.factor_closed());
  EXPECT_EQ(empirical_language(p.rotation().as_piecewise(), {ConvexRegion::plane()}, 1).size(), 2u);
}

TEST(Language, QuarterOneFixedSquare) {
  const Preset& p = preset("quarter-one");
  PiecewiseRotation t = p.rotation();
  Language emp = empirical_language(t.as_piecewise(), {ConvexRegion::box(Q(-3), Q(-3), Q(3), Q(3))}, 2);
  for (const char* w : {"1", "2", "11"}) EXPECT_TRUE(emp.contains(w)) << w;
}

// The literal seed set at sigma = 4 (eta o theta^n images plus (BC^k) families) produces
// words that no orbit realizes; the computed tower seeds do not.
TEST(Language, QuarterLargeLiteralSeedsOvergenerate) {
  const Preset& p = preset("quarter-large");
  FirstReturn fr = induce(p);
  Substitution eta({{'a', "A"}, {'b', "AC"}, {'c', "ACB"}});
  Substitution th({{'a', "a"}, {'b', "ab"}, {'c', "ac"}});
  Substitution code = fr.map.code_morphism();
  std::vector<SeedFamily> seeds{{"b", th, {code, eta}}, {"bc", th, {code, eta}}};
  for (const char* w : {"BC", "BBC", "BBBC"}) seeds.push_back({w, std::nullopt, {code}});
  Language lit = substitutive_language(seeds, 8);
  Language emp = empirical_language(p.rotation().as_piecewise(), cone_orbit_windows(fr), 8);
  LanguageDiff d = language_compare(lit, emp);
  EXPECT_TRUE(d.only_right.empty());
  EXPECT_EQ(lit.size(), 76u);
  EXPECT_EQ(emp.size(), 73u);

  Tower tw = renormalize(fr.map);
  EXPECT_TRUE(language_compare(substitutive_language(tower_seeds(tw), 8), emp).equal());
}
