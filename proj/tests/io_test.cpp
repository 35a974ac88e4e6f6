#include "pwrot/io/json.hpp"
#include "pwrot/io/svg.hpp"

#include <gtest/gtest.h>

using namespace pwrot;

namespace {

QuadNum Q(long n, long d = 1) { return QuadNum(Rational(n, d)); }

}  // namespace

TEST(Format, Fixed) {
  EXPECT_EQ(io::format_fixed(Q(1, 3), 4), "0.3333");
  EXPECT_EQ(io::format_fixed(Q(2, 3), 4), "0.6667");
  EXPECT_EQ(io::format_fixed(Q(-5, 2), 0), "-2");
  EXPECT_EQ(io::format_fixed(Q(5, 2), 0), "3");
  EXPECT_EQ(io::format_fixed(Q(-1, 200), 2), "0.00");
  EXPECT_EQ(io::format_fixed(Q(-1, 100), 2), "-0.01");
  EXPECT_EQ(io::format_fixed(QuadNum(Rational(0), Rational(1), 2), 6), "1.414214");
  EXPECT_EQ(io::format_fixed(Q(7), 2), "7.00");
}

TEST(Json, ExactNumbers) {
  EXPECT_EQ(io::encode(Q(-3, 4)).get<std::string>(), "-3/4");
  QuadNum r2(Rational(1, 2), Rational(-3), 2);
  EXPECT_EQ(io::decode_number(io::encode(r2)), r2);
  EXPECT_EQ(io::decode_number(io::json(5)), Q(5));
  EXPECT_EQ(io::decode_rational(io::json("7/3")), Rational(7, 3));
  EXPECT_THROW(io::decode_number(io::json(0.5)), std::invalid_argument);
}

TEST(Json, RegionRoundTrip) {
  ConvexRegion box = ConvexRegion::box(Q(0), Q(0), Q(2), QuadNum(Rational(0), Rational(1), 3));
  io::json j = io::encode(box);
  EXPECT_TRUE(j["bounded"].get<bool>());
  EXPECT_EQ(j["vertices"].size(), 4u);
  EXPECT_EQ(j["area"].get<std::string>(), area(box).to_string());
  EXPECT_TRUE(same_set(io::decode_region(j), box));
  ConvexRegion tri = io::decode_region(io::json::parse(R"([[0, 1, 0], [1, 0, 0], ["-1", -1, 1]])"));
  EXPECT_EQ(area(tri), Q(1, 2));
}

TEST(Json, Substitution) {
  Substitution s({{'A', "A"}, {'B', "AB"}});
  Alphabet a = indexed_alphabet(2, "A");
  io::json j = io::encode(s, &a, &a);
  EXPECT_EQ(j.dump(), R"({"A1":"A1","A2":"A1 A2"})");
}

TEST(Svg, FlipsY) {
  io::SvgCanvas c(Q(0), Q(0), Q(2), Q(1), 2);
  EXPECT_TRUE(c.region(ConvexRegion::box(Q(0), Q(0), Q(1), Q(1))));
  EXPECT_FALSE(c.region(ConvexRegion::box(Q(5), Q(5), Q(6), Q(6))));
  std::string s = c.str();
  EXPECT_NE(s.find("viewBox=\"0.00 -1.00 2.00 1.00\""), std::string::npos);
  EXPECT_NE(s.find("M 0.00 0.00 L 1.00 0.00 L 1.00 -1.00"), std::string::npos);
  EXPECT_THROW(io::fit_canvas({ConvexRegion({HalfPlane::upper()})}), std::invalid_argument);
  EXPECT_THROW(io::SvgCanvas(Q(1), Q(0), Q(0), Q(1)), std::invalid_argument);
}
