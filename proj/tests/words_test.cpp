#include "pwrot/words/substitution.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace pwrot;

namespace {

const Substitution kQuarter({{'A', "A"}, {'B', "AB"}, {'C', "AC"}, {'D', "ABC"}});
const Substitution kQuarterCode({{'A', "1221"}, {'B', "12221"}, {'C', "12211"}, {'D', "122211"}});

Word random_word(std::mt19937_64& rng, const std::string& letters, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len), pick(0, letters.size() - 1);
  Word w;
  for (std::size_t i = len(rng); i > 0; --i) w += letters[pick(rng)];
  return w;
}

}  // namespace

TEST(Word, ParseAndCompact) {
  EXPECT_EQ(parse_word("12^31"), "12221");
  EXPECT_EQ(parse_word("12^31^2"), "122211");
  EXPECT_EQ(parse_word("(12)^3"), "121212");
  EXPECT_EQ(parse_word("1^{10}"), "1111111111");
  EXPECT_EQ(compact("122211"), "12^31^2");
  EXPECT_EQ(parse_word(compact("1222222221")), "1222222221");
}

TEST(Word, Roots) {
  EXPECT_EQ(primitive_root("121212"), "12");
  EXPECT_EQ(primitive_root("1211"), "1211");
  EXPECT_EQ(least_rotation("2112"), "1122");
}

TEST(Alphabet, Spell) {
  Alphabet a = indexed_alphabet(3, "A");
  EXPECT_EQ(a.spell("ABC"), "A1 A2 A3");
  EXPECT_EQ(a.letter("A2"), 'B');
  EXPECT_FALSE(a.letter("A4"));
  EXPECT_EQ(letter_alphabet(2).spell("ABBA"), "ABBA");
}

TEST(Substitution, Fibonacci) {
  Substitution fib({{'1', "12"}, {'2', "1"}});
  EXPECT_EQ(fib.apply("1", 1), "12");
  EXPECT_EQ(fib.apply("1", 2), "121");
  EXPECT_EQ(fib.apply("1", 3), "12112");
  EXPECT_EQ(fib.apply("2", 0), "2");
}

TEST(Substitution, QuarterTable) {
  EXPECT_EQ(kQuarter.apply("D", 1), "ABC");
  EXPECT_EQ(kQuarter.apply("D", 2), "AABAC");
  EXPECT_THROW(kQuarter("E"), std::invalid_argument);
}

TEST(Substitution, Recode) {
  EXPECT_EQ(recode("AB", kQuarterCode), "122112221");
  Substitution third({{'A', "1221"}, {'B', "121"}, {'C', "122"}});
  EXPECT_EQ(recode("BA", third), "1211221");
  EXPECT_EQ(recode("", third), "");
}

TEST(Substitution, Compose) {
  Substitution fib({{'1', "12"}, {'2', "1"}});
  EXPECT_EQ(fib.compose(fib)("1"), fib.apply("1", 2));
  EXPECT_EQ(kQuarterCode.compose(kQuarter)("D"), "12211222112211");
}

TEST(Substitution, MorphismProperty) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    Word u = random_word(rng, "ABCD", 12), v = random_word(rng, "ABCD", 12);
    EXPECT_EQ(kQuarter(u + v), kQuarter(u) + kQuarter(v));
    EXPECT_EQ(kQuarterCode(u + v), kQuarterCode(u) + kQuarterCode(v));
  }
}

TEST(Language, FactorsAndPeriodic) {
  Language l(3);
  l.add_periodic("AB");
  EXPECT_TRUE(l.contains("ABA"));
  EXPECT_TRUE(l.contains("BAB"));
  EXPECT_FALSE(l.contains("AA"));
  EXPECT_EQ(l.complexity(), (std::vector<std::size_t>{0, 2, 2, 2}));
  EXPECT_TRUE(l.factor_closed());
}

TEST(Language, FactorClosureRandom) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 50; ++i) {
    Language l(6);
    for (int j = 0; j < 5; ++j) l.add_factors(random_word(rng, "12", 20));
    l.add_periodic(random_word(rng, "12", 5) + "1");
    EXPECT_TRUE(l.factor_closed());
  }
}

TEST(Language, Substitutive) {
  Language l = substitutive_language({{"B", kQuarter, {}}}, 3);
  EXPECT_TRUE(l.contains("ABA"));
  EXPECT_TRUE(l.contains("BAB"));
  EXPECT_TRUE(l.contains("AAA"));
  EXPECT_FALSE(l.contains("C"));
  EXPECT_TRUE(l.factor_closed());

  Substitution one({{'A', "A"}, {'C', "AC"}});
  Language c = substitutive_language({{"C", one, {}}}, 2);
  for (const char* w : {"C", "CC", "AC", "CA", "AA"}) EXPECT_TRUE(c.contains(w)) << w;

  EXPECT_EQ(substitutive_language({}, 5).size(), 0u);
}

TEST(Language, ChainOrder) {
  Substitution f({{'x', "AB"}});
  Language l = substitutive_language({{"x", std::nullopt, {kQuarterCode, f}}}, 9);
  EXPECT_TRUE(l.contains("122112221"));
  EXPECT_TRUE(l.factor_closed());
}

TEST(Language, NonStabilizing) {
  Substitution grow({{'A', "AB"}, {'B', "BBA"}});
  EXPECT_THROW(substitutive_language({{"A", grow, {}}}, 40, 3, 100), NonStabilizing);
}

TEST(Language, Compare) {
  Language a(1), b(1);
  a.insert("1");
  a.insert("2");
  b.insert("1");
  EXPECT_TRUE(language_compare(a, a).equal());
  auto d = language_compare(a, b);
  EXPECT_FALSE(d.equal());
  EXPECT_EQ(d.only_left, (std::vector<Word>{"2"}));
  EXPECT_TRUE(d.only_right.empty());
}

TEST(Language, PeriodicityTransport) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 50; ++i) {
    Word w = random_word(rng, "12", 6) + "2";
    Language l(8);
    l.add_periodic(repeat(w, 3));
    Word r = primitive_root(repeat(w, 3));
    EXPECT_EQ(repeat(r, repeat(w, 3).size() / r.size()), repeat(w, 3));
    for (std::size_t k = 0; k < r.size(); ++k) {
      Word cyc = r.substr(k) + r.substr(0, k);
      EXPECT_TRUE(l.contains(cyc.substr(0, std::min<std::size_t>(8, cyc.size()))));
    }
  }
}
