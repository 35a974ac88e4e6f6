#pragma once

// Built-in case studies: parameters, the induction cone and the names given
// to the pieces of the first return map (keyed by return word over {1, 2}).

#include "pwrot/dynamics/rotation.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pwrot {

/// Sector with apex (-(sigma + 1), 0) bounded by the real axis and by the edge
/// of the 1^omega cell leaving the apex upwards.
inline ConvexRegion induction_cone(int q, const Rational& sigma) {
  Point v(QuadNum(-(sigma + Rational(1))), QuadNum(0));
  Point u = -rotate(q, -1, Point(QuadNum(1), QuadNum(0)));
  // cross(u, z - v) > 0
  HalfPlane side(-u.y, u.x, u.y * v.x - u.x * v.y);
  return ConvexRegion({HalfPlane::upper(), side});
}

enum class Method {
  /// Self-similar renormalization tower.
  kRenormalize,
  /// Every cone point periodic: enumerate the periodic tiling.
  kTiling,
};

struct Preset {
  std::string name;
  Rational theta, sigma;
  Method method = Method::kRenormalize;
  /// return word over {1, 2} -> piece name
  std::map<Word, std::string> names;
  /// Reference data checked by verify: first-level return words in table
  /// order, second-level return words, top substitution (Substitution::to_string).
  std::vector<std::string> table;
  std::vector<std::string> second_level;
  std::string substitution;

  PiecewiseRotation rotation() const { return PiecewiseRotation(theta, sigma); }
  ConvexRegion cone() const { return induction_cone(rotation().order(), sigma); }
};

inline const std::vector<Preset>& presets() {
  static const std::vector<Preset> all = {
      {"quarter-small", Rational(1, 4), Rational(1, 2), Method::kRenormalize,
       {{"1221", "A"}, {"12221", "B"}, {"12211", "C"}, {"122211", "D"}},
       {"1221", "12^31", "12211", "12^31^2"}, {}, "A->A, B->AB, C->AC, D->ABC"},
      {"quarter-one", Rational(1, 4), Rational(1), Method::kRenormalize, {{"1221", "A"}, {"12211", "C"}},
       {"1221", "12211"}, {}, "A->A, C->AC"},
      {"quarter-large", Rational(1, 4), Rational(4), Method::kRenormalize,
       {{"1221", "A"}, {"1211", "B"}, {"12211", "C"}}, {"1221", "1211", "12211"}, {"A", "AC", "ACB"},
       "A1->A1, A2->A1 A2, A3->A1 A3"},
      {"third-large", Rational(1, 3), Rational(4), Method::kTiling, {{"1221", "A"}, {"121", "B"}, {"122", "C"}},
       {"1221", "121", "122"}, {}, ""},
      {"eighth-one", Rational(1, 8), Rational(1), Method::kRenormalize,
       {{parse_word("12^41^3"), "A"}, {parse_word("12^41^4"), "B"}, {parse_word("12^41^5"), "C"},
        {parse_word("12^41^6"), "D"}},
       {"12^41^3", "12^41^4", "12^41^5", "12^41^6"}, {}, "A->A, B->AB, C->ABB, D->ABBB"},
      {"eighth-three", Rational(1, 8), Rational(3), Method::kRenormalize,
       {{parse_word("12^41^3"), "A"}, {parse_word("12^31^4"), "B"}, {parse_word("12^41^4"), "C"},
        {parse_word("12^31^5"), "D"}, {parse_word("12^21^5"), "E"}, {parse_word("121^6"), "F"},
        {parse_word("12^21^6"), "G"}, {parse_word("12^31^6"), "H"}},
       {"12^41^3", "12^31^4", "12^41^4", "12^31^5", "12^21^5", "121^6", "12^21^6", "12^31^6"},
       {"A", "ACB", "ACBCB", "ACBCBCB"}, "A1->A1, A2->A1 A2, A3->A1 A2 A2, A4->A1 A2 A2 A2"},
      {"eighth-third", Rational(1, 8), Rational(1, 3), Method::kRenormalize,
       {{parse_word("12^41^3"), "A1"}, {parse_word("12^51^3"), "A2"}, {parse_word("12^41^4"), "A3"},
        {parse_word("12^51^4"), "A4"}, {parse_word("12^41^5"), "A5"}, {parse_word("12^51^5"), "A6"},
        {parse_word("12^61^5"), "A7"}, {parse_word("12^71^6"), "A8"}, {parse_word("12^61^6"), "A9"}},
       {"12^41^4", "12^51^4", "12^41^5", "12^51^5", "12^41^6", "12^51^6", "12^61^6", "12^71^7", "12^61^7"}, {}, ""},
  };
  return all;
}

inline const Preset& preset(std::string_view name) {
  for (const auto& p : presets())
    if (p.name == name) return p;
  throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
}

/// The built-in preset for (theta, sigma), if any.
inline std::optional<Preset> find_preset(const Rational& theta, const Rational& sigma) {
  for (const auto& p : presets())
    if (p.theta == theta && p.sigma == sigma) return p;
  return std::nullopt;
}

}  // namespace pwrot
