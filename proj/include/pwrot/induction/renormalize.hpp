#pragma once

// The renormalization tower: the first return map on the cone, then repeated
// induction on piece A until a level is similar to its parent. Points of a
// level never reaching A are covered by periodic cells; their words seed the
// substitutive description of the language.

#include "pwrot/cells/cells.hpp"
#include "pwrot/induction/similarity.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace pwrot {

struct TowerLevel {
  PiecewiseIsometry map;
  /// Orbit of piece A under this level's map, until its first return to A.
  std::vector<ConvexRegion> orbit_of_a;
  /// Periodic cells of this level covering the points that never enter A.
  PeriodicCover residual;
};

struct Tower {
  std::vector<TowerLevel> levels;
  /// levels[top + 1] (not stored) is similar to levels[top].
  std::size_t top = 0;
  std::optional<SelfSimilarity> similarity;
  /// On the alphabet of levels[top].
  Substitution substitution;
  bool self_similar() const { return similarity.has_value(); }
  /// Primitive words of the residual periodic cells of a level, one per cyclic class.
  std::vector<Word> residual_words(std::size_t level) const {
    std::vector<Word> out;
    for (const auto& c : levels.at(level).residual.cells) {
      Word r = least_rotation(primitive_root(c.word));
      if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
    }
    std::sort(out.begin(), out.end(), shortlex_less);
    return out;
  }
};

struct TowerOptions {
  std::size_t max_levels = 4;
  FirstReturnOptions induce;
  /// Cover the points of each level that never enter A (needed for tower_seeds).
  bool residual = true;
  CoverOptions cover{2000, 24, 8, 16};
};

class NoSelfSimilarity : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Builds the tower above `base` (the first return map on the cone).
inline Tower renormalize(const PiecewiseIsometry& base, const TowerOptions& opt = {}) {
  Tower tw;
  PiecewiseIsometry cur = base;
  for (std::size_t level = 0; level < opt.max_levels; ++level) {
    FirstReturn fr = induce_on_piece(cur, 'A', opt.induce);
    TowerLevel tl{cur, {}, {}};
    tl.orbit_of_a.push_back(cur.piece('A').region);
    for (auto& r : fr.excursion) tl.orbit_of_a.push_back(std::move(r));
    if (opt.residual) tl.residual = periodic_cover(cur, complement_in(cur.domain(), tl.orbit_of_a), opt.cover);
    auto sim = self_similarity(cur, fr.map);
    tw.levels.push_back(std::move(tl));
    if (sim) {
      tw.top = level;
      tw.substitution = extract_substitution(fr.map, *sim);
      tw.similarity = std::move(sim);
      return tw;
    }
    cur = std::move(fr.map);
  }
  tw.top = tw.levels.size() - 1;
  return tw;
}

/// Seed families of the tower's language over {1, 2}: residual words of every
/// level recoded to {1, 2}, iterated by the substitution at the top level.
inline std::vector<SeedFamily> tower_seeds(const Tower& tw) {
  if (!tw.self_similar()) throw NoSelfSimilarity("tower_seeds: no self-similar level");
  std::vector<SeedFamily> out;
  for (std::size_t j = 0; j <= tw.top; ++j) {
    Substitution code = tw.levels[j].map.code_morphism();
    for (const auto& w : tw.residual_words(j)) {
      SeedFamily f{w, std::nullopt, {code}};
      if (j == tw.top) f.power = tw.substitution;
      out.push_back(std::move(f));
    }
  }
  return out;
}

}  // namespace pwrot
