#pragma once

// The brute-force language oracle: words whose cylinder meets a window with
// nonzero area, by exact depth-L region splitting under T.

#include "pwrot/induction/first_return.hpp"

#include <cstddef>
#include <vector>

namespace pwrot {

struct EmpiricalOptions {
  std::size_t max_regions = 2000000;
};

class WindowTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Words of length 1..L with a cylinder meeting one of the windows in an open set.
inline Language empirical_language(const PiecewiseIsometry& pw, const std::vector<ConvexRegion>& windows,
                                   std::size_t L, const EmpiricalOptions& opt = {}) {
  Language lang(L);
  struct Item {
    ConvexRegion image;
    Word word;
  };
  std::vector<Item> frontier;
  for (const auto& w : windows)
    if (has_interior(w)) frontier.push_back({reduce(w.interior()), ""});
  for (std::size_t depth = 0; depth < L && !frontier.empty(); ++depth) {
    std::vector<Item> next;
    for (const auto& it : frontier)
      for (const auto& p : pw.pieces()) {
        ConvexRegion sub = intersect(it.image, p.region);
        if (!has_interior(sub)) continue;
        Word w = it.word + p.label;
        lang.insert(w);
        if (depth + 1 < L) next.push_back({map(sub, p.map), std::move(w)});
      }
    if (next.size() > opt.max_regions) throw WindowTooLarge("empirical_language: region budget exceeded");
    frontier = std::move(next);
  }
  return lang;
}

/// The cone with its orbit up to the first return: a T-invariant window set.
inline std::vector<ConvexRegion> cone_orbit_windows(const FirstReturn& fr) {
  std::vector<ConvexRegion> w{fr.map.domain()};
  w.insert(w.end(), fr.excursion.begin(), fr.excursion.end());
  return w;
}

}  // namespace pwrot
