#pragma once

// First-return maps on convex windows by exact breadth-first region splitting.

#include "pwrot/dynamics/rotation.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pwrot {

class FirstReturnIncomplete : public std::runtime_error {
 public:
  FirstReturnIncomplete(std::size_t steps, std::vector<ConvexRegion> residual)
      : std::runtime_error("first_return: " + std::to_string(residual.size()) + " regions still in flight after " +
                           std::to_string(steps) + " steps"),
        residual_(std::move(residual)) {}
  const std::vector<ConvexRegion>& residual() const { return residual_; }

 private:
  std::vector<ConvexRegion> residual_;
};

enum class LabelOrder {
  /// Unbounded pieces first, then by decreasing area; ties by shortlex return word.
  kSize,
  /// Shortlex order of the return words.
  kShortlex,
};

struct FirstReturnOptions {
  std::size_t max_steps = 10000;
  /// Abort when the frontier grows beyond this many regions.
  std::size_t max_frontier = 200000;
  LabelOrder order = LabelOrder::kSize;
  /// Fixed names: return word over the parent alphabet -> display name.
  std::map<Word, std::string> names;
  /// Prefix for generated names; empty to use bare letters.
  std::string stem;
};

struct FirstReturn {
  PiecewiseIsometry map;
  /// Open regions visited outside the window before returning (the window's orbit).
  std::vector<ConvexRegion> excursion;
  /// Number of return words whose pieces could not be merged into one convex region.
  std::size_t unmerged = 0;
  std::size_t steps = 0;
};

namespace detail {

struct Flight {
  ConvexRegion image;
  Isometry g;
  Word word, code;
};

struct Finished {
  ConvexRegion region;
  Isometry g;
  Word word, code;
};

inline std::vector<Finished> merge_finished(std::vector<Finished> in, std::size_t& unmerged) {
  std::map<Word, std::vector<Finished>> groups;
  for (auto& f : in) groups[f.word].push_back(std::move(f));
  std::vector<Finished> out;
  for (auto& [w, group] : groups) {
    bool changed = true;
    while (changed && group.size() > 1) {
      changed = false;
      for (std::size_t i = 0; i < group.size() && !changed; ++i)
        for (std::size_t j = i + 1; j < group.size() && !changed; ++j)
          if (auto m = merge_adjacent(group[i].region, group[j].region)) {
            group[i].region = *m;
            group.erase(group.begin() + static_cast<std::ptrdiff_t>(j));
            changed = true;
          }
    }
    if (group.size() > 1) ++unmerged;
    for (auto& f : group) out.push_back(std::move(f));
  }
  return out;
}

inline void order_pieces(std::vector<Finished>& ps, LabelOrder order) {
  if (order == LabelOrder::kShortlex) {
    std::stable_sort(ps.begin(), ps.end(), [](const Finished& a, const Finished& b) { return shortlex_less(a.word, b.word); });
    return;
  }
  struct Key {
    bool bounded;
    QuadNum area;
  };
  std::vector<std::pair<Key, Finished>> keyed;
  for (auto& p : ps) {
    bool bounded = is_bounded(p.region);
    keyed.push_back({{bounded, bounded ? area(p.region) : QuadNum(0)}, std::move(p)});
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
    if (x.first.bounded != y.first.bounded) return !x.first.bounded;
    if (x.first.bounded && x.first.area != y.first.area) return x.first.area > y.first.area;
    return shortlex_less(x.second.word, y.second.word);
  });
  ps.clear();
  for (auto& [k, p] : keyed) ps.push_back(std::move(p));
}

}  // namespace detail

/// First return of pw to the convex window.
inline FirstReturn first_return(const PiecewiseIsometry& pw, const ConvexRegion& window,
                                const FirstReturnOptions& opt = {}) {
  ConvexRegion win = reduce(window.interior());
  if (!has_interior(win)) throw std::invalid_argument("first_return: window has empty interior");
  FirstReturn out;
  std::vector<detail::Flight> frontier{{win, Isometry::identity(pw.order()), "", ""}};
  std::vector<detail::Finished> done;
  std::size_t step = 0;
  while (!frontier.empty()) {
    if (step >= opt.max_steps || frontier.size() > opt.max_frontier) {
      std::vector<ConvexRegion> residual;
      for (auto& f : frontier) residual.push_back(std::move(f.image));
      throw FirstReturnIncomplete(step, std::move(residual));
    }
    ++step;
    std::vector<detail::Flight> next;
    for (const auto& f : frontier) {
      for (const auto& piece : pw.pieces()) {
        ConvexRegion sub = intersect(f.image, piece.region);
        if (!has_interior(sub)) continue;
        ConvexRegion img = map(sub, piece.map);
        Isometry g = piece.map.compose(f.g);
        Word word = f.word + piece.label, code = f.code + piece.code;
        ConvexRegion inside = intersect(img, win);
        if (has_interior(inside)) done.push_back({map(inside, g.inverse()), g, word, code});
        for (auto& part : subtract_open(img, win)) {
          out.excursion.push_back(part);
          next.push_back({std::move(part), g, word, code});
        }
      }
    }
    frontier = std::move(next);
  }
  out.steps = step;
  done = detail::merge_finished(std::move(done), out.unmerged);
  detail::order_pieces(done, opt.order);

  // letters follow the piece order; fixed names override generated ones
  std::vector<Piece> pieces;
  Alphabet alpha;
  std::map<Word, char> letter_of;
  std::vector<Word> words_in_order;
  for (const auto& f : done)
    if (std::find(words_in_order.begin(), words_in_order.end(), f.word) == words_in_order.end())
      words_in_order.push_back(f.word);
  if (!opt.names.empty()) {
    std::vector<std::pair<std::string, Word>> named, unnamed;
    for (const auto& w : words_in_order) {
      auto it = opt.names.find(w);
      (it != opt.names.end() ? named : unnamed).push_back({it != opt.names.end() ? it->second : "", w});
    }
    std::stable_sort(named.begin(), named.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    words_in_order.clear();
    for (auto& n : named) words_in_order.push_back(n.second);
    for (auto& n : unnamed) words_in_order.push_back(n.second);
  }
  if (words_in_order.size() > 26) throw std::runtime_error("first_return: more than 26 return words");
  // a one-letter name is also the letter
  std::string taken;
  for (const auto& w : words_in_order)
    if (auto it = opt.names.find(w); it != opt.names.end() && it->second.size() == 1) taken += it->second;
  char spare = 'A';
  for (std::size_t i = 0; i < words_in_order.size(); ++i) {
    auto it = opt.names.find(words_in_order[i]);
    char c;
    if (it != opt.names.end() && it->second.size() == 1) {
      c = it->second[0];
    } else {
      while (taken.find(spare) != std::string::npos) ++spare;
      c = spare++;
    }
    letter_of[words_in_order[i]] = c;
    std::string name = it != opt.names.end() ? it->second
                                             : (opt.stem.empty() ? std::string(1, c) : opt.stem + std::to_string(i + 1));
    alpha.add(c, name);
  }
  for (auto& f : done) pieces.push_back({letter_of.at(f.word), std::move(f.region), f.g, f.word, f.code});
  std::stable_sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) { return a.label < b.label; });
  out.map = PiecewiseIsometry(pw.order(), win, std::move(pieces), std::move(alpha));
  return out;
}

/// First return of pw to the piece with the given label; words over pw's alphabet.
inline FirstReturn induce_on_piece(const PiecewiseIsometry& pw, char label, FirstReturnOptions opt = {}) {
  opt.order = LabelOrder::kShortlex;
  if (opt.stem.empty()) opt.stem = pw.alphabet().name(label);
  return first_return(pw, pw.piece(label).region, opt);
}

}  // namespace pwrot
