#pragma once

// Piecewise isometries on a convex domain: finitely many open convex pieces,
// each carrying an isometry, a letter, the word over the parent alphabet it
// stands for and its coding over {1, 2}.

#include "pwrot/geometry/region.hpp"
#include "pwrot/words/substitution.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pwrot {

/// A point on the boundary of the pieces (the map is undefined there).
class DiscontinuityHit : public std::domain_error {
 public:
  DiscontinuityHit(std::size_t index, Point p)
      : std::domain_error("orbit hits the discontinuity set at iterate " + std::to_string(index) + ": " +
                          p.to_string()),
        index_(index),
        point_(std::move(p)) {}
  std::size_t index() const { return index_; }
  const Point& point() const { return point_; }

 private:
  std::size_t index_;
  Point point_;
};

struct Piece {
  char label;
  ConvexRegion region;
  Isometry map;
  /// Return word over the parent alphabet.
  Word word;
  /// Return word over {1, 2}.
  Word code;
};

class PiecewiseIsometry {
 public:
  PiecewiseIsometry() = default;
  PiecewiseIsometry(int order, ConvexRegion domain, std::vector<Piece> pieces, Alphabet alphabet)
      : order_(order), domain_(std::move(domain)), pieces_(std::move(pieces)), alphabet_(std::move(alphabet)) {}

  int order() const { return order_; }
  const ConvexRegion& domain() const { return domain_; }
  const std::vector<Piece>& pieces() const { return pieces_; }
  std::vector<Piece>& mutable_pieces() { return pieces_; }
  const Alphabet& alphabet() const { return alphabet_; }
  void set_alphabet(Alphabet a) { alphabet_ = std::move(a); }
  std::size_t size() const { return pieces_.size(); }

  const Piece& piece(char label) const {
    for (const auto& p : pieces_)
      if (p.label == label) return p;
    throw std::invalid_argument(std::string("no piece labelled ") + label);
  }
  bool has_piece(char label) const {
    for (const auto& p : pieces_)
      if (p.label == label) return true;
    return false;
  }

  /// The piece whose open region contains z, or nullptr on a boundary or outside.
  const Piece* locate(const Point& z) const {
    for (const auto& p : pieces_)
      if (p.region.contains(z)) return &p;
    return nullptr;
  }

  Point apply(const Point& z, std::size_t index = 0) const {
    const Piece* p = locate(z);
    if (!p) throw DiscontinuityHit(index, z);
    return p->map(z);
  }

  /// Letters of the first n iterates.
  Word code(Point z, std::size_t n) const {
    Word w;
    for (std::size_t i = 0; i < n; ++i) {
      const Piece* p = locate(z);
      if (!p) throw DiscontinuityHit(i, z);
      w += p->label;
      z = p->map(z);
    }
    return w;
  }

  /// Letter-to-word morphism towards the parent alphabet.
  Substitution word_morphism() const {
    Substitution s;
    for (const auto& p : pieces_) s.set(p.label, p.word);
    return s;
  }
  /// Letter-to-word morphism towards {1, 2}.
  Substitution code_morphism() const {
    Substitution s;
    for (const auto& p : pieces_) s.set(p.label, p.code);
    return s;
  }

  /// Composed isometry along w (first letter applied first).
  Isometry along(const Word& w) const {
    Isometry g = Isometry::identity(order_);
    for (char c : w) g = piece(c).map.compose(g);
    return g;
  }

 private:
  int order_ = 1;
  ConvexRegion domain_;
  std::vector<Piece> pieces_;
  Alphabet alphabet_;
};

}  // namespace pwrot
