#pragma once

// Self-similarity of induced maps: an orientation-preserving similarity h
// taking the inner domain onto the outer one, each inner piece onto an outer
// piece, and intertwining the isometries (h g h^-1 = outer isometry).

#include "pwrot/induction/first_return.hpp"

#include <map>
#include <optional>
#include <vector>

namespace pwrot {

struct SelfSimilarity {
  Similarity h;
  /// inner label -> outer label
  std::map<char, char> bijection;
  /// Outer labels hit by no inner piece.
  std::vector<char> vanished;
};

namespace detail {

struct Apex {
  Point vertex;
  Point ray_in, ray_out;
};

inline std::optional<Apex> apex(const ConvexRegion& r) {
  Boundary b = boundary(r);
  if (b.bounded || b.vertices.size() != 1 || b.rays.size() != 2) return std::nullopt;
  return Apex{b.vertices[0], b.rays[0], b.rays[1]};
}

inline bool same_direction(const Point& u, const Point& v) { return cross(u, v).is_zero() && dot(u, v).sign() > 0; }

/// Smallest positive distance parameter (in units of |ray|^2) from the apex to a
/// piece vertex on the ray.
inline std::optional<QuadNum> first_breakpoint(const PiecewiseIsometry& pw, const Point& v, const Point& ray) {
  std::optional<QuadNum> best;
  for (const auto& p : pw.pieces()) {
    for (const auto& w : boundary(p.region).vertices) {
      Point d = w - v;
      if (!cross(d, ray).is_zero()) continue;
      QuadNum t = dot(d, ray);
      if (t.sign() <= 0) continue;
      if (!best || t < *best) best = t;
    }
  }
  return best;
}

}  // namespace detail

/// Checks whether inner is similar to outer; the candidate similarity is
/// forced by matching apices, rays and the first piece breakpoint on a ray.
inline std::optional<SelfSimilarity> self_similarity(const PiecewiseIsometry& outer, const PiecewiseIsometry& inner) {
  if (outer.order() != inner.order() || outer.size() == 0 || inner.size() == 0) return std::nullopt;
  auto ao = detail::apex(outer.domain()), ai = detail::apex(inner.domain());
  if (!ao || !ai) return std::nullopt;
  const int q = outer.order();
  for (int k = 0; k < q; ++k) {
    Point in0 = rotate(q, k, ai->ray_in), in1 = rotate(q, k, ai->ray_out);
    if (!detail::same_direction(in0, ao->ray_in) || !detail::same_direction(in1, ao->ray_out)) continue;
    std::vector<QuadNum> scales;
    for (const auto& [ray_o, ray_i] : {std::pair{ao->ray_in, ai->ray_in}, std::pair{ao->ray_out, ai->ray_out}}) {
      auto bo = detail::first_breakpoint(outer, ao->vertex, ray_o);
      auto bi = detail::first_breakpoint(inner, ai->vertex, ray_i);
      if (bo && bi) {
        // breakpoint distances are scaled by |ray|; undo both scalings
        Point ri = rotate(q, k, ray_i);
        scales.push_back(*bo / (*bi * dot(ray_o, ri) / norm2(ray_i)));
      }
    }
    if (scales.empty()) scales.push_back(QuadNum(1));
    for (const auto& s : scales) {
      if (s.sign() <= 0) continue;
      Similarity h(s, q, k, ao->vertex - s * rotate(q, k, ai->vertex));
      SelfSimilarity out{h, {}, {}};
      bool ok = true;
      std::vector<bool> used(outer.size(), false);
      for (const auto& ip : inner.pieces()) {
        ConvexRegion img = map(ip.region, h);
        Isometry conj = h.conjugate(ip.map);
        bool found = false;
        for (std::size_t j = 0; j < outer.size(); ++j) {
          const auto& op = outer.pieces()[j];
          if (used[j] || !(op.map == conj) || !same_interior(img, op.region)) continue;
          used[j] = true;
          out.bijection[ip.label] = op.label;
          found = true;
          break;
        }
        if (!found) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      for (std::size_t j = 0; j < outer.size(); ++j)
        if (!used[j]) out.vanished.push_back(outer.pieces()[j].label);
      return out;
    }
  }
  return std::nullopt;
}

/// The substitution sending each outer label to the return word of the inner
/// piece the similarity maps onto it. Vanished labels are left out.
inline Substitution extract_substitution(const PiecewiseIsometry& inner, const SelfSimilarity& sim) {
  Substitution s;
  for (const auto& p : inner.pieces()) s.set(sim.bijection.at(p.label), p.word);
  return s;
}

}  // namespace pwrot
