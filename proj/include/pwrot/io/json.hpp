#pragma once

// JSON encodings. Every number is an exact string ("p/q", "a + b*sqrt(d)").

#include "pwrot/cells/cells.hpp"
#include "pwrot/induction/renormalize.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace pwrot::io {

using json = nlohmann::ordered_json;

inline json encode(const Rational& r) { return r.to_string(); }
inline json encode(const QuadNum& x) { return x.to_string(); }
inline json encode(const Point& p) { return json::array({p.x.to_string(), p.y.to_string()}); }

inline json encode(const HalfPlane& h) {
  return {{"a", h.a().to_string()}, {"b", h.b().to_string()}, {"c", h.c().to_string()}, {"strict", h.strict()}};
}

inline json encode(const ConvexRegion& r) {
  json j;
  json cs = json::array();
  for (const auto& h : r.constraints()) cs.push_back(encode(h));
  j["constraints"] = cs;
  if (!has_interior(r)) {
    j["empty"] = true;
    return j;
  }
  Boundary b = boundary(r);
  json vs = json::array(), rs = json::array();
  for (const auto& v : b.vertices) vs.push_back(encode(v));
  for (const auto& v : b.rays) rs.push_back(encode(v));
  j["vertices"] = vs;
  j["rays"] = rs;
  j["bounded"] = b.bounded;
  if (b.bounded) j["area"] = area(r).to_string();
  return j;
}

inline json encode(const Isometry& g) { return {{"order", g.order()}, {"k", g.k()}, {"t", encode(g.t())}}; }

inline json encode(const Similarity& h) {
  return {{"scale", h.scale().to_string()}, {"order", h.order()}, {"k", h.k()}, {"t", encode(h.t())}};
}

/// Images keyed by letter name, spelled in the target alphabet.
inline json encode(const Substitution& s, const Alphabet* from = nullptr, const Alphabet* to = nullptr) {
  json j = json::object();
  for (const auto& [c, w] : s.images()) j[from ? from->name(c) : std::string(1, c)] = to ? to->spell(w) : w;
  return j;
}

inline json encode(const Language& l, bool with_words = false) {
  json j{{"max_length", l.max_length()}, {"size", l.size()}, {"complexity", l.complexity()}};
  if (with_words) {
    std::vector<Word> ws(l.words().begin(), l.words().end());
    std::sort(ws.begin(), ws.end(), shortlex_less);
    j["words"] = ws;
  }
  return j;
}

inline json encode(const LanguageDiff& d) {
  return {{"equal", d.equal()}, {"only_left", d.only_left}, {"only_right", d.only_right}};
}

inline json encode(const PiecewiseIsometry& pw, const Alphabet* parent = nullptr) {
  json pieces = json::array();
  for (const auto& p : pw.pieces()) {
    json e{{"label", pw.alphabet().name(p.label)}, {"code", compact(p.code)}};
    if (parent) e["word"] = parent->spell(p.word);
    e["map"] = encode(p.map);
    e["region"] = encode(p.region);
    pieces.push_back(e);
  }
  return {{"order", pw.order()}, {"domain", encode(pw.domain())}, {"pieces", pieces}};
}

inline json encode(const Cell& c) {
  return {{"word", compact(c.word)},
          {"kind", c.kind == Cell::Kind::kPeriodic ? "periodic" : "cylinder"},
          {"region", encode(c.region)}};
}

inline json encode(const RingReport& r) {
  json words = json::array(), polys = json::array(), adj = json::array();
  for (const auto& w : r.words) words.push_back(compact(w));
  for (const auto& c : r.polygons) polys.push_back(encode(c));
  for (const auto& [i, j] : r.adjacency) adj.push_back(json::array({i, j}));
  return {{"words", words}, {"center", encode(r.center)}, {"polygons", polys},
          {"adjacency", adj},
          {"contact", r.contact == Contact::kSegment ? "segment" : "point"}, {"winding", r.winding}, {"closed", r.closed}};
}

inline json encode(const Tower& tw) {
  json levels = json::array();
  for (std::size_t j = 0; j < tw.levels.size(); ++j) {
    const auto& lv = tw.levels[j];
    const Alphabet* parent = j ? &tw.levels[j - 1].map.alphabet() : nullptr;
    json e = encode(lv.map, parent);
    json rw = json::array();
    for (const auto& w : tw.residual_words(j)) rw.push_back(lv.map.alphabet().spell(w));
    e["residual_words"] = rw;
    e["residual_orbits"] = lv.residual.orbits;
    e["residual_uncovered"] = lv.residual.uncovered.size();
    levels.push_back(e);
  }
  json j{{"levels", levels}, {"self_similar", tw.self_similar()}, {"top", tw.top}};
  if (tw.similarity) {
    const Alphabet& a = tw.levels[tw.top].map.alphabet();
    j["similarity"] = encode(tw.similarity->h);
    j["substitution"] = encode(tw.substitution, &a, &a);
  }
  return j;
}

/// Reads an exact number written as a JSON string or integer.
inline QuadNum decode_number(const json& j) {
  if (j.is_number_integer()) return QuadNum(Rational(j.get<long>()));
  if (j.is_string()) return QuadNum::parse(j.get<std::string>());
  throw std::invalid_argument("expected an exact number, got " + j.dump());
}

inline Rational decode_rational(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw std::invalid_argument("expected a rational, got " + j.dump());
}

/// [a, b, c] or {"a", "b", "c", "strict"}: the half-plane a x + b y + c > 0.
inline HalfPlane decode_halfplane(const json& j) {
  if (j.is_array() && j.size() == 3) return HalfPlane(decode_number(j[0]), decode_number(j[1]), decode_number(j[2]));
  if (j.is_object())
    return HalfPlane(decode_number(j.at("a")), decode_number(j.at("b")), decode_number(j.at("c")),
                     j.value("strict", true));
  throw std::invalid_argument("bad half-plane " + j.dump());
}

inline ConvexRegion decode_region(const json& j) {
  const json& cs = j.is_object() ? j.at("constraints") : j;
  std::vector<HalfPlane> hs;
  for (const auto& h : cs) hs.push_back(decode_halfplane(h));
  return ConvexRegion(std::move(hs));
}

}  // namespace pwrot::io
