#pragma once

// End-to-end check of a preset against its reference data: first return map,
// renormalization tower, substitution, language equality (or the periodic
// tiling when every point is periodic).

#include "pwrot/induction/language.hpp"
#include "pwrot/io/json.hpp"
#include "pwrot/presets.hpp"

#include <chrono>
#include <string>
#include <vector>

namespace pwrot {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CaseReport {
  std::string preset;
  std::vector<Check> checks;
  io::json data;
  /// Pipeline stage that threw, if any.
  std::string failed_stage;
  bool pass() const {
    if (!failed_stage.empty()) return false;
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

struct VerifyOptions {
  /// 0: 18 for order 8, 12 otherwise.
  std::size_t length = 0;
  bool language = true;
  std::size_t max_steps = 10000;
  /// Half-size of the box truncating the cone for tilings.
  long tiling_box = 12;
};

inline std::size_t default_length(int order) { return order == 8 ? 18 : 12; }

/// The cone cut down to a box of half-size d around its apex.
inline ConvexRegion truncated_cone(const Preset& p, long d) {
  QuadNum ax{-(p.sigma + Rational(1))}, dd{Rational(d)};
  return intersect(p.cone(), ConvexRegion::box(ax - dd, QuadNum(-1), ax + dd, dd));
}

namespace detail {

inline std::string joined(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : " ") + s;
  return out;
}

inline Word spelled(const Alphabet& a, const std::string& names) {
  Word w;
  for (char c : names) w += a.letter(std::string(1, c)).value();
  return w;
}

}  // namespace detail

inline CaseReport verify_case(const Preset& p, const VerifyOptions& opt = {}) {
  CaseReport rep;
  rep.preset = p.name;
  std::string stage = "first_return";
  try {
    PiecewiseRotation t = p.rotation();
    FirstReturnOptions fo;
    fo.max_steps = opt.max_steps;
    fo.names = p.names;
    FirstReturn fr = first_return(t.as_piecewise(), p.cone(), fo);
    const Alphabet& a0 = fr.map.alphabet();
    std::vector<std::string> codes;
    for (const auto& pc : fr.map.pieces()) codes.push_back(compact(pc.code));
    std::vector<std::string> want;
    for (const auto& w : p.table) want.push_back(compact(parse_word(w)));
    {
      auto sc = codes, sw = want;
      std::sort(sc.begin(), sc.end());
      std::sort(sw.begin(), sw.end());
      rep.checks.push_back({"return words", sc == sw, detail::joined(codes)});
    }
    rep.data["first_return"] = io::encode(fr.map);

    if (p.method == Method::kTiling) {
      stage = "tiling";
      Tiling tl = tiling_enumerate(fr.map, truncated_cone(p, opt.tiling_box));
      bool shapes = true;
      for (const auto& c : tl.cells) {
        auto n = boundary(c.region).vertices.size();
        if (n != 3 && n != 6) shapes = false;
      }
      rep.checks.push_back({"tiling exact", tl.exact(),
                            "cells " + std::to_string(tl.cells.size()) + ", defect " + tl.defect().to_string()});
      rep.checks.push_back({"triangles and hexagons", shapes, ""});
      for (const char* w : {"BA", "BBCA"}) {
        auto c = periodic_cell(fr.map, detail::spelled(a0, w));
        std::size_t n = c ? boundary(c->region).vertices.size() : 0;
        rep.checks.push_back({std::string("hexagon ") + w, n == 6, c ? std::to_string(n) + " vertices" : "no cell"});
      }
      if (opt.language) {
        stage = "language";
        std::size_t L = opt.length ? opt.length : default_length(t.order());
        Language sub(L);
        Substitution code = fr.map.code_morphism();
        for (const auto& c : tl.cells) sub.add_periodic(code(c.word));
        Language emp = empirical_language(t.as_piecewise(), cone_orbit_windows(fr), L);
        LanguageDiff d = language_compare(sub, emp);
        rep.checks.push_back({"language", d.equal(),
                              std::to_string(sub.size()) + " vs " + std::to_string(emp.size()) + " words at length " +
                                  std::to_string(L)});
        rep.data["language_diff"] = io::encode(d);
      }
      return rep;
    }

    stage = "renormalize";
    TowerOptions to;
    to.induce.max_steps = opt.max_steps;
    to.residual = opt.language;
    Tower tw = renormalize(fr.map, to);
    rep.data["tower"] = io::encode(tw);
    if (!tw.self_similar()) {
      rep.checks.push_back({"self-similar", false, "no similarity within " + std::to_string(to.max_levels) + " levels"});
      return rep;
    }
    const Alphabet& top = tw.levels[tw.top].map.alphabet();
    std::string got = tw.substitution.to_string(&top, &top);
    if (!p.substitution.empty()) rep.checks.push_back({"substitution", got == p.substitution, got});
    else rep.checks.push_back({"substitution (computed)", true, got});
    if (!p.second_level.empty()) {
      std::vector<std::string> lw;
      if (tw.levels.size() > 1)
        for (const auto& pc : tw.levels[1].map.pieces()) lw.push_back(a0.spell(pc.word));
      rep.checks.push_back({"second level", lw == p.second_level, detail::joined(lw)});
    }
    if (opt.language) {
      stage = "language";
      std::size_t L = opt.length ? opt.length : default_length(t.order());
      Language sub = substitutive_language(tower_seeds(tw), L);
      Language emp = empirical_language(t.as_piecewise(), cone_orbit_windows(fr), L);
      LanguageDiff d = language_compare(sub, emp);
      rep.checks.push_back({"language", d.equal(),
                            std::to_string(sub.size()) + " vs " + std::to_string(emp.size()) + " words at length " +
                                std::to_string(L)});
      rep.data["language_diff"] = io::encode(d);
    }
  } catch (const std::exception& e) {
    rep.failed_stage = stage + ": " + e.what();
  }
  return rep;
}

inline io::json encode_report(const CaseReport& r) {
  io::json checks = io::json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  io::json j{{"preset", r.preset}, {"pass", r.pass()}, {"checks", checks}};
  if (!r.failed_stage.empty()) j["error"] = r.failed_stage;
  j["data"] = r.data;
  return j;
}

}  // namespace pwrot
