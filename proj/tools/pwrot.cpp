// pwrot: command-line front end for the piecewise rotation library.
// Exit codes: 0 success or verified, 1 verified false, 2 error.

#include "pwrot/io/svg.hpp"
#include "pwrot/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace pwrot;
using io::json;

namespace {

struct Args {
  std::string scenario, preset, theta, sigma, window, out, what = "partition";
  std::vector<std::string> words;
  std::size_t depth = 0, max_steps = 0, length = 0;
  bool periodic = false, with_words = false, point_contact = false;
};

struct Scenario {
  Rational theta, sigma;
  std::optional<Preset> preset;
  std::optional<ConvexRegion> cone;
  std::vector<Word> words;
  std::optional<ConvexRegion> window;
  std::size_t depth = 0, max_steps = 10000, length = 0;
  std::string out, what;

  PiecewiseRotation rotation() const { return PiecewiseRotation(theta, sigma); }
  ConvexRegion induction_window() const {
    if (cone) return *cone;
    if (preset) return preset->cone();
    return induction_cone(rotation().order(), sigma);
  }
  std::map<Word, std::string> names() const { return preset ? preset->names : std::map<Word, std::string>{}; }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ConvexRegion parse_window(const std::string& s) {
  std::vector<QuadNum> v;
  std::size_t i = 0;
  while (i <= s.size()) {
    std::size_t j = s.find(',', i);
    if (j == std::string::npos) j = s.size();
    v.push_back(QuadNum::parse(s.substr(i, j - i)));
    i = j + 1;
  }
  if (v.size() != 4) throw UsageError("--window expects x0,y0,x1,y1");
  return ConvexRegion::box(v[0], v[1], v[2], v[3]);
}

Scenario load(const Args& a) {
  json file = json::object();
  if (!a.scenario.empty()) {
    std::ifstream in(a.scenario);
    if (!in) throw UsageError("cannot read scenario " + a.scenario);
    file = json::parse(in);
  }
  Scenario s;
  std::string pname = !a.preset.empty() ? a.preset : file.value("preset", std::string());
  if (!pname.empty()) {
    s.preset = preset(pname);
    s.theta = s.preset->theta;
    s.sigma = s.preset->sigma;
  }
  if (file.contains("theta")) s.theta = io::decode_rational(file["theta"]);
  if (file.contains("sigma")) s.sigma = io::decode_rational(file["sigma"]);
  if (!a.theta.empty()) s.theta = Rational::parse(a.theta);
  if (!a.sigma.empty()) s.sigma = Rational::parse(a.sigma);
  if (!s.preset && (a.theta.empty() && !file.contains("theta"))) throw UsageError("need --preset or --theta/--sigma");
  if (s.preset && (s.theta != s.preset->theta || s.sigma != s.preset->sigma)) {
    Preset p = *s.preset;
    p.theta = s.theta;
    p.sigma = s.sigma;
    s.preset = p;
  } else if (!s.preset) {
    s.preset = find_preset(s.theta, s.sigma);
  }
  if (file.contains("cone")) s.cone = io::decode_region(file["cone"]);
  if (file.contains("words"))
    for (const auto& w : file["words"]) s.words.push_back(parse_word(w.get<std::string>()));
  for (const auto& w : a.words) s.words.push_back(parse_word(w));
  if (file.contains("window")) {
    const auto& w = file["window"];
    s.window = ConvexRegion::box(io::decode_number(w[0]), io::decode_number(w[1]), io::decode_number(w[2]),
                                 io::decode_number(w[3]));
  }
  if (!a.window.empty()) s.window = parse_window(a.window);
  s.depth = a.depth ? a.depth : file.value("depth", std::size_t(0));
  s.max_steps = a.max_steps ? a.max_steps : file.value("max_steps", std::size_t(10000));
  s.length = a.length ? a.length : file.value("length", std::size_t(0));
  s.out = !a.out.empty() ? a.out : file.value("out", std::string());
  s.what = file.value("what", a.what);
  return s;
}

void emit(const Scenario& s, const std::string& text) {
  if (s.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(s.out);
  if (!f) throw UsageError("cannot write " + s.out);
  f << text;
}

void emit(const Scenario& s, const json& j) { emit(s, j.dump(2) + "\n"); }

FirstReturn induce_cone(const Scenario& s) {
  FirstReturnOptions o;
  o.max_steps = s.max_steps;
  o.names = s.names();
  return first_return(s.rotation().as_piecewise(), s.induction_window(), o);
}

int cmd_centers(const Scenario& s) {
  auto [z1, z2] = s.rotation().centers();
  emit(s, json{{"theta", s.theta.to_string()}, {"sigma", s.sigma.to_string()}, {"z1", io::encode(z1)},
               {"z2", io::encode(z2)}});
  return 0;
}

int cmd_induce(const Scenario& s) {
  FirstReturn fr = induce_cone(s);
  TowerOptions to;
  to.induce.max_steps = s.max_steps;
  if (s.depth) to.max_levels = s.depth;
  to.residual = false;
  Tower tw = renormalize(fr.map, to);
  emit(s, json{{"first_return", io::encode(fr.map)}, {"steps", fr.steps}, {"tower", io::encode(tw)}});
  return 0;
}

int cmd_cell(const Scenario& s, bool periodic) {
  if (s.words.empty()) throw UsageError("cell: need --word");
  PiecewiseIsometry pw = s.rotation().as_piecewise();
  json out = json::array();
  for (const auto& w : s.words) {
    if (periodic) {
      auto c = periodic_cell(pw, w);
      out.push_back(c ? io::encode(*c) : json{{"word", compact(w)}, {"kind", "periodic"}, {"region", nullptr}});
    } else {
      out.push_back(io::encode(Cell{w, cylinder_cell(pw, w), Cell::Kind::kCylinder}));
    }
  }
  emit(s, out);
  return 0;
}

int cmd_ring(const Scenario& s, bool point_contact) {
  if (s.words.empty()) throw UsageError("ring: need --word");
  RingReport r = ring_check(s.rotation(), s.words, std::nullopt, point_contact ? Contact::kPoint : Contact::kSegment);
  emit(s, io::encode(r));
  return r.closed ? 0 : 1;
}

int cmd_language(const Scenario& s, bool with_words) {
  PiecewiseRotation t = s.rotation();
  std::size_t L = s.length ? s.length : default_length(t.order());
  PiecewiseIsometry pw = t.as_piecewise();
  if (s.window) {
    Language emp = empirical_language(pw, {*s.window}, L);
    emit(s, json{{"window", io::encode(*s.window)}, {"empirical", io::encode(emp, with_words)}});
    return 0;
  }
  if (!s.preset) throw UsageError("language: need a preset or --window");
  VerifyOptions vo;
  vo.length = L;
  vo.max_steps = s.max_steps;
  CaseReport r = verify_case(*s.preset, vo);
  if (!r.failed_stage.empty()) throw std::runtime_error(r.failed_stage);
  for (const auto& c : r.checks)
    if (c.name == "language") {
      emit(s, json{{"preset", s.preset->name}, {"length", L}, {"equal", c.pass}, {"detail", c.detail},
                   {"diff", r.data["language_diff"]}});
      return c.pass ? 0 : 1;
    }
  throw std::runtime_error("language: no comparison made");
}

const char* kPalette[] = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462",
                          "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd", "#ccebc5", "#ffed6f"};

int cmd_render(const Scenario& s) {
  PiecewiseRotation t = s.rotation();
  std::vector<std::pair<ConvexRegion, std::string>> shapes;
  if (s.what == "partition") {
    FirstReturn fr = induce_cone(s);
    for (const auto& p : fr.map.pieces()) shapes.push_back({p.region, fr.map.alphabet().name(p.label)});
  } else if (s.what == "tiling") {
    FirstReturn fr = induce_cone(s);
    ConvexRegion region = s.window ? intersect(fr.map.domain(), *s.window)
                                   : (s.preset ? truncated_cone(*s.preset, 8) : throw UsageError("tiling: need --window"));
    Tiling tl = tiling_enumerate(fr.map, region);
    for (const auto& c : tl.cells) shapes.push_back({c.region, ""});
  } else if (s.what == "orbit" || s.what == "cells") {
    PiecewiseIsometry pw = t.as_piecewise();
    for (const auto& w : s.words) {
      auto c = periodic_cell(pw, w);
      if (!c) throw std::runtime_error("render: no periodic cell for " + compact(w));
      if (s.what == "cells") shapes.push_back({c->region, compact(w)});
      else
        for (const auto& oc : cell_orbit(pw, *c)) shapes.push_back({oc.region, ""});
    }
  } else {
    throw UsageError("render: --what must be partition, tiling, orbit or cells");
  }
  std::vector<ConvexRegion> rs;
  for (const auto& [r, l] : shapes) rs.push_back(r);
  io::SvgCanvas canvas = s.window ? [&] {
    Boundary b = boundary(*s.window);
    return io::SvgCanvas(b.vertices[0].x, b.vertices[0].y, b.vertices[2].x, b.vertices[2].y);
  }()
                                  : io::fit_canvas(rs);
  canvas.axes();
  std::size_t i = 0;
  for (const auto& [r, l] : shapes) {
    io::SvgStyle st;
    st.fill = kPalette[i++ % std::size(kPalette)];
    canvas.region(r, st, l);
  }
  emit(s, canvas.str());
  return 0;
}

int cmd_verify(const Scenario& s) {
  if (!s.preset) throw UsageError("verify: no preset for these parameters");
  VerifyOptions vo;
  vo.length = s.length;
  vo.max_steps = s.max_steps;
  CaseReport r = verify_case(*s.preset, vo);
  json j = encode_report(r);
  emit(s, j);
  if (!r.failed_stage.empty()) {
    std::cerr << "verify: " << r.failed_stage << "\n";
    return 2;
  }
  return r.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact piecewise rotations: induction, cells, languages"};
  app.require_subcommand(1);
  Args a;
  auto common = [&](CLI::App* c) {
    c->add_option("--scenario", a.scenario, "scenario JSON file");
    c->add_option("--preset", a.preset, "built-in case study");
    c->add_option("--theta", a.theta, "rotation angle p/q (1/4, 1/3 or 1/8)");
    c->add_option("--sigma", a.sigma, "rational parameter");
    c->add_option("--max-steps", a.max_steps, "induction step budget");
    c->add_option("--out", a.out, "output file (default stdout)");
  };
  auto* centers = app.add_subcommand("centers", "fixed points of the two branches");
  auto* induce = app.add_subcommand("induce", "first return map and renormalization tower");
  auto* cell = app.add_subcommand("cell", "cylinder or periodic cell of a word");
  auto* ring = app.add_subcommand("ring", "ring check of periodic cell orbits (exit 1 when open)");
  auto* language = app.add_subcommand("language", "substitutive vs empirical language");
  auto* render = app.add_subcommand("render", "SVG of a partition, tiling, orbit or cells");
  auto* verify = app.add_subcommand("verify", "check a case study against its reference data");
  for (auto* c : {centers, induce, cell, ring, language, render, verify}) common(c);
  induce->add_option("--depth", a.depth, "maximum tower levels");
  for (auto* c : {cell, ring, render}) c->add_option("--word", a.words, "word over {1,2}, e.g. 1^42^5");
  ring->add_flag("--point-contact", a.point_contact, "polygons meeting in a point count as touching");
  cell->add_flag("--periodic", a.periodic, "periodic cell instead of cylinder");
  for (auto* c : {language, verify}) c->add_option("--length", a.length, "language length");
  language->add_flag("--words", a.with_words, "list the words");
  for (auto* c : {language, render}) c->add_option("--window", a.window, "box x0,y0,x1,y1");
  render->add_option("--what", a.what, "partition, tiling, orbit or cells");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  try {
    Scenario s = load(a);
    if (*centers) return cmd_centers(s);
    if (*induce) return cmd_induce(s);
    if (*cell) return cmd_cell(s, a.periodic);
    if (*ring) return cmd_ring(s, a.point_contact);
    if (*language) return cmd_language(s, a.with_words);
    if (*render) return cmd_render(s);
    if (*verify) return cmd_verify(s);
  } catch (const std::exception& e) {
    std::cerr << "pwrot: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
