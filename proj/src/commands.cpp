#include "commands.hpp"

#include <random>
#include <sstream>

#include "classspec.hpp"
#include "error.hpp"
#include "fan.hpp"
#include "gw.hpp"
#include "intersection.hpp"
#include "symmetry.hpp"

namespace ptx {

namespace {

LatticeFan fan_by_name(const std::string& model) {
  if (model == "p3") return LatticeFan::p3();
  if (model == "cube") return LatticeFan::cube();
  if (model == "perm-p3") return LatticeFan::permutohedral_p3();
  if (model == "perm-cube") return LatticeFan::permutohedral_cube();
  fail(Errc::InvalidArgument, "unknown model '" + model + "' (p3, cube, perm-p3, perm-cube)");
}

std::string cone_text(const LatticeFan& f, const Cone& c) {
  std::string s = "<";
  for (size_t i = 0; i < c.rays.size(); ++i) {
    if (i) s += ",";
    s += f.label(c.rays[i]);
  }
  s += ">";
  return s;
}

i64 draw(std::mt19937& rng, i64 lo, i64 hi) {
  return lo + static_cast<i64>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

CurveClass random_class(std::mt19937& rng, const ClassBasis& b) {
  IVec t(b.rank());
  for (auto& x : t) x = draw(rng, -10, 10);
  return curve_from_tuple(b, t);
}

void add_dictionary_lines(Report& r) {
  r.add("dictionary.p3-points", "a1..a4 = coefficients of e123, e124, e134, e234");
  r.add("dictionary.p3-lines", "b1..b6 = coefficients of f12, f13, f14, f23, f24, f34");
  r.add("dictionary.cube-lines",
        "h1, h2, h3 = line classes of the third, second, first P1 factor "
        "(h_j = H_i.H_k for {i,j',k} with j' = 4-j)");
  r.add("dictionary.cube-points", "a1, a2 = coefficients of e135, e246");
  r.add("dictionary.cube-fibers", "b1..b6 = coefficients of f13, f15, f35, f24, f26, f46");
}

}  // namespace

IMat tau_reference_table() {
  // Columns are the images of [h, e123, e124, e134, e234, f12..f34] in the
  // cube basis [h1, h2, h3, e135, e246, f13, f15, f35, f24, f26, f46].
  return IMat{
      // h  e123 e124 e134 e234 f12 f13 f14 f23 f24 f34
      {1, 0, 1, 1, 0, 0, 0, 1, 0, 0, 0},    // h1
      {1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 0},    // h2
      {1, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0},    // h3
      {0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0},    // e135
      {-1, -1, -1, -1, 0, -1, -1, -1, 0, 0, 0},  // e246
      {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0},    // f13
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0},    // f15
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},    // f35
      {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0},    // f24
      {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0},    // f26
      {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0},    // f46
  };
}

std::string default_table_text() { return BaseTable::builtin().to_text(); }

CommandResult cmd_build(const std::string& model) {
  CommandResult res;
  Report& r = res.report;
  LatticeFan f = fan_by_name(model);
  r.add("command", "build");
  r.add("model", model);
  r.add("rays", f.ray_count());
  for (int i = 0; i < f.ray_count(); ++i)
    r.add("ray[" + std::to_string(i) + "]", f.label(i) + " = " + to_string(f.rays()[i]));
  r.add("walls", f.wall_count());
  r.add("max-cones", f.max_cone_count());
  std::ostringstream fv;
  fv << "(" << f.ray_count() << ", " << f.wall_count() << ", " << f.max_cone_count() << ")";
  r.add("f-vector", fv.str());
  r.add_bool("smooth", f.is_smooth());
  r.add_bool("complete", f.is_complete());
  for (int i = 0; i < f.max_cone_count(); ++i)
    r.add("cone[" + std::to_string(i) + "]", cone_text(f, f.max_cones()[i]));
  r.add("status", "ok");
  return res;
}

namespace {

CommandResult verify_iso() {
  CommandResult res;
  Report& r = res.report;
  r.add("check", "iso");
  LatticeFan a = LatticeFan::permutohedral_p3();
  LatticeFan b = LatticeFan::permutohedral_cube();
  auto iso = LatticeFan::find_isomorphism(a, b);
  r.add_bool("isomorphism-found", iso.has_value());
  if (!iso) {
    r.add("result", "fail");
    res.pass = false;
    return res;
  }
  r.add("matrix", to_string(iso->matrix));
  r.add("matrix-det", iso->matrix.det());

  IntersectionTable ta(a, ClassBasis::perm_p3());
  IntersectionTable tb(b, ClassBasis::perm_cube());
  ToricSymmetry found = symmetry_from_fan_iso(ta, tb, iso->matrix);
  IMat ref = tau_reference_table();

  auto autos = LatticeFan::all_isomorphisms(a, a);
  r.add("source-automorphisms", static_cast<i64>(autos.size()));
  bool direct = found.pushforward == ref;
  r.add_bool("pushforward-matches-reference", direct);
  bool matched = direct;
  Mat3 composed = iso->matrix;
  if (!matched) {
    for (const FanIso& s : autos) {
      ToricSymmetry ps = symmetry_from_fan_iso(ta, ta, s.matrix);
      if (mat_mul(found.pushforward, ps.pushforward) == ref) {
        matched = true;
        composed = iso->matrix.mul(s.matrix);
        break;
      }
    }
  }
  r.add_bool("reference-realized-up-to-trivial-symmetry", matched);
  if (matched && !direct) r.add("composed-matrix", to_string(composed));
  if (matched) {
    ToricSymmetry tau = symmetry_from_fan_iso(ta, tb, composed);
    for (int j = 0; j < 11; ++j) {
      IVec col(11);
      for (int i = 0; i < 11; ++i) col[i] = tau.pushforward[i][j];
      r.add("pushforward[" + ta.basis().curve_name(j) + "]",
            curve_to_text(CurveClass(tb.basis(), col)));
    }
  }
  add_dictionary_lines(r);
  res.pass = matched;
  r.add("result", res.pass ? "pass" : "fail");
  return res;
}

CommandResult verify_tau() {
  CommandResult res;
  Report& r = res.report;
  r.add("check", "tau");
  ToricSymmetry tau = tau_symmetry();
  r.add("matrix", to_string(tau.matrix));
  IMat copy = tau.pushforward;
  i64 det = int_det(copy);
  r.add("pushforward-det", det);
  bool unimodular = det == 1 || det == -1;
  bool matches = tau.pushforward == tau_reference_table();
  r.add_bool("pushforward-unimodular", unimodular);
  r.add_bool("pushforward-matches-reference", matches);
  for (int j = 0; j < 11; ++j) {
    IVec col(11);
    for (int i = 0; i < 11; ++i) col[i] = tau.pushforward[i][j];
    r.add("pushforward[" + tau.source.curve_name(j) + "]",
          curve_to_text(CurveClass(tau.target, col)));
  }
  add_dictionary_lines(r);
  res.pass = unimodular && matches;
  r.add("result", res.pass ? "pass" : "fail");
  return res;
}

CommandResult verify_zeta() {
  CommandResult res;
  Report& r = res.report;
  r.add("check", "zeta");
  ToricSymmetry z = zeta_symmetry();
  r.add("matrix", to_string(z.matrix));
  r.add("matrix-det", z.matrix.det());
  bool involutive_matrix = z.matrix.mul(z.matrix) == Mat3::identity();
  r.add_bool("matrix-squares-to-identity", involutive_matrix);

  LatticeFan f = LatticeFan::permutohedral_cube();
  std::ostringstream perm;
  bool first = true;
  for (int i = 0; i < f.ray_count(); ++i) {
    if (z.ray_perm[i] <= i) continue;
    if (!first) perm << " ";
    perm << "(" << f.label(i) << " " << f.label(z.ray_perm[i]) << ")";
    first = false;
  }
  r.add("ray-transpositions", perm.str());

  // The transported pushforward must equal the closed-form coefficient map on
  // every basis class.
  bool all_match = true;
  ClassBasis basis = ClassBasis::perm_cube();
  for (int j = 0; j < basis.rank(); ++j) {
    IVec unit(basis.rank(), 0);
    unit[j] = 1;
    CurveClass bc(basis, unit);
    CurveClass closed = cremona_cube(bc);
    CurveClass transported = apply_symmetry(z, bc);
    bool ok = closed.coords == transported.coords;
    all_match = all_match && ok;
    r.add("basis[" + basis.curve_name(j) + "]",
          std::string(ok ? "match" : "MISMATCH") + " -> " + curve_to_text(closed));
  }
  r.add_bool("pushforward-matches-closed-form", all_match);
  r.add("fiber-orbit", "(b1 b5)(b2 b4)(b3)(b6)");
  res.pass = involutive_matrix && all_match;
  r.add("result", res.pass ? "pass" : "fail");
  return res;
}

CommandResult verify_nef() {
  CommandResult res;
  Report& r = res.report;
  r.add("check", "nef");
  LatticeFan f = LatticeFan::permutohedral_p3();
  ClassBasis basis = ClassBasis::perm_p3();
  IntersectionTable t(f, basis);

  // Exceptional pairings come out of the wall relations.
  bool pairings_ok = true;
  for (int i = 0; i < basis.rank(); ++i)
    for (int j = 0; j < basis.rank(); ++j) {
      i64 expect = i == 0 ? (j == 0 ? 1 : 0) : (i == j ? -1 : 0);
      if (t.pairing()[i][j] != expect) pairings_ok = false;
    }
  r.add_bool("wall-derived-pairing-block", pairings_ok);
  r.add("pairing[E123.e123]", t.pairing()[1][1]);
  r.add("pairing[F12.f12]", t.pairing()[5][5]);

  // D_pq = 2H - (E1+..+E4) - F_pq - F_p'q' for the complementary line pairs.
  const int pair_slots[3][2] = {{0, 5}, {1, 4}, {2, 3}};  // {12,34}, {13,24}, {14,23}
  bool all_nef = true;
  int checked = 0;
  for (const auto& ps : pair_slots) {
    IVec c(basis.rank(), 0);
    c[0] = 2;
    for (int i = 0; i < 4; ++i) c[1 + i] = -1;
    c[5 + ps[0]] = -1;
    c[5 + ps[1]] = -1;
    DivisorClass D(basis, c);
    auto [nef, violators] = t.nef_on_invariant_curves(D);
    all_nef = all_nef && nef;
    i64 min_pair = 0;
    bool have = false;
    for (const Wall& w : f.walls()) {
      i64 v = t.pair(D, t.wall_curve_class(w.cone));
      if (!have || v < min_pair) min_pair = v;
      have = true;
      ++checked;
    }
    std::string name = "D[" + std::string(kP3PairLabels[ps[0]]) + "|" +
                       std::string(kP3PairLabels[ps[1]]) + "]";
    r.add(name, divisor_to_text(D));
    r.add(name + ".nef", nef ? "true" : "false");
    r.add(name + ".min-wall-pairing", min_pair);
    r.add(name + ".violators", static_cast<i64>(violators.size()));
  }
  r.add("wall-pairings-checked", checked);
  res.pass = pairings_ok && all_nef;
  r.add("result", res.pass ? "pass" : "fail");
  return res;
}

CommandResult verify_involutions(unsigned seed, int trials) {
  CommandResult res;
  Report& r = res.report;
  r.add("check", "involutions");
  r.add("seed", static_cast<i64>(seed));
  r.add("trials", trials);
  std::mt19937 rng(seed);
  int fail_p3 = 0, fail_cube = 0, fail_t4 = 0;
  ClassBasis bp3 = ClassBasis::perm_p3(6);
  ClassBasis bcube = ClassBasis::perm_cube(4);
  ClassBasis bside = ClassBasis::cube_side(4);
  for (int i = 0; i < trials; ++i) {
    CurveClass c1 = random_class(rng, bp3);
    if (cremona_p3(cremona_p3(c1)).coords != c1.coords) ++fail_p3;
    CurveClass c2 = random_class(rng, bcube);
    if (cremona_cube(cremona_cube(c2)).coords != c2.coords) ++fail_cube;
    CurveClass c3 = random_class(rng, bside);
    if (cube_side_cremona(cube_side_cremona(c3)).coords != c3.coords) ++fail_t4;
  }
  r.add("cremona-p3-failures", fail_p3);
  r.add("cremona-cube-failures", fail_cube);
  r.add("thm4-failures", fail_t4);
  res.pass = fail_p3 == 0 && fail_cube == 0 && fail_t4 == 0;
  r.add("result", res.pass ? "pass" : "fail");
  return res;
}

}  // namespace

CommandResult cmd_verify(const std::string& check, unsigned seed, int trials) {
  if (check == "iso") return verify_iso();
  if (check == "tau") return verify_tau();
  if (check == "zeta") return verify_zeta();
  if (check == "nef") return verify_nef();
  if (check == "involutions") return verify_involutions(seed, trials);
  fail(Errc::InvalidArgument,
       "unknown check '" + check + "' (iso, zeta, tau, nef, involutions)");
}

CommandResult cmd_transform(const std::string& rule, const std::string& class_spec) {
  CommandResult res;
  Report& r = res.report;
  r.add("command", "transform");
  r.add("rule", rule);
  CurveClass in = parse_class_spec(class_spec);
  r.add("input", curve_to_text(in));
  std::vector<std::string> warnings;
  CurveClass out;

  if (rule == "cremona-p3") {
    if (in.basis.kind != ModelKind::P3 || in.basis.points < 4)
      fail(Errc::BasisModelMismatch, "cremona-p3 needs a P3 or PERM-P3 class with k >= 4");
    if (!in.basis.lines) {
      GuardResult g = p3_balance_guard(in);
      if (!g.ok) warnings.push_back("side conditions fail (" + g.detail + "); image is formal");
    }
    out = cremona_p3(in);
  } else if (rule == "cremona-cube") {
    if (in.basis.kind != ModelKind::Cube || in.basis.points < 2)
      fail(Errc::BasisModelMismatch, "cremona-cube needs a CUBE or PERM-CUBE class with k >= 2");
    if (!in.basis.lines) {
      GuardResult g = cube_balance_guard(in);
      if (!g.ok) warnings.push_back("side conditions fail (" + g.detail + "); image is formal");
    }
    out = cremona_cube(in);
  } else if (rule == "tau") {
    if (in.basis.kind != ModelKind::P3 || in.basis.points < 4)
      fail(Errc::BasisModelMismatch, "tau needs a P3 or PERM-P3 class with k >= 4");
    if (!in.basis.lines) {
      GuardResult g = p3_balance_guard(in);
      if (!g.ok) warnings.push_back("side conditions fail (" + g.detail + "); image is formal");
    }
    out = tau_pushforward(in);
  } else if (rule == "thm1") {
    out = p3_to_cube_class(in, &warnings);
  } else if (rule == "thm4") {
    GuardResult g = cube_side_cremona_guard(in);
    if (!g.ok) warnings.push_back("side conditions fail (" + g.detail + "); image is formal");
    out = cube_side_cremona(in);
  } else {
    fail(Errc::InvalidArgument,
         "unknown rule '" + rule + "' (cremona-p3, cremona-cube, tau, thm1, thm4)");
  }

  r.add("output", curve_to_text(out));
  for (size_t i = 0; i < warnings.size(); ++i)
    r.add("warning[" + std::to_string(i) + "]", warnings[i]);
  r.add("status", "ok");
  return res;
}

CommandResult cmd_reduce(int genus, int points, const std::string& class_spec,
                         const std::string& table_text) {
  CommandResult res;
  Report& r = res.report;
  r.add("command", "reduce");
  CurveClass beta = parse_class_spec(class_spec);
  BaseTable table =
      table_text.empty() ? BaseTable::builtin() : BaseTable::parse(table_text);
  r.add("genus", genus);
  r.add("points", points);
  r.add("class", curve_to_text(beta));
  r.add("table-entries", static_cast<i64>(table.entries.size()));

  GWQuery q{genus, beta, points};
  ReductionTrace tr = reduce(q, table);
  for (size_t i = 0; i < tr.steps.size(); ++i) {
    std::string p = "step[" + std::to_string(i) + "].";
    r.add(p + "rule", tr.steps[i].rule);
    r.add(p + "input", tr.steps[i].input);
    r.add(p + "output", tr.steps[i].output);
    if (!tr.steps[i].note.empty()) r.add(p + "note", tr.steps[i].note);
  }
  if (tr.resolved) {
    r.add("outcome", "value");
    r.add("value", tr.value);
    r.add("provenance", tr.provenance);
  } else {
    r.add("outcome", "unresolved");
    r.add("normal-form", tr.normal_form);
    r.add("reason", tr.unresolved_reason);
  }
  r.add("status", "ok");
  return res;
}

}  // namespace ptx
