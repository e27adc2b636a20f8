// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Exercises the CLI binary for the command-level criteria and the
// core library for the class calculus.

#include <cstdio>
#include <cstdlib>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "error.hpp"
#include "fan.hpp"
#include "gw.hpp"
#include "intersection.hpp"
#include "symmetry.hpp"

#ifndef PTX_CLI_PATH
#define PTX_CLI_PATH "./permutoric"
#endif
#ifndef PTX_TABLE_PATH
#define PTX_TABLE_PATH "data/base_table.txt"
#endif

using namespace ptx;

namespace {

int g_failures = 0;

void report(int index, const std::string& name, bool pass, const std::string& detail = "") {
  std::printf("%s criterion-%d: %s%s%s\n", pass ? "PASS" : "FAIL", index, name.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!pass) ++g_failures;
}

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  RunResult r;
  std::string cmd = std::string(PTX_CLI_PATH) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[512];
  while (fgets(buf, sizeof buf, p)) r.out += buf;
  int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

i64 draw(std::mt19937& rng, i64 lo, i64 hi) {
  return lo + static_cast<i64>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

CurveClass random_tuple_class(std::mt19937& rng, const ClassBasis& b) {
  IVec t(b.rank());
  for (auto& x : t) x = draw(rng, -10, 10);
  return curve_from_tuple(b, t);
}

// criterion 1: both permutohedral constructions have f-vector (14, 36, 24)
void criterion_construction() {
  bool ok = true;
  std::string detail;
  for (const char* model : {"perm-p3", "perm-cube"}) {
    RunResult r = run_cli(std::string("build ") + model);
    bool this_ok = r.exit_code == 0 && contains(r.out, "f-vector: (14, 36, 24)") &&
                   contains(r.out, "smooth: true") && contains(r.out, "complete: true");
    if (!this_ok) detail += std::string(model) + " failed; ";
    ok = ok && this_ok;
  }
  report(1, "permutohedral construction f-vector (14, 36, 24)", ok, detail);
}

// criterion 2: a fan isomorphism exists and realizes the pushforward table
void criterion_isomorphism() {
  LatticeFan a = LatticeFan::permutohedral_p3();
  LatticeFan b = LatticeFan::permutohedral_cube();
  auto iso = LatticeFan::find_isomorphism(a, b);
  if (!iso) {
    report(2, "fan isomorphism matches the pushforward table", false, "no isomorphism found");
    return;
  }
  IntersectionTable ta(a, ClassBasis::perm_p3());
  IntersectionTable tb(b, ClassBasis::perm_cube());
  ToricSymmetry found = symmetry_from_fan_iso(ta, tb, iso->matrix);
  IMat ref = tau_reference_table();
  bool matched = found.pushforward == ref;
  if (!matched)
    for (const FanIso& s : LatticeFan::all_isomorphisms(a, a)) {
      ToricSymmetry ps = symmetry_from_fan_iso(ta, ta, s.matrix);
      if (mat_mul(found.pushforward, ps.pushforward) == ref) {
        matched = true;
        break;
      }
    }
  i64 d = iso->matrix.det();
  report(2, "fan isomorphism matches the pushforward table on all 11 basis classes",
         matched && (d == 1 || d == -1));
}

// criterion 3: the explicit matrix stabilizes the rays, squares to the
// identity, and transports to the closed-form cube Cremona exactly
void criterion_zeta() {
  bool ok = true;
  std::string detail;
  try {
    ToricSymmetry z = zeta_symmetry();
    ok = ok && z.matrix.mul(z.matrix) == Mat3::identity();
    ClassBasis basis = ClassBasis::perm_cube();
    for (int j = 0; j < basis.rank(); ++j) {
      IVec unit(basis.rank(), 0);
      unit[j] = 1;
      CurveClass bc(basis, unit);
      if (apply_symmetry(z, bc).coords != cremona_cube(bc).coords) {
        ok = false;
        detail += "mismatch at " + basis.curve_name(j) + "; ";
      }
    }
  } catch (const Error& e) {
    ok = false;
    detail = e.what();
  }
  report(3, "explicit cube symmetry matrix transports to the closed form", ok, detail);
}

// criterion 4: the three coefficient maps are involutions on 1000 seeded
// random classes with coefficients in [-10, 10]
void criterion_involutions() {
  std::mt19937 rng(0);
  int failures = 0;
  ClassBasis bp = ClassBasis::perm_p3(6);
  ClassBasis bc = ClassBasis::perm_cube(4);
  ClassBasis bs = ClassBasis::cube_side(4);
  for (int i = 0; i < 1000; ++i) {
    CurveClass c1 = random_tuple_class(rng, bp);
    if (cremona_p3(cremona_p3(c1)).coords != c1.coords) ++failures;
    CurveClass c2 = random_tuple_class(rng, bc);
    if (cremona_cube(cremona_cube(c2)).coords != c2.coords) ++failures;
    CurveClass c3 = random_tuple_class(rng, bs);
    if (cube_side_cremona(cube_side_cremona(c3)).coords != c3.coords) ++failures;
  }
  report(4, "coefficient maps are involutions on 1000 seeded classes", failures == 0,
         failures ? std::to_string(failures) + " failures" : "");
}

// criterion 5: balance transport on 1000 seeded dimension-zero classes
void criterion_vdim_transport() {
  std::mt19937 rng(1);
  int failures = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    // P3 side, no line slots: 2d = sum(a)
    int k = 4 + static_cast<int>(rng() % 5);
    IVec t(1 + k, 0);
    i64 s = 0;
    for (int i = 0; i < k; ++i) {
      t[1 + i] = draw(rng, -10, 10);
      s += t[1 + i];
    }
    if (s % 2 != 0) {
      t[1] += 1;
      s += 1;
    }
    t[0] = s / 2;
    CurveClass beta = curve_from_tuple(ClassBasis::p3_side(k), t);
    CurveClass img = p3_to_cube_class(beta);
    IVec it = curve_to_tuple(img);
    i64 dsum = it[0] + it[1] + it[2], asum = 0;
    for (size_t i = 3; i < it.size(); ++i) asum += it[i];
    if (dsum != asum) ++failures;
    if (anticanonical_degree(img) != 0) ++failures;

    // P3 Cremona on dimension-zero permutohedral classes: 4d = 2 sum(a) + sum(b)
    IVec tp(ClassBasis::perm_p3().rank(), 0);
    i64 need = 0;
    for (int i = 1; i <= 4; ++i) {
      tp[i] = draw(rng, -10, 10);
      need += 2 * tp[i];
    }
    for (int i = 5; i < 11; ++i) {
      tp[i] = draw(rng, -10, 10);
      need += tp[i];
    }
    i64 rem = ((need % 4) + 4) % 4;
    tp[10] += (4 - rem) % 4;
    need += (4 - rem) % 4;
    tp[0] = need / 4;
    CurveClass pc = curve_from_tuple(ClassBasis::perm_p3(), tp);
    if (anticanonical_degree(pc) != 0) ++failures;
    if (anticanonical_degree(cremona_p3(pc)) != 0) ++failures;

    // cube Cremona: 2 sum(d) = 2 sum(a) + sum(b)
    IVec tq(ClassBasis::perm_cube().rank(), 0);
    i64 rhs = 0;
    for (int i = 3; i < 5; ++i) {
      tq[i] = draw(rng, -10, 10);
      rhs += 2 * tq[i];
    }
    for (int i = 5; i < 11; ++i) {
      tq[i] = draw(rng, -10, 10);
      rhs += tq[i];
    }
    if (rhs % 2 != 0) {
      tq[10] += 1;
      rhs += 1;
    }
    tq[0] = draw(rng, -10, 10);
    tq[1] = draw(rng, -10, 10);
    tq[2] = rhs / 2 - tq[0] - tq[1];
    CurveClass qc = curve_from_tuple(ClassBasis::perm_cube(), tq);
    if (anticanonical_degree(qc) != 0) ++failures;
    if (anticanonical_degree(cremona_cube(qc)) != 0) ++failures;

    // cube-side symmetry with four points: sum(d) = sum(a)
    IVec t4(ClassBasis::cube_side(4).rank(), 0);
    i64 total = 0;
    for (int i = 3; i < 7; ++i) {
      t4[i] = draw(rng, -10, 10);
      total += t4[i];
    }
    t4[0] = draw(rng, -10, 10);
    t4[1] = draw(rng, -10, 10);
    t4[2] = total - t4[0] - t4[1];
    CurveClass c4 = curve_from_tuple(ClassBasis::cube_side(4), t4);
    if (anticanonical_degree(c4) != 0) ++failures;
    if (anticanonical_degree(cube_side_cremona(c4)) != 0) ++failures;
  }
  report(5, "dimension-zero transport on 1000 seeded classes", failures == 0,
         failures ? std::to_string(failures) + " failures" : "");
}

// criterion 6: the three divisors pair nonnegatively with all 36 walls, and
// the exceptional self-pairings come out of the wall relations
void criterion_nef() {
  ClassBasis b = ClassBasis::perm_p3();
  IntersectionTable t(LatticeFan::permutohedral_p3(), b);
  bool ok = t.fan().wall_count() == 36;
  for (int i = 0; i < b.rank(); ++i)
    for (int j = 0; j < b.rank(); ++j) {
      i64 expect = i == 0 ? (j == 0 ? 1 : 0) : (i == j ? -1 : 0);
      if (t.pairing()[i][j] != expect) ok = false;
    }
  const int pair_slots[3][2] = {{0, 5}, {1, 4}, {2, 3}};
  int nonneg = 0;
  for (const auto& ps : pair_slots) {
    IVec c(b.rank(), 0);
    c[0] = 2;
    for (int i = 0; i < 4; ++i) c[1 + i] = -1;
    c[5 + ps[0]] = -1;
    c[5 + ps[1]] = -1;
    DivisorClass D(b, c);
    auto [nef, violators] = t.nef_on_invariant_curves(D);
    ok = ok && nef && violators.empty();
    for (const Wall& w : t.fan().walls())
      if (t.pair(D, t.wall_curve_class(w.cone)) >= 0) ++nonneg;
  }
  report(6, "nef certificates: 3 divisors x 36 walls nonnegative", ok && nonneg == 108,
         std::to_string(nonneg) + "/108 nonnegative pairings");
}

// criterion 7: the three-point count on the triple product reduces through
// the documented chain to the degree-3 entry
void criterion_example_chain() {
  RunResult r = run_cli("reduce --genus 0 --points 3 \"CUBE(k=0): d=1,1,1\" --table " +
                        std::string(PTX_TABLE_PATH));
  bool ok = r.exit_code == 0 && contains(r.out, "outcome: value") &&
            contains(r.out, "value: 1") &&
            contains(r.out, "CUBE(k=4): d=1,1,1; a=1,0,1,1") &&
            contains(r.out, "P3(k=6): d=3; a=1,1,1,1,1,1");
  report(7, "three-point query reduces through the documented chain to 1", ok,
         ok ? "" : "exit=" + std::to_string(r.exit_code));
}

// criterion 8: the general equivalences are certified by the property suites
// above plus the single numeric chain; this aggregates them
void criterion_aggregate() {
  bool ok = g_failures == 0;
  report(8, "class-level certificates and the numeric chain stand in for the general claims",
         ok, ok ? "criteria 1-7 all passed" : "see failures above");
}

}  // namespace

int main() {
  criterion_construction();
  criterion_isomorphism();
  criterion_zeta();
  criterion_involutions();
  criterion_vdim_transport();
  criterion_nef();
  criterion_example_chain();
  criterion_aggregate();
  if (g_failures) {
    std::printf("ACCEPTANCE: %d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("ACCEPTANCE: all criteria passed\n");
  return 0;
}
