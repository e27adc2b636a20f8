#include "gw.hpp"

#include <algorithm>
#include <sstream>

#include "error.hpp"
#include "intersection.hpp"
#include "symmetry.hpp"

namespace ptx {

namespace {

IVec tuple_of(const CurveClass& c) { return curve_to_tuple(c); }

CurveClass pad_points(const CurveClass& c, int k) {
  const ClassBasis& b = c.basis;
  if (b.points >= k) return c;
  if (b.lines) fail(Errc::Internal, "padding only defined for side models");
  ClassBasis nb = b.kind == ModelKind::P3 ? ClassBasis::p3_side(k) : ClassBasis::cube_side(k);
  IVec coords(nb.rank(), 0);
  for (int i = 0; i < b.rank(); ++i) coords[i] = c.coords[i];
  return CurveClass(nb, coords);
}

}  // namespace

i64 vdim(const GWQuery& q) {
  return anticanonical_degree(q.beta) - 2 * static_cast<i64>(q.point_insertions);
}

GWQuery point_descent(const GWQuery& q) {
  if (q.beta.basis.lines) fail(Errc::BasisModelMismatch, "descent acts on side models");
  if (q.point_insertions == 0) return q;
  const ClassBasis& b = q.beta.basis;
  int k = b.points + q.point_insertions;
  ClassBasis nb = b.kind == ModelKind::P3 ? ClassBasis::p3_side(k) : ClassBasis::cube_side(k);
  IVec t = tuple_of(pad_points(q.beta, b.points));  // tuple in the old basis
  IVec nt(nb.rank(), 0);
  for (size_t i = 0; i < t.size(); ++i) nt[i] = t[i];
  for (int i = 0; i < q.point_insertions; ++i) nt[nb.degree_slots() + b.points + i] = 1;
  return GWQuery{q.genus, curve_from_tuple(nb, nt), 0};
}

GuardResult p3_balance_guard(const CurveClass& beta) {
  if (beta.basis.kind != ModelKind::P3)
    fail(Errc::BasisModelMismatch, "guard applies to P3-kind classes");
  IVec t = tuple_of(beta);
  i64 asum = 0;
  for (int i = 0; i < beta.basis.points; ++i) asum += t[1 + i];
  bool bal = 2 * t[0] == asum;
  bool tail = false;
  for (int i = 4; i < beta.basis.points; ++i)
    if (t[1 + i] != 0) tail = true;
  GuardResult g;
  g.ok = bal && tail;
  std::ostringstream os;
  os << (bal ? "2d = sum(a)" : "2d != sum(a)") << "; "
     << (tail ? "a_i != 0 for some i > 4" : "a_i = 0 for all i > 4");
  g.detail = os.str();
  return g;
}

GuardResult cube_balance_guard(const CurveClass& beta) {
  if (beta.basis.kind != ModelKind::Cube)
    fail(Errc::BasisModelMismatch, "guard applies to cube-kind classes");
  IVec t = tuple_of(beta);
  i64 dsum = t[0] + t[1] + t[2];
  i64 asum = 0;
  for (int i = 0; i < beta.basis.points; ++i) asum += t[3 + i];
  bool bal = dsum == asum;
  bool tail = false;
  for (int i = 2; i < beta.basis.points; ++i)
    if (t[3 + i] != 0) tail = true;
  GuardResult g;
  g.ok = bal && tail;
  std::ostringstream os;
  os << (bal ? "sum(d) = sum(a)" : "sum(d) != sum(a)") << "; "
     << (tail ? "a_i != 0 for some i > 2" : "a_i = 0 for all i > 2");
  g.detail = os.str();
  return g;
}

GuardResult cube_side_cremona_guard(const CurveClass& beta) {
  if (beta.basis.kind != ModelKind::Cube || beta.basis.points != 4)
    fail(Errc::BasisModelMismatch, "guard applies to cube-kind classes with k = 4");
  IVec t = tuple_of(beta);
  GuardResult g;
  g.ok = t[5] != 0 || t[6] != 0;
  g.detail = g.ok ? "{a3,a4} != {0}" : "a3 = a4 = 0";
  return g;
}

CurveClass p3_to_cube_class(const CurveClass& beta, std::vector<std::string>* warnings) {
  const ClassBasis& b = beta.basis;
  if (b.kind != ModelKind::P3 || b.lines)
    fail(Errc::BasisModelMismatch, "degree correspondence maps P3 side classes");
  if (b.points < 2) fail(Errc::BasisModelMismatch, "needs k >= 2");
  CurveClass padded = pad_points(beta, std::max(b.points, 4));
  IVec t = tuple_of(padded);
  int k = padded.basis.points;

  if (warnings) {
    GuardResult g2 = p3_balance_guard(padded);
    if (!g2.ok) warnings->push_back("side conditions fail (" + g2.detail + "); image is formal");
  }

  ClassBasis nb = ClassBasis::cube_side(k - 2);
  IVec nt(nb.rank(), 0);
  i64 d = t[0], a1 = t[1], a2 = t[2], a3 = t[3], a4 = t[4];
  nt[0] = d - a2 - a3;
  nt[1] = d - a1 - a3;
  nt[2] = d - a1 - a2;
  nt[3] = a4;
  nt[4] = d - a1 - a2 - a3;
  for (int i = 2; i < k - 2; ++i) nt[3 + i] = t[1 + (i + 2)];
  return curve_from_tuple(nb, nt);
}

CurveClass cube_to_p3_class(const CurveClass& beta, std::vector<std::string>* warnings) {
  const ClassBasis& b = beta.basis;
  if (b.kind != ModelKind::Cube || b.lines)
    fail(Errc::BasisModelMismatch, "inverse correspondence maps cube side classes");
  CurveClass padded = pad_points(beta, std::max(b.points, 2));
  IVec t = tuple_of(padded);
  int m = padded.basis.points;

  if (warnings) {
    GuardResult g3 = cube_balance_guard(padded);
    if (!g3.ok) warnings->push_back("side conditions fail (" + g3.detail + "); image is formal");
  }

  ClassBasis nb = ClassBasis::p3_side(m + 2);
  IVec nt(nb.rank(), 0);
  i64 d1 = t[0], d2 = t[1], d3 = t[2], a1t = t[3], a2t = t[4];
  nt[0] = d1 + d2 + d3 - 2 * a2t;
  nt[1] = d1 - a2t;
  nt[2] = d2 - a2t;
  nt[3] = d3 - a2t;
  nt[4] = a1t;
  for (int i = 2; i < m; ++i) nt[1 + (i + 2)] = t[3 + i];
  return curve_from_tuple(nb, nt);
}

CurveClass cube_side_cremona(const CurveClass& beta) {
  const ClassBasis& b = beta.basis;
  if (b.kind != ModelKind::Cube || b.lines || b.points != 4)
    fail(Errc::BasisModelMismatch, "symmetry acts on cube side classes with k = 4");
  IVec t = tuple_of(beta);
  IVec nt(t.size(), 0);
  i64 d1 = t[0], d2 = t[1], d3 = t[2], a1 = t[3], a2 = t[4], a3 = t[5], a4 = t[6];
  nt[0] = d1 + d3 - a1 - a2;
  nt[1] = d2 + d3 - a1 - a2;
  nt[2] = d3;
  nt[3] = d3 - a2;
  nt[4] = d3 - a1;
  nt[5] = a4;
  nt[6] = a3;
  return curve_from_tuple(b, nt);
}

BaseTable BaseTable::builtin() {
  BaseTable t;
  t.entries.push_back({ModelKind::P3, 0, {1}, 2, 1, "TRIVIAL"});
  t.entries.push_back({ModelKind::P3, 0, {3}, 6, 1, "PAPER"});
  return t;
}

BaseTable BaseTable::parse(const std::string& text) {
  BaseTable t;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string trimmed = line;
    size_t h = trimmed.find('#');
    if (h != std::string::npos) trimmed = trimmed.substr(0, h);
    std::istringstream ls(trimmed);
    std::string model, spec, prov;
    int genus;
    i64 value;
    if (!(ls >> model)) continue;  // blank line
    if (!(ls >> genus >> spec >> value >> prov))
      fail(Errc::ParseError, "table line " + std::to_string(lineno) +
                                 ": expected 'model genus class value provenance'");
    Entry e;
    if (model == "P3")
      e.kind = ModelKind::P3;
    else if (model == "CUBE")
      e.kind = ModelKind::Cube;
    else
      fail(Errc::ParseError, "table line " + std::to_string(lineno) + ": unknown model " + model);
    e.genus = genus;
    e.value = value;
    if (prov != "PAPER" && prov != "TRIVIAL" && prov != "DERIVED")
      fail(Errc::ParseError,
           "table line " + std::to_string(lineno) + ": provenance must be PAPER|TRIVIAL|DERIVED");
    e.provenance = prov;
    // class spec: d=<ints>;n=<int>
    size_t semi = spec.find(";n=");
    if (spec.rfind("d=", 0) != 0 || semi == std::string::npos)
      fail(Errc::ParseError, "table line " + std::to_string(lineno) + ": class must be d=..;n=..");
    std::string dpart = spec.substr(2, semi - 2);
    e.npoints = std::atoi(spec.c_str() + semi + 3);
    std::istringstream ds(dpart);
    std::string tok;
    while (std::getline(ds, tok, ',')) e.degrees.push_back(std::atoll(tok.c_str()));
    size_t want = e.kind == ModelKind::P3 ? 1 : 3;
    if (e.degrees.size() != want)
      fail(Errc::ParseError, "table line " + std::to_string(lineno) + ": wrong degree count");
    std::sort(e.degrees.rbegin(), e.degrees.rend());
    t.entries.push_back(std::move(e));
  }
  return t;
}

std::string BaseTable::to_text() const {
  std::ostringstream os;
  for (const Entry& e : entries) {
    os << (e.kind == ModelKind::P3 ? "P3" : "CUBE") << " " << e.genus << " d=";
    for (size_t i = 0; i < e.degrees.size(); ++i) {
      if (i) os << ",";
      os << e.degrees[i];
    }
    os << ";n=" << e.npoints << " " << e.value << " " << e.provenance << "\n";
  }
  return os.str();
}

const BaseTable::Entry* BaseTable::lookup(ModelKind kind, int genus, const IVec& degrees,
                                          int npoints) const {
  for (const Entry& e : entries)
    if (e.kind == kind && e.genus == genus && e.degrees == degrees && e.npoints == npoints)
      return &e;
  return nullptr;
}

namespace {

// Sorted degrees (cube side), point coefficients sorted descending, zero
// points dropped. Point labels are interchangeable for general blowup points
// and the three cube factors permute by automorphisms.
CurveClass canonical_form(const CurveClass& c, bool* changed) {
  IVec t = tuple_of(c);
  const ClassBasis& b = c.basis;
  IVec d(t.begin(), t.begin() + b.degree_slots());
  IVec a(t.begin() + b.degree_slots(), t.begin() + b.degree_slots() + b.points);
  IVec ds = d, as = a;
  std::sort(ds.rbegin(), ds.rend());
  std::sort(as.rbegin(), as.rend());
  while (!as.empty() && as.back() == 0) as.pop_back();
  if (changed) *changed = (ds != d) || (as != a);
  ClassBasis nb = b.kind == ModelKind::P3 ? ClassBasis::p3_side(static_cast<int>(as.size()))
                                          : ClassBasis::cube_side(static_cast<int>(as.size()));
  IVec nt = ds;
  nt.insert(nt.end(), as.begin(), as.end());
  return curve_from_tuple(nb, nt);
}

bool has_negative_degree(const CurveClass& c) {
  for (int i = 0; i < c.basis.degree_slots(); ++i)
    if (c.coords[i] < 0) return true;
  return false;
}

bool all_points_simple(const CurveClass& c) {
  IVec t = tuple_of(c);
  for (int i = 0; i < c.basis.points; ++i)
    if (t[c.basis.degree_slots() + i] != 1) return false;
  return true;
}

IVec degrees_of(const CurveClass& c) {
  IVec t = tuple_of(c);
  return IVec(t.begin(), t.begin() + c.basis.degree_slots());
}

// Rearranges a canonical cube-side class for the inverse correspondence: the
// special second point slot is padded with an unused blowup point and the
// actual coefficients occupy slots 1, 3, 4, ...
CurveClass arrange_for_crossing(const CurveClass& c) {
  IVec t = tuple_of(c);
  IVec a(t.begin() + 3, t.end());
  IVec na;
  na.push_back(a.empty() ? 0 : a.front());
  na.push_back(0);
  for (size_t i = 1; i < a.size(); ++i) na.push_back(a[i]);
  ClassBasis nb = ClassBasis::cube_side(static_cast<int>(na.size()));
  IVec nt(t.begin(), t.begin() + 3);
  nt.insert(nt.end(), na.begin(), na.end());
  return curve_from_tuple(nb, nt);
}

}  // namespace

ReductionTrace reduce(const GWQuery& query, const BaseTable& table) {
  ReductionTrace tr;
  GWQuery q = query;
  if (q.beta.basis.lines)
    fail(Errc::BasisModelMismatch, "reduction queries live on the side models");

  if (q.point_insertions > 0) {
    GWQuery descended = point_descent(q);
    tr.steps.push_back({"point-descent", curve_to_text(q.beta), curve_to_text(descended.beta),
                        "n=" + std::to_string(q.point_insertions) + " insertions traded for points"});
    q = descended;
  }
  if (vdim(q) != 0)
    fail(Errc::NonVdimZero,
         "query has dimension surplus " + std::to_string(vdim(q)) + " after descent");

  bool changed = false;
  CurveClass cur = canonical_form(q.beta, &changed);
  if (changed)
    tr.steps.push_back({"canonicalize", curve_to_text(q.beta), curve_to_text(cur),
                        "points relabeled, degrees sorted"});

  auto try_lookup = [&](const CurveClass& c) -> const BaseTable::Entry* {
    if (!all_points_simple(c)) return nullptr;
    return table.lookup(c.basis.kind, q.genus, degrees_of(c), c.basis.points);
  };

  auto finish_hit = [&](const CurveClass& c, const BaseTable::Entry* e) {
    tr.steps.push_back({"base-table-hit", curve_to_text(c), curve_to_text(c),
                        "value " + std::to_string(e->value) + " [" + e->provenance + "]"});
    tr.resolved = true;
    tr.value = e->value;
    tr.provenance = e->provenance;
  };

  // Guarded degree-lowering Cremona loop on the P3 side.
  auto cremona_loop = [&](CurveClass c) -> CurveClass {
    while (c.basis.kind == ModelKind::P3) {
      if (c.basis.points < 4) break;
      GuardResult g = p3_balance_guard(c);
      if (!g.ok) break;
      IVec t = tuple_of(c);
      i64 d = t[0];
      i64 dprime = 3 * d - 2 * (t[1] + t[2] + t[3] + t[4]);
      if (dprime >= d || dprime < 0) break;
      CurveClass img = cremona_p3(c);
      tr.steps.push_back({"cremona-p3", curve_to_text(c), curve_to_text(img),
                          "degree " + std::to_string(d) + " -> " + std::to_string(dprime)});
      bool ch = false;
      CurveClass canon = canonical_form(img, &ch);
      if (ch)
        tr.steps.push_back({"canonicalize", curve_to_text(img), curve_to_text(canon),
                            "points relabeled, degrees sorted"});
      c = canon;
    }
    return c;
  };

  for (int phase = 0; phase < 2; ++phase) {
    if (const auto* e = try_lookup(cur)) {
      finish_hit(cur, e);
      return tr;
    }
    if (cur.basis.kind == ModelKind::P3) {
      CurveClass reduced = cremona_loop(cur);
      if (!(reduced.coords == cur.coords && reduced.basis == cur.basis)) {
        cur = reduced;
        if (const auto* e = try_lookup(cur)) {
          finish_hit(cur, e);
          return tr;
        }
      }
    }
    if (phase == 1) break;

    // Cross to the other model once, when the side conditions hold.
    if (cur.basis.kind == ModelKind::Cube) {
      CurveClass arranged = arrange_for_crossing(cur);
      GuardResult g3 = cube_balance_guard(arranged);
      if (!g3.ok) break;
      tr.steps.push_back({"relabel-for-crossing", curve_to_text(cur), curve_to_text(arranged),
                          "unused point inserted in the special slot"});
      CurveClass crossed = cube_to_p3_class(arranged);
      GuardResult g2 = p3_balance_guard(crossed);
      if (!g2.ok) {
        tr.steps.pop_back();
        break;
      }
      tr.steps.push_back(
          {"thm1-inverse", curve_to_text(arranged), curve_to_text(crossed), "cross to P3 side"});
      bool ch = false;
      CurveClass canon = canonical_form(crossed, &ch);
      if (ch)
        tr.steps.push_back({"canonicalize", curve_to_text(crossed), curve_to_text(canon),
                            "points relabeled, degrees sorted"});
      cur = canon;
    } else {
      CurveClass padded = pad_points(cur, std::max(cur.basis.points, 4));
      GuardResult g2 = p3_balance_guard(padded);
      if (!g2.ok) break;
      CurveClass crossed = p3_to_cube_class(padded);
      GuardResult g3 = cube_balance_guard(crossed);
      if (!g3.ok) break;
      tr.steps.push_back(
          {"thm1", curve_to_text(padded), curve_to_text(crossed), "cross to cube side"});
      bool ch = false;
      CurveClass canon = canonical_form(crossed, &ch);
      if (ch)
        tr.steps.push_back({"canonicalize", curve_to_text(crossed), curve_to_text(canon),
                            "points relabeled, degrees sorted"});
      cur = canon;
    }
  }

  tr.resolved = false;
  tr.normal_form = curve_to_text(cur);
  tr.unresolved_reason = has_negative_degree(cur)
                             ? "normal form has a negative degree coefficient; no value is asserted"
                             : "no base table entry reachable";
  return tr;
}

}  // namespace ptx
