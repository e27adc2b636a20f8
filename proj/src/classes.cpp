#include "classes.hpp"

#include <sstream>

#include "error.hpp"

namespace ptx {

const char* const kP3PairLabels[6] = {"12", "13", "14", "23", "24", "34"};
const char* const kP3TripleLabels[4] = {"123", "124", "134", "234"};
const char* const kCubePairLabels[6] = {"13", "15", "35", "24", "26", "46"};
const char* const kCubeTripleLabels[2] = {"135", "246"};

ClassBasis ClassBasis::p3_side(int k) {
  if (k < 0) fail(Errc::InvalidArgument, "negative point count");
  return ClassBasis{ModelKind::P3, k, false};
}

ClassBasis ClassBasis::cube_side(int k) {
  if (k < 0) fail(Errc::InvalidArgument, "negative point count");
  return ClassBasis{ModelKind::Cube, k, false};
}

ClassBasis ClassBasis::perm_p3(int k) {
  if (k < 4) fail(Errc::InvalidArgument, "permutohedral P3 model needs k >= 4");
  return ClassBasis{ModelKind::P3, k, true};
}

ClassBasis ClassBasis::perm_cube(int k) {
  if (k < 2) fail(Errc::InvalidArgument, "permutohedral cube model needs k >= 2");
  return ClassBasis{ModelKind::Cube, k, true};
}

std::string ClassBasis::curve_name(int slot) const {
  int ds = degree_slots();
  if (slot < ds) return kind == ModelKind::P3 ? "h" : "h" + std::to_string(slot + 1);
  slot -= ds;
  if (slot < points) {
    if (kind == ModelKind::P3 && slot < 4) return std::string("e") + kP3TripleLabels[slot];
    if (kind == ModelKind::Cube && slot < 2) return std::string("e") + kCubeTripleLabels[slot];
    return "e" + std::to_string(slot + 1);
  }
  slot -= points;
  return std::string("f") + (kind == ModelKind::P3 ? kP3PairLabels[slot] : kCubePairLabels[slot]);
}

std::string ClassBasis::divisor_name(int slot) const {
  int ds = degree_slots();
  if (slot < ds) return kind == ModelKind::P3 ? "H" : "H" + std::to_string(slot + 1);
  slot -= ds;
  if (slot < points) {
    if (kind == ModelKind::P3 && slot < 4) return std::string("E") + kP3TripleLabels[slot];
    if (kind == ModelKind::Cube && slot < 2) return std::string("E") + kCubeTripleLabels[slot];
    return "E" + std::to_string(slot + 1);
  }
  slot -= points;
  return std::string("F") + (kind == ModelKind::P3 ? kP3PairLabels[slot] : kCubePairLabels[slot]);
}

std::string ClassBasis::model_tag() const {
  std::string base = kind == ModelKind::P3 ? "P3" : "CUBE";
  if (lines) base = "PERM-" + base;
  return base + "(k=" + std::to_string(points) + ")";
}

CurveClass::CurveClass(ClassBasis b, IVec c) : basis(b), coords(std::move(c)) {
  if (static_cast<int>(coords.size()) != basis.rank())
    fail(Errc::BasisModelMismatch, "curve class has wrong coefficient count");
}

DivisorClass::DivisorClass(ClassBasis b, IVec c) : basis(b), coords(std::move(c)) {
  if (static_cast<int>(coords.size()) != basis.rank())
    fail(Errc::BasisModelMismatch, "divisor class has wrong coefficient count");
}

IVec curve_to_tuple(const CurveClass& c) {
  IVec t = c.coords;
  for (int i = c.basis.degree_slots(); i < c.basis.rank(); ++i) t[i] = -t[i];
  return t;
}

CurveClass curve_from_tuple(const ClassBasis& basis, const IVec& tuple) {
  if (static_cast<int>(tuple.size()) != basis.rank())
    fail(Errc::BasisModelMismatch, "coefficient tuple has wrong length");
  IVec c = tuple;
  for (int i = basis.degree_slots(); i < basis.rank(); ++i) c[i] = -c[i];
  return CurveClass(basis, c);
}

static void append_group(std::ostringstream& os, const char* name, const IVec& v, size_t lo,
                         size_t hi) {
  os << name << "=";
  for (size_t i = lo; i < hi; ++i) {
    if (i > lo) os << ",";
    os << v[i];
  }
}

std::string curve_to_text(const CurveClass& c) {
  IVec t = curve_to_tuple(c);
  const ClassBasis& b = c.basis;
  std::ostringstream os;
  os << b.model_tag() << ": ";
  append_group(os, "d", t, 0, b.degree_slots());
  if (b.points > 0) {
    os << "; ";
    append_group(os, "a", t, b.degree_slots(), b.degree_slots() + b.points);
  }
  if (b.lines) {
    os << "; ";
    append_group(os, "b", t, b.degree_slots() + b.points, t.size());
  }
  return os.str();
}

std::string divisor_to_text(const DivisorClass& d) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < d.basis.rank(); ++i) {
    i64 c = d.coords[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    i64 a = c < 0 ? -c : c;
    if (a != 1) os << a << "*";
    os << d.basis.divisor_name(i);
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

void require_same_basis(const ClassBasis& a, const ClassBasis& b) {
  if (a != b)
    fail(Errc::BasisModelMismatch,
         "basis mismatch: " + a.model_tag() + " vs " + b.model_tag());
}

}  // namespace ptx
