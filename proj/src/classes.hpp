#pragma once

#include <string>
#include <vector>

#include "linalg.hpp"

namespace ptx {

enum class ModelKind { P3, Cube };

// Chow-group basis of one model. Coefficient slot layout:
//
//   P3 kind:   [h | e1..ek | f12 f13 f14 f23 f24 f34]      (f-block iff lines)
//   Cube kind: [h1 h2 h3 | e1..ek | f13 f15 f35 f24 f26 f46]
//
// P3-side point slots e1..e4 name the exceptional classes over the four torus
// fixed points in the order E123, E124, E134, E234; f-slots carry the ray
// pair of the blown-up invariant line. Cube-side e1 = E135, e2 = E246; the
// line classes h1, h2, h3 are the curve classes of the third, second and
// first P1 factor respectively (h_j is cut out by the two hyperplane classes
// other than H_{4-j}), which is the index convention the coefficient
// transforms below are written in. Divisor slots H1, H2, H3 follow the plain
// factor order. Slots beyond the toric points are formal extra point blowups.
struct ClassBasis {
  ModelKind kind = ModelKind::P3;
  int points = 0;
  bool lines = false;

  static ClassBasis p3_side(int k);
  static ClassBasis cube_side(int k);
  static ClassBasis perm_p3(int k = 4);
  static ClassBasis perm_cube(int k = 2);

  int degree_slots() const { return kind == ModelKind::P3 ? 1 : 3; }
  int line_slots() const { return lines ? 6 : 0; }
  int rank() const { return degree_slots() + points + line_slots(); }
  int toric_points() const { return kind == ModelKind::P3 ? 4 : 2; }

  std::string curve_name(int slot) const;
  std::string divisor_name(int slot) const;
  std::string model_tag() const;  // e.g. "P3(k=6)", "PERM-CUBE(k=2)"

  bool operator==(const ClassBasis& o) const {
    return kind == o.kind && points == o.points && lines == o.lines;
  }
  bool operator!=(const ClassBasis& o) const { return !(*this == o); }
};

// P3-side f-slot ray pairs and point-slot ray triples, in slot order.
extern const char* const kP3PairLabels[6];   // "12","13","14","23","24","34"
extern const char* const kP3TripleLabels[4]; // "123","124","134","234"
extern const char* const kCubePairLabels[6]; // "13","15","35","24","26","46"
extern const char* const kCubeTripleLabels[2];

// Curve and divisor classes are plain integer coordinate vectors in the
// basis above. The (d; a; b) coefficient tuple used by the coefficient
// transforms and the text grammar represents the class
//   d*h - sum a_i e_i - sum b_j f_j,
// so a- and b-slots flip sign between the two encodings.
struct CurveClass {
  ClassBasis basis;
  IVec coords;

  CurveClass() = default;
  CurveClass(ClassBasis b, IVec c);
};

struct DivisorClass {
  ClassBasis basis;
  IVec coords;

  DivisorClass() = default;
  DivisorClass(ClassBasis b, IVec c);
};

IVec curve_to_tuple(const CurveClass& c);
CurveClass curve_from_tuple(const ClassBasis& basis, const IVec& tuple);

std::string curve_to_text(const CurveClass& c);     // ClassSpec grammar
std::string divisor_to_text(const DivisorClass& d); // symbolic sum

void require_same_basis(const ClassBasis& a, const ClassBasis& b);

}  // namespace ptx
