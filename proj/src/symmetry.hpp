#pragma once

#include <string>
#include <vector>

#include "classes.hpp"
#include "fan.hpp"
#include "intersection.hpp"

namespace ptx {

// A lattice map identifying two fans together with the induced permutation of
// rays and the transported map on curve classes (source basis -> target
// basis, plain coordinates).
struct ToricSymmetry {
  Mat3 matrix;
  std::vector<int> ray_perm;
  IMat pushforward;
  ClassBasis source;
  ClassBasis target;
};

// Transports curve classes along a fan isomorphism: relabel each curve-basis
// relation vector by the ray permutation and express it in the target basis.
ToricSymmetry symmetry_from_fan_iso(const IntersectionTable& src, const IntersectionTable& dst,
                                    const Mat3& matrix);

// The resolved Cremona involution of the permutohedral blowup of P3
// (reflection through the origin).
ToricSymmetry xi_symmetry();

// The involutive symmetry of the permutohedral blowup of the cube, given by
// the matrix with rows (-1,0,0), (-1,1,0), (-1,0,1).
ToricSymmetry zeta_symmetry();
Mat3 zeta_matrix_raw();

// The isomorphism between the two permutohedral models (the identity lattice
// map; both constructions subdivide to the same fan).
ToricSymmetry tau_symmetry();

// Closed-form coefficient transforms. Both accept the side model (no line
// slots, coefficients treated as the b = 0 sector) or the permutohedral
// model, and act as the identity on extra point slots.
CurveClass cremona_p3(const CurveClass& beta);
CurveClass cremona_cube(const CurveClass& beta);

// Pushforward along tau: P3-kind classes with k >= 4 points map to cube-kind
// classes with k - 2 points; extra points carry over in order.
CurveClass tau_pushforward(const CurveClass& beta);

// Applies a transported pushforward matrix to a class in the source basis.
CurveClass apply_symmetry(const ToricSymmetry& s, const CurveClass& beta);

}  // namespace ptx
