#pragma once

#include <utility>
#include <vector>

#include "classes.hpp"
#include "fan.hpp"

namespace ptx {

// Intersection calculus on a smooth complete fan whose rays realize the
// given basis: curve classes are integer relations among the rays, divisor
// classes are integer combinations of the ray divisors, and the pairing of a
// ray divisor with a wall curve is the wall-relation coefficient at that ray.
class IntersectionTable {
 public:
  IntersectionTable(LatticeFan fan, ClassBasis basis);

  const LatticeFan& fan() const { return fan_; }
  const ClassBasis& basis() const { return basis_; }

  // Divisor class of the orbit closure of a ray, in the basis.
  DivisorClass ray_divisor_class(int ray) const;
  DivisorClass ray_divisor_class(const std::string& label) const;

  // Curve class of the invariant curve of a wall (a 2-dimensional cone).
  CurveClass wall_curve_class(const Cone& wall) const;

  // Integer relation vector of a wall over the rays.
  IVec wall_relation(const Cone& wall) const;

  i64 pair(const DivisorClass& D, const CurveClass& C) const;
  DivisorClass canonical_class() const;

  // Nefness on torus-invariant curves; second member lists violating walls.
  std::pair<bool, std::vector<Cone>> nef_on_invariant_curves(const DivisorClass& D) const;

  // Pairing matrix of (divisor basis) x (curve basis); unimodular.
  const IMat& pairing() const { return pairing_; }

  // Representing vectors over the rays.
  const IMat& curve_basis_relations() const { return curve_rel_; }
  const IMat& divisor_basis_vectors() const { return divisor_vec_; }

  // Expands a divisor class into ray-divisor coordinates.
  IVec divisor_ray_coords(const DivisorClass& D) const;

  // Expresses an arbitrary integer relation vector in the curve basis.
  CurveClass curve_from_relation(const IVec& rel) const;

 private:
  LatticeFan fan_;
  ClassBasis basis_;
  IMat curve_rel_;    // rank x nrays
  IMat divisor_vec_;  // rank x nrays
  IMat pairing_;      // rank x rank
  IMat pairing_inv_transposed_;  // integer inverse of pairing^T (|det| = 1)
  IMat pairing_inv_;
};

// Formal pairing for models with extra (non-toric) blowup points, where no
// fan is available. The toric block agrees with the fan-derived tables; the
// extra point slots carry the standard exceptional block E_i . e_i = -1.
i64 intersect(const DivisorClass& D, const CurveClass& C);
DivisorClass canonical_class(const ClassBasis& basis);
// -K . C for the model's canonical class.
i64 anticanonical_degree(const CurveClass& C);

}  // namespace ptx
