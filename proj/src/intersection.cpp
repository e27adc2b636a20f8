#include "intersection.hpp"

#include <algorithm>

#include "error.hpp"

namespace ptx {

namespace {

// Coordinates of v in the (unimodular) generator basis of a smooth cone.
Vec3 coords_in_cone(const LatticeFan& fan, const Cone& c, const Vec3& v) {
  Mat3 B = Mat3::from_columns(fan.rays()[c.rays[0]], fan.rays()[c.rays[1]], fan.rays()[c.rays[2]]);
  Mat3 Binv;
  if (!B.unimodular_inverse(Binv)) fail(Errc::NonSmoothInput, "cone is not unimodular");
  return Binv.apply(v);
}

// Ray-divisor coefficients of the pullback of a seed-fan ray divisor to a
// refinement: for a refined ray lying in seed cone sigma, the coefficient is
// its coordinate along the seed ray in sigma's generator basis.
IVec pullback_ray_divisor(const LatticeFan& seed, int seed_ray, const LatticeFan& refined) {
  IVec out(refined.ray_count(), 0);
  for (int i = 0; i < refined.ray_count(); ++i) {
    const Vec3& v = refined.rays()[i];
    bool placed = false;
    for (const Cone& c : seed.max_cones()) {
      Vec3 t = coords_in_cone(seed, c, v);
      if (t.x < 0 || t.y < 0 || t.z < 0) continue;
      placed = true;
      for (int j = 0; j < 3; ++j)
        if (c.rays[j] == seed_ray) out[i] = t[j];
      break;
    }
    if (!placed) fail(Errc::Internal, "refined ray escapes the seed fan");
  }
  return out;
}

}  // namespace

IntersectionTable::IntersectionTable(LatticeFan fan, ClassBasis basis)
    : fan_(std::move(fan)), basis_(basis) {
  if (!fan_.is_smooth() || !fan_.is_complete())
    fail(Errc::NonCompleteInput, "intersection table needs a smooth complete fan");

  const bool p3 = basis_.kind == ModelKind::P3;
  const char prefix = p3 ? 'v' : 'u';
  const int base_rays = p3 ? 4 : 6;

  // The basis must match the fan: toric point/line slots need their
  // exceptional rays, and extra formal points have no fan realization here.
  int expected_rays = base_rays + std::min(basis_.points, basis_.toric_points()) +
                      (basis_.lines ? 6 : 0);
  if (basis_.points > basis_.toric_points() || expected_rays != fan_.ray_count())
    fail(Errc::BasisModelMismatch,
         "fan does not realize basis " + basis_.model_tag());

  auto ray = [&](const std::string& l) {
    int r = fan_.ray_index(l);
    if (r < 0) fail(Errc::BasisModelMismatch, "fan lacks ray " + l);
    return r;
  };

  const int n = fan_.ray_count();
  const int rank = basis_.rank();
  if (rank != n - 3) fail(Errc::BasisModelMismatch, "basis rank does not match the fan");

  // Curve basis as relation vectors.
  curve_rel_.assign(rank, IVec(n, 0));
  int slot = 0;
  if (p3) {
    for (int i = 1; i <= 4; ++i) curve_rel_[0][ray("v" + std::to_string(i))] = 1;
    slot = 1;
  } else {
    // h1, h2, h3 are the factor-3, factor-2, factor-1 line classes.
    const char* pairs[3][2] = {{"u5", "u6"}, {"u3", "u4"}, {"u1", "u2"}};
    for (int j = 0; j < 3; ++j) {
      curve_rel_[j][ray(pairs[j][0])] = 1;
      curve_rel_[j][ray(pairs[j][1])] = 1;
    }
    slot = 3;
  }
  const char* const* triples = p3 ? kP3TripleLabels : kCubeTripleLabels;
  for (int i = 0; i < basis_.points; ++i, ++slot) {
    std::string t = triples[i];
    int er = ray(prefix + t);
    curve_rel_[slot][er] = -1;
    for (char ch : t) curve_rel_[slot][ray(prefix + std::string(1, ch))] = 1;
  }
  if (basis_.lines) {
    const char* const* pairs = p3 ? kP3PairLabels : kCubePairLabels;
    for (int i = 0; i < 6; ++i, ++slot) {
      std::string t = pairs[i];
      int fr = ray(prefix + t);
      curve_rel_[slot][fr] = -1;
      for (char ch : t) curve_rel_[slot][ray(prefix + std::string(1, ch))] = 1;
    }
  }
  for (const IVec& rel : curve_rel_) {
    Vec3 s{0, 0, 0};
    for (int i = 0; i < n; ++i) s = s + Vec3{rel[i] * fan_.rays()[i].x, rel[i] * fan_.rays()[i].y,
                                             rel[i] * fan_.rays()[i].z};
    if (!s.is_zero()) fail(Errc::Internal, "curve basis vector is not a relation");
  }

  // Divisor basis as ray-divisor coordinate vectors. Exceptional classes are
  // the orbit divisors of their rays; hyperplane classes pull back from the
  // seed fan.
  divisor_vec_.assign(rank, IVec(n, 0));
  LatticeFan seed = p3 ? LatticeFan::p3() : LatticeFan::cube();
  slot = 0;
  if (p3) {
    divisor_vec_[0] = pullback_ray_divisor(seed, seed.ray_index("v1"), fan_);
    slot = 1;
  } else {
    for (int j = 0; j < 3; ++j)
      divisor_vec_[j] = pullback_ray_divisor(seed, seed.ray_index("u" + std::to_string(2 * j + 1)),
                                             fan_);
    slot = 3;
  }
  for (int i = 0; i < basis_.points; ++i, ++slot)
    divisor_vec_[slot][ray(prefix + std::string(triples[i]))] = 1;
  if (basis_.lines) {
    const char* const* pairs = p3 ? kP3PairLabels : kCubePairLabels;
    for (int i = 0; i < 6; ++i, ++slot)
      divisor_vec_[slot][ray(prefix + std::string(pairs[i]))] = 1;
  }

  // Pairing matrix and its exact inverses; the bases are dual up to signs, so
  // the determinant must be a unit.
  pairing_.assign(rank, IVec(rank, 0));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      i64 s = 0;
      for (int r = 0; r < n; ++r) s += divisor_vec_[i][r] * curve_rel_[j][r];
      pairing_[i][j] = s;
    }
  i64 pd = int_det(pairing_);
  if (pd != 1 && pd != -1) fail(Errc::Internal, "pairing matrix is not unimodular");
  auto invert = [rank](const IMat& M) {
    IMat inv(rank, IVec(rank, 0));
    for (int j = 0; j < rank; ++j) {
      IVec e(rank, 0), x;
      e[j] = 1;
      if (!solve_int(M, e, x)) fail(Errc::Internal, "pairing matrix not invertible over Z");
      for (int i = 0; i < rank; ++i) inv[i][j] = x[i];
    }
    return inv;
  };
  pairing_inv_ = invert(pairing_);
  IMat pt(rank, IVec(rank, 0));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) pt[i][j] = pairing_[j][i];
  pairing_inv_transposed_ = invert(pt);
}

DivisorClass IntersectionTable::ray_divisor_class(int r) const {
  if (r < 0 || r >= fan_.ray_count()) fail(Errc::InvalidArgument, "ray index out of range");
  const int rank = basis_.rank();
  // [D_r] . c_j is the j-th curve-basis coefficient at r; solve against the
  // pairing to express [D_r] in the divisor basis.
  IVec y(rank, 0);
  for (int j = 0; j < rank; ++j) y[j] = curve_rel_[j][r];
  IVec x = mat_apply(pairing_inv_transposed_, y);
  return DivisorClass(basis_, x);
}

DivisorClass IntersectionTable::ray_divisor_class(const std::string& label) const {
  int r = fan_.ray_index(label);
  if (r < 0) fail(Errc::InvalidArgument, "no ray labeled " + label);
  return ray_divisor_class(r);
}

IVec IntersectionTable::wall_relation(const Cone& wall) const {
  if (wall.dim() != 2) fail(Errc::NotAWall, "wall must be 2-dimensional");
  const Wall* found = nullptr;
  for (const Wall& w : fan_.walls())
    if (w.cone == wall) {
      found = &w;
      break;
    }
  if (!found) fail(Errc::NotAWall, "cone is not a wall of the fan");
  auto other_ray = [&](int cone_idx) {
    for (int r : fan_.max_cones()[cone_idx].rays)
      if (r != wall.rays[0] && r != wall.rays[1]) return r;
    fail(Errc::Internal, "degenerate wall");
  };
  int u = other_ray(found->cone_a);
  int up = other_ray(found->cone_b);
  // v_u' = c1 v_w1 + c2 v_w2 + c3 v_u with c3 = -1 on a smooth wall.
  Mat3 B = Mat3::from_columns(fan_.rays()[wall.rays[0]], fan_.rays()[wall.rays[1]],
                              fan_.rays()[u]);
  Mat3 Binv;
  if (!B.unimodular_inverse(Binv)) fail(Errc::NonSmoothInput, "wall cone is not unimodular");
  Vec3 c = Binv.apply(fan_.rays()[up]);
  if (c.z != -1) fail(Errc::Internal, "wall relation has unexpected shape");
  IVec rel(fan_.ray_count(), 0);
  rel[up] += 1;
  rel[u] += 1;
  rel[wall.rays[0]] -= c.x;
  rel[wall.rays[1]] -= c.y;
  return rel;
}

CurveClass IntersectionTable::curve_from_relation(const IVec& rel) const {
  const int rank = basis_.rank();
  IVec z(rank, 0);
  for (int i = 0; i < rank; ++i) {
    i64 s = 0;
    for (int r = 0; r < fan_.ray_count(); ++r) s += divisor_vec_[i][r] * rel[r];
    z[i] = s;
  }
  IVec t = mat_apply(pairing_inv_, z);
  // Full consistency: the coefficients must reproduce the relation vector.
  IVec back(fan_.ray_count(), 0);
  for (int j = 0; j < rank; ++j)
    for (int r = 0; r < fan_.ray_count(); ++r) back[r] += t[j] * curve_rel_[j][r];
  if (back != rel) fail(Errc::Internal, "relation is not in the span of the curve basis");
  return CurveClass(basis_, t);
}

CurveClass IntersectionTable::wall_curve_class(const Cone& wall) const {
  return curve_from_relation(wall_relation(wall));
}

IVec IntersectionTable::divisor_ray_coords(const DivisorClass& D) const {
  require_same_basis(D.basis, basis_);
  IVec out(fan_.ray_count(), 0);
  for (int i = 0; i < basis_.rank(); ++i)
    for (int r = 0; r < fan_.ray_count(); ++r) out[r] += D.coords[i] * divisor_vec_[i][r];
  return out;
}

i64 IntersectionTable::pair(const DivisorClass& D, const CurveClass& C) const {
  require_same_basis(D.basis, basis_);
  require_same_basis(C.basis, basis_);
  i64 s = 0;
  for (int i = 0; i < basis_.rank(); ++i)
    for (int j = 0; j < basis_.rank(); ++j) s += D.coords[i] * pairing_[i][j] * C.coords[j];
  return s;
}

DivisorClass IntersectionTable::canonical_class() const {
  const int rank = basis_.rank();
  // K = -sum over rays of D_rho; extract coefficients through the pairing.
  IVec y(rank, 0);
  for (int j = 0; j < rank; ++j) {
    i64 s = 0;
    for (int r = 0; r < fan_.ray_count(); ++r) s += curve_rel_[j][r];
    y[j] = -s;
  }
  IVec x = mat_apply(pairing_inv_transposed_, y);
  return DivisorClass(basis_, x);
}

std::pair<bool, std::vector<Cone>> IntersectionTable::nef_on_invariant_curves(
    const DivisorClass& D) const {
  IVec ray_coords = divisor_ray_coords(D);
  std::vector<Cone> violators;
  for (const Wall& w : fan_.walls()) {
    IVec rel = wall_relation(w.cone);
    i64 s = 0;
    for (int r = 0; r < fan_.ray_count(); ++r) s += ray_coords[r] * rel[r];
    if (s < 0) violators.push_back(w.cone);
  }
  return {violators.empty(), violators};
}

namespace {

// Formal pairing blocks, identical to the fan-derived tables on the toric
// slots (asserted in the test suite).
i64 formal_pairing_entry(const ClassBasis& b, int div_slot, int curve_slot) {
  int ds = b.degree_slots();
  if (div_slot < ds && curve_slot < ds) {
    if (b.kind == ModelKind::P3) return 1;
    return curve_slot == ds - 1 - div_slot ? 1 : 0;  // H_j pairs the factor-j line h_{4-j}
  }
  if (div_slot < ds || curve_slot < ds) return 0;
  return div_slot == curve_slot ? -1 : 0;
}

}  // namespace

i64 intersect(const DivisorClass& D, const CurveClass& C) {
  require_same_basis(D.basis, C.basis);
  const ClassBasis& b = D.basis;
  i64 s = 0;
  for (int i = 0; i < b.rank(); ++i) {
    if (D.coords[i] == 0) continue;
    for (int j = 0; j < b.rank(); ++j)
      s += D.coords[i] * formal_pairing_entry(b, i, j) * C.coords[j];
  }
  return s;
}

DivisorClass canonical_class(const ClassBasis& b) {
  IVec c(b.rank(), 0);
  int ds = b.degree_slots();
  for (int i = 0; i < ds; ++i) c[i] = b.kind == ModelKind::P3 ? -4 : -2;
  for (int i = 0; i < b.points; ++i) c[ds + i] = 2;
  for (int i = 0; i < b.line_slots(); ++i) c[ds + b.points + i] = 1;
  return DivisorClass(b, c);
}

i64 anticanonical_degree(const CurveClass& C) {
  DivisorClass K = canonical_class(C.basis);
  return -intersect(K, C);
}

}  // namespace ptx
