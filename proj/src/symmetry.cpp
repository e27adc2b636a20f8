#include "symmetry.hpp"

#include "error.hpp"

namespace ptx {

ToricSymmetry symmetry_from_fan_iso(const IntersectionTable& src, const IntersectionTable& dst,
                                    const Mat3& matrix) {
  const LatticeFan& a = src.fan();
  const LatticeFan& b = dst.fan();
  if (a.ray_count() != b.ray_count())
    fail(Errc::RayPermutationFailure, "fans have different ray counts");
  std::vector<int> perm(a.ray_count(), -1);
  std::vector<bool> hit(b.ray_count(), false);
  for (int i = 0; i < a.ray_count(); ++i) {
    int j = b.ray_index(matrix.apply(a.rays()[i]));
    if (j < 0 || hit[j])
      fail(Errc::RayPermutationFailure,
           "matrix does not map the ray set onto the target ray set");
    perm[i] = j;
    hit[j] = true;
  }
  i64 d = matrix.det();
  if (d != 1 && d != -1) fail(Errc::RayPermutationFailure, "matrix is not unimodular");

  const int rank = src.basis().rank();
  if (rank != dst.basis().rank()) fail(Errc::BasisModelMismatch, "basis ranks differ");
  IMat push(rank, IVec(rank, 0));
  for (int j = 0; j < rank; ++j) {
    const IVec& rel = src.curve_basis_relations()[j];
    IVec moved(b.ray_count(), 0);
    for (int r = 0; r < a.ray_count(); ++r) moved[perm[r]] = rel[r];
    CurveClass img = dst.curve_from_relation(moved);
    for (int i = 0; i < rank; ++i) push[i][j] = img.coords[i];
  }
  IMat copy = push;
  i64 pd = int_det(copy);
  if (pd != 1 && pd != -1) fail(Errc::Internal, "pushforward is not invertible over Z");
  return ToricSymmetry{matrix, perm, push, src.basis(), dst.basis()};
}

namespace {

const IntersectionTable& perm_p3_table() {
  static IntersectionTable t(LatticeFan::permutohedral_p3(), ClassBasis::perm_p3());
  return t;
}

const IntersectionTable& perm_cube_table() {
  static IntersectionTable t(LatticeFan::permutohedral_cube(), ClassBasis::perm_cube());
  return t;
}

}  // namespace

ToricSymmetry xi_symmetry() {
  Mat3 m;
  for (int i = 0; i < 3; ++i) m.m[i][i] = -1;
  return symmetry_from_fan_iso(perm_p3_table(), perm_p3_table(), m);
}

Mat3 zeta_matrix_raw() {
  Mat3 m;
  m.m[0][0] = -1; m.m[0][1] = 0; m.m[0][2] = 0;
  m.m[1][0] = -1; m.m[1][1] = 1; m.m[1][2] = 0;
  m.m[2][0] = -1; m.m[2][1] = 0; m.m[2][2] = 1;
  return m;
}

ToricSymmetry zeta_symmetry() {
  return symmetry_from_fan_iso(perm_cube_table(), perm_cube_table(), zeta_matrix_raw());
}

ToricSymmetry tau_symmetry() {
  return symmetry_from_fan_iso(perm_p3_table(), perm_cube_table(), Mat3::identity());
}

CurveClass apply_symmetry(const ToricSymmetry& s, const CurveClass& beta) {
  require_same_basis(beta.basis, s.source);
  return CurveClass(s.target, mat_apply(s.pushforward, beta.coords));
}

namespace {

struct TupleView {
  IVec t;
  int deg;
  int pts;
  int lines;

  i64 d(int i) const { return t[i]; }
  i64& d(int i) { return t[i]; }
  i64 a(int i) const { return i < pts ? t[deg + i] : 0; }  // 0-based
  void set_a(int i, i64 v) { t[deg + i] = v; }
  i64 b(int i) const { return lines ? t[deg + pts + i] : 0; }
  void set_b(int i, i64 v) {
    if (lines) t[deg + pts + i] = v;
  }
};

TupleView view(const CurveClass& c) {
  return TupleView{curve_to_tuple(c), c.basis.degree_slots(), c.basis.points,
                   c.basis.line_slots()};
}

}  // namespace

CurveClass cremona_p3(const CurveClass& beta) {
  const ClassBasis& basis = beta.basis;
  if (basis.kind != ModelKind::P3 || basis.points < 4)
    fail(Errc::BasisModelMismatch, "P3 Cremona needs a P3-kind class with k >= 4");
  TupleView in = view(beta);
  TupleView out = in;

  i64 asum = in.a(0) + in.a(1) + in.a(2) + in.a(3);
  i64 bsum = 0;
  for (int i = 0; i < 6; ++i) bsum += in.b(i);

  // Fan-derived closed form for the reflection through the origin. The pair
  // slot complementary to {i,j} in {12,13,14,23,24,34} is the reversed slot.
  out.d(0) = 3 * in.d(0) - 2 * asum - bsum;
  // Point slot i names the triple omitting vertex 4-i (1-based); its image
  // picks up the fibers of the lines through that vertex.
  static const int pair_members[6][2] = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
  for (int i = 0; i < 4; ++i) {
    i64 v = in.d(0) - (asum - in.a(i));
    int opposite = 4 - i;
    for (int z = 0; z < 6; ++z)
      if (pair_members[z][0] == opposite || pair_members[z][1] == opposite) v -= in.b(z);
    out.set_a(i, v);
  }
  for (int z = 0; z < 6; ++z) out.set_b(z, in.b(5 - z));
  return curve_from_tuple(basis, out.t);
}

CurveClass cremona_cube(const CurveClass& beta) {
  const ClassBasis& basis = beta.basis;
  if (basis.kind != ModelKind::Cube || basis.points < 2)
    fail(Errc::BasisModelMismatch, "cube Cremona needs a cube-kind class with k >= 2");
  TupleView in = view(beta);
  TupleView out = in;

  out.d(0) = in.d(0) + in.d(2) - in.a(0) - in.a(1) - in.b(1) - in.b(4);
  out.d(1) = in.d(1) + in.d(2) - in.a(0) - in.a(1) - in.b(0) - in.b(3);
  out.d(2) = in.d(2);
  out.set_a(0, in.d(2) - in.a(1) - in.b(3) - in.b(4));
  out.set_a(1, in.d(2) - in.a(0) - in.b(0) - in.b(1));
  // fiber classes permute in the orbit pattern (15)(24)(3)(6)
  static const int fperm[6] = {4, 3, 2, 1, 0, 5};
  for (int z = 0; z < 6; ++z) out.set_b(z, in.b(fperm[z]));
  return curve_from_tuple(basis, out.t);
}

CurveClass tau_pushforward(const CurveClass& beta) {
  const ClassBasis& basis = beta.basis;
  if (basis.kind != ModelKind::P3 || basis.points < 4)
    fail(Errc::BasisModelMismatch, "tau pushforward needs a P3-kind class with k >= 4");
  static const ToricSymmetry tau = tau_symmetry();

  // Lift to the permutohedral basis with the same point count, apply the
  // transported matrix on the toric block, carry extras over in order.
  ClassBasis out_basis = basis.lines ? ClassBasis::perm_cube(basis.points - 2)
                                     : ClassBasis::cube_side(basis.points - 2);
  IVec in_toric(11, 0), out(out_basis.rank(), 0);
  in_toric[0] = beta.coords[0];
  for (int i = 0; i < 4; ++i) in_toric[1 + i] = beta.coords[1 + i];
  for (int i = 0; i < basis.line_slots(); ++i) in_toric[5 + i] = beta.coords[1 + basis.points + i];
  IVec out_toric = mat_apply(tau.pushforward, in_toric);
  for (int i = 0; i < 3; ++i) out[i] = out_toric[i];
  for (int i = 0; i < 2; ++i) out[3 + i] = out_toric[3 + i];
  for (int i = 0; i < basis.points - 4; ++i) out[5 + i] = beta.coords[5 + i];
  for (int i = 0; i < out_basis.line_slots(); ++i)
    out[3 + (basis.points - 2) + i] = out_toric[5 + i];
  if (!basis.lines)
    for (int i = 0; i < 6; ++i)
      if (out_toric[5 + i] != 0) fail(Errc::Internal, "side-model class acquired a fiber part");
  return CurveClass(out_basis, out);
}

}  // namespace ptx
