#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace ptx {

using i64 = std::int64_t;
using IVec = std::vector<i64>;
using IMat = std::vector<IVec>;

i64 gcd_i64(i64 a, i64 b);

struct Vec3 {
  i64 x = 0, y = 0, z = 0;

  i64 operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  bool operator==(const Vec3& o) const { return x == o.x && y == o.y && z == o.z; }
  bool operator!=(const Vec3& o) const { return !(*this == o); }
  bool operator<(const Vec3& o) const {
    if (x != o.x) return x < o.x;
    if (y != o.y) return y < o.y;
    return z < o.z;
  }
  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  bool is_zero() const { return x == 0 && y == 0 && z == 0; }
};

Vec3 cross(const Vec3& a, const Vec3& b);
bool is_primitive(const Vec3& v);
std::string to_string(const Vec3& v);

// 3x3 integer matrix, column-vector convention: w = M v.
struct Mat3 {
  std::array<std::array<i64, 3>, 3> m{};

  static Mat3 identity();
  static Mat3 from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2);
  static Mat3 from_rows(const Vec3& r0, const Vec3& r1, const Vec3& r2);

  i64 det() const;
  Mat3 adjugate() const;
  // Inverse when |det| = 1; fails otherwise.
  bool unimodular_inverse(Mat3& inv) const;
  Vec3 apply(const Vec3& v) const;
  Vec3 row(int i) const { return {m[i][0], m[i][1], m[i][2]}; }
  Vec3 column(int j) const { return {m[0][j], m[1][j], m[2][j]}; }
  Mat3 mul(const Mat3& o) const;
  bool operator==(const Mat3& o) const { return m == o.m; }
};

std::string to_string(const Mat3& M);

// Exact dense integer linear algebra for the small systems in this project
// (dimension <= 14, small entries).
int int_rank(IMat a);
i64 int_det(IMat a);

// Solves A x = b exactly over the rationals and reports an integral solution.
// Returns false if A is singular or the solution is not integral.
bool solve_int(const IMat& A, const IVec& b, IVec& x);

// Multiplies the full matrix by a vector.
IVec mat_apply(const IMat& A, const IVec& v);
IMat mat_mul(const IMat& A, const IMat& B);

}  // namespace ptx
