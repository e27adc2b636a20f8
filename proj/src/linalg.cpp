#include "linalg.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

#include "error.hpp"

namespace ptx {

i64 gcd_i64(i64 a, i64 b) {
  a = std::llabs(a);
  b = std::llabs(b);
  while (b != 0) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

bool is_primitive(const Vec3& v) {
  return gcd_i64(gcd_i64(v.x, v.y), v.z) == 1;
}

std::string to_string(const Vec3& v) {
  std::ostringstream os;
  os << "(" << v.x << "," << v.y << "," << v.z << ")";
  return os.str();
}

Mat3 Mat3::identity() {
  Mat3 r;
  for (int i = 0; i < 3; ++i) r.m[i][i] = 1;
  return r;
}

Mat3 Mat3::from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
  Mat3 r;
  const Vec3* cols[3] = {&c0, &c1, &c2};
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i) r.m[i][j] = (*cols[j])[i];
  return r;
}

Mat3 Mat3::from_rows(const Vec3& r0, const Vec3& r1, const Vec3& r2) {
  Mat3 r;
  const Vec3* rows[3] = {&r0, &r1, &r2};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = (*rows[i])[j];
  return r;
}

i64 Mat3::det() const {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Mat3 Mat3::adjugate() const {
  Mat3 a;
  a.m[0][0] = m[1][1] * m[2][2] - m[1][2] * m[2][1];
  a.m[0][1] = m[0][2] * m[2][1] - m[0][1] * m[2][2];
  a.m[0][2] = m[0][1] * m[1][2] - m[0][2] * m[1][1];
  a.m[1][0] = m[1][2] * m[2][0] - m[1][0] * m[2][2];
  a.m[1][1] = m[0][0] * m[2][2] - m[0][2] * m[2][0];
  a.m[1][2] = m[0][2] * m[1][0] - m[0][0] * m[1][2];
  a.m[2][0] = m[1][0] * m[2][1] - m[1][1] * m[2][0];
  a.m[2][1] = m[0][1] * m[2][0] - m[0][0] * m[2][1];
  a.m[2][2] = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  return a;
}

bool Mat3::unimodular_inverse(Mat3& inv) const {
  i64 d = det();
  if (d != 1 && d != -1) return false;
  Mat3 a = adjugate();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) inv.m[i][j] = a.m[i][j] * d;
  return true;
}

Vec3 Mat3::apply(const Vec3& v) const {
  return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
          m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
          m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
}

Mat3 Mat3::mul(const Mat3& o) const {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      i64 s = 0;
      for (int k = 0; k < 3; ++k) s += m[i][k] * o.m[k][j];
      r.m[i][j] = s;
    }
  return r;
}

std::string to_string(const Mat3& M) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < 3; ++i) {
    os << "[" << M.m[i][0] << "," << M.m[i][1] << "," << M.m[i][2] << "]";
    if (i < 2) os << ",";
  }
  os << "]";
  return os.str();
}

namespace {

// Exact rational scalar with normalized sign and gcd-reduced terms.
struct Rat {
  i64 num = 0;
  i64 den = 1;

  Rat() = default;
  Rat(i64 n) : num(n), den(1) {}
  Rat(i64 n, i64 d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    if (num == 0) {
      den = 1;
      return;
    }
    i64 g = gcd_i64(num, den);
    num /= g;
    den /= g;
  }
  bool zero() const { return num == 0; }
  Rat operator+(const Rat& o) const { return Rat(num * o.den + o.num * den, den * o.den); }
  Rat operator-(const Rat& o) const { return Rat(num * o.den - o.num * den, den * o.den); }
  Rat operator*(const Rat& o) const { return Rat(num * o.num, den * o.den); }
  Rat operator/(const Rat& o) const { return Rat(num * o.den, den * o.num); }
};

}  // namespace

int int_rank(IMat a) {
  if (a.empty()) return 0;
  size_t rows = a.size(), cols = a[0].size();
  int rank = 0;
  size_t pr = 0;
  for (size_t pc = 0; pc < cols && pr < rows; ++pc) {
    size_t piv = pr;
    while (piv < rows && a[piv][pc] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[pr], a[piv]);
    for (size_t r = 0; r < rows; ++r) {
      if (r == pr || a[r][pc] == 0) continue;
      // integer row combination: a[r] <- a[pr][pc]*a[r] - a[r][pc]*a[pr]
      i64 f1 = a[pr][pc], f2 = a[r][pc];
      i64 g = gcd_i64(f1, f2);
      f1 /= g;
      f2 /= g;
      for (size_t c = 0; c < cols; ++c) a[r][c] = f1 * a[r][c] - f2 * a[pr][c];
      // keep entries small
      i64 rg = 0;
      for (size_t c = 0; c < cols; ++c) rg = gcd_i64(rg, a[r][c]);
      if (rg > 1)
        for (size_t c = 0; c < cols; ++c) a[r][c] /= rg;
    }
    ++pr;
    ++rank;
  }
  return rank;
}

i64 int_det(IMat a) {
  size_t n = a.size();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  i64 sign = 1;
  i64 prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t piv = k + 1;
      while (piv < n && a[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

bool solve_int(const IMat& A, const IVec& b, IVec& x) {
  size_t n = A.size();
  if (n == 0 || A[0].size() != n || b.size() != n) return false;
  std::vector<std::vector<Rat>> w(n, std::vector<Rat>(n + 1));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) w[i][j] = Rat(A[i][j]);
    w[i][n] = Rat(b[i]);
  }
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && w[piv][col].zero()) ++piv;
    if (piv == n) return false;
    std::swap(w[col], w[piv]);
    Rat p = w[col][col];
    for (size_t j = col; j <= n; ++j) w[col][j] = w[col][j] / p;
    for (size_t r = 0; r < n; ++r) {
      if (r == col || w[r][col].zero()) continue;
      Rat f = w[r][col];
      for (size_t j = col; j <= n; ++j) w[r][j] = w[r][j] - f * w[col][j];
    }
  }
  x.assign(n, 0);
  for (size_t i = 0; i < n; ++i) {
    if (w[i][n].den != 1) return false;
    x[i] = w[i][n].num;
  }
  return true;
}

IMat mat_mul(const IMat& A, const IMat& B) {
  if (A.empty() || B.empty() || A[0].size() != B.size()) fail(Errc::Internal, "mat_mul: shape mismatch");
  IMat C(A.size(), IVec(B[0].size(), 0));
  for (size_t i = 0; i < A.size(); ++i)
    for (size_t k = 0; k < B.size(); ++k) {
      if (A[i][k] == 0) continue;
      for (size_t j = 0; j < B[0].size(); ++j) C[i][j] += A[i][k] * B[k][j];
    }
  return C;
}

IVec mat_apply(const IMat& A, const IVec& v) {
  IVec r(A.size(), 0);
  for (size_t i = 0; i < A.size(); ++i) {
    if (A[i].size() != v.size()) fail(Errc::Internal, "mat_apply: shape mismatch");
    i64 s = 0;
    for (size_t j = 0; j < v.size(); ++j) s += A[i][j] * v[j];
    r[i] = s;
  }
  return r;
}

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::CenterNotInFan: return "CenterNotInFan";
    case Errc::NonSmoothInput: return "NonSmoothInput";
    case Errc::NonCompleteInput: return "NonCompleteInput";
    case Errc::BasisModelMismatch: return "BasisModelMismatch";
    case Errc::NotAWall: return "NotAWall";
    case Errc::RayPermutationFailure: return "RayPermutationFailure";
    case Errc::NonVdimZero: return "NonVdimZero";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace ptx
