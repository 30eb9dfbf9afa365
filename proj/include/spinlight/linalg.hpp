// spinlight - small fixed-size real/complex vectors and matrices

#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "spinlight/errors.hpp"

namespace spinlight {

using cplx = std::complex<double>;

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
inline Vec3 operator*(double s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }
inline Vec3 operator*(const Vec3& a, double s) { return s * a; }
inline Vec3 operator/(const Vec3& a, double s) { return {a.x / s, a.y / s, a.z / s}; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm2(const Vec3& a) { return dot(a, a); }
inline double norm(const Vec3& a) { return std::sqrt(norm2(a)); }
inline Vec3 normalized(const Vec3& a) {
  const double n = norm(a);
  if (n == 0.0) throw InvalidInputError("cannot normalize a zero vector");
  return a / n;
}
inline bool is_finite(const Vec3& a) {
  return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z);
}

struct CVec3 {
  cplx x{}, y{}, z{};
  CVec3() = default;
  CVec3(cplx cx, cplx cy, cplx cz) : x(cx), y(cy), z(cz) {}
  CVec3(const Vec3& v) : x(v.x), y(v.y), z(v.z) {}
};

inline CVec3 operator+(const CVec3& a, const CVec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline CVec3 operator-(const CVec3& a, const CVec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline CVec3 operator-(const CVec3& a) { return {-a.x, -a.y, -a.z}; }
inline CVec3 operator*(cplx s, const CVec3& a) { return {s * a.x, s * a.y, s * a.z}; }
inline CVec3 operator*(const CVec3& a, cplx s) { return s * a; }
inline CVec3 operator*(double s, const CVec3& a) { return {s * a.x, s * a.y, s * a.z}; }
inline CVec3 operator/(const CVec3& a, cplx s) { return {a.x / s, a.y / s, a.z / s}; }

inline cplx dot(const CVec3& a, const CVec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline CVec3 cross(const CVec3& a, const CVec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline CVec3 cross(const Vec3& a, const CVec3& b) { return cross(CVec3(a), b); }
inline double norm2(const CVec3& a) {
  return std::norm(a.x) + std::norm(a.y) + std::norm(a.z);
}
inline double norm(const CVec3& a) { return std::sqrt(norm2(a)); }
inline Vec3 real(const CVec3& a) { return {a.x.real(), a.y.real(), a.z.real()}; }
inline Vec3 imag(const CVec3& a) { return {a.x.imag(), a.y.imag(), a.z.imag()}; }
inline bool is_finite(const CVec3& a) {
  return is_finite(real(a)) && is_finite(imag(a));
}

// 3x3 real matrix, row major.
struct Mat3 {
  std::array<std::array<double, 3>, 3> m{};

  static Mat3 identity() {
    Mat3 r;
    r.m[0][0] = r.m[1][1] = r.m[2][2] = 1.0;
    return r;
  }
  double& operator()(int i, int j) { return m[i][j]; }
  double operator()(int i, int j) const { return m[i][j]; }
};

inline Mat3 operator+(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = a.m[i][j] + b.m[i][j];
  return r;
}
inline Mat3 operator-(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = a.m[i][j] - b.m[i][j];
  return r;
}
inline Mat3 operator*(double s, const Mat3& a) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = s * a.m[i][j];
  return r;
}
inline Vec3 operator*(const Mat3& a, const Vec3& v) {
  return {a.m[0][0] * v.x + a.m[0][1] * v.y + a.m[0][2] * v.z,
          a.m[1][0] * v.x + a.m[1][1] * v.y + a.m[1][2] * v.z,
          a.m[2][0] * v.x + a.m[2][1] * v.y + a.m[2][2] * v.z};
}
inline CVec3 operator*(const Mat3& a, const CVec3& v) {
  return {a.m[0][0] * v.x + a.m[0][1] * v.y + a.m[0][2] * v.z,
          a.m[1][0] * v.x + a.m[1][1] * v.y + a.m[1][2] * v.z,
          a.m[2][0] * v.x + a.m[2][1] * v.y + a.m[2][2] * v.z};
}

inline double max_abs(const Mat3& a) {
  double r = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r = std::max(r, std::abs(a.m[i][j]));
  return r;
}

inline bool is_symmetric(const Mat3& a, double tol = 0.0) {
  const double scale = std::max(max_abs(a), 1e-300);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (std::abs(a.m[i][j] - a.m[j][i]) > tol * scale) return false;
  return true;
}

// Cholesky-based positive definiteness test for a symmetric 3x3 matrix.
inline bool is_positive_definite(const Mat3& a) {
  double l[3][3] = {};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j <= i; ++j) {
      double s = a.m[i][j];
      for (int k = 0; k < j; ++k) s -= l[i][k] * l[j][k];
      if (i == j) {
        if (s <= 0.0) return false;
        l[i][i] = std::sqrt(s);
      } else {
        l[i][j] = s / l[j][j];
      }
    }
  }
  return true;
}

inline double det(const Mat3& a) {
  return a.m[0][0] * (a.m[1][1] * a.m[2][2] - a.m[1][2] * a.m[2][1]) -
         a.m[0][1] * (a.m[1][0] * a.m[2][2] - a.m[1][2] * a.m[2][0]) +
         a.m[0][2] * (a.m[1][0] * a.m[2][1] - a.m[1][1] * a.m[2][0]);
}

inline Mat3 inverse(const Mat3& a) {
  const double d = det(a);
  if (d == 0.0) throw InvalidInputError("singular 3x3 matrix");
  Mat3 r;
  r.m[0][0] = (a.m[1][1] * a.m[2][2] - a.m[1][2] * a.m[2][1]) / d;
  r.m[0][1] = (a.m[0][2] * a.m[2][1] - a.m[0][1] * a.m[2][2]) / d;
  r.m[0][2] = (a.m[0][1] * a.m[1][2] - a.m[0][2] * a.m[1][1]) / d;
  r.m[1][0] = (a.m[1][2] * a.m[2][0] - a.m[1][0] * a.m[2][2]) / d;
  r.m[1][1] = (a.m[0][0] * a.m[2][2] - a.m[0][2] * a.m[2][0]) / d;
  r.m[1][2] = (a.m[0][2] * a.m[1][0] - a.m[0][0] * a.m[1][2]) / d;
  r.m[2][0] = (a.m[1][0] * a.m[2][1] - a.m[1][1] * a.m[2][0]) / d;
  r.m[2][1] = (a.m[0][1] * a.m[2][0] - a.m[0][0] * a.m[2][1]) / d;
  r.m[2][2] = (a.m[0][0] * a.m[1][1] - a.m[0][1] * a.m[1][0]) / d;
  return r;
}

struct Vec4 {
  std::array<double, 4> c{};
  double& operator[](int i) { return c[i]; }
  double operator[](int i) const { return c[i]; }
};

// 4x4 real matrix, row major. Index 0 is the time component.
struct Mat4 {
  std::array<std::array<double, 4>, 4> m{};

  static Mat4 identity() {
    Mat4 r;
    for (int i = 0; i < 4; ++i) r.m[i][i] = 1.0;
    return r;
  }
  double& operator()(int i, int j) { return m[i][j]; }
  double operator()(int i, int j) const { return m[i][j]; }
};

inline Mat4 operator-(const Mat4& a, const Mat4& b) {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r.m[i][j] = a.m[i][j] - b.m[i][j];
  return r;
}
inline Mat4 operator*(const Mat4& a, const Mat4& b) {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      double s = 0.0;
      for (int k = 0; k < 4; ++k) s += a.m[i][k] * b.m[k][j];
      r.m[i][j] = s;
    }
  return r;
}
inline Vec4 operator*(const Mat4& a, const Vec4& v) {
  Vec4 r;
  for (int i = 0; i < 4; ++i) {
    double s = 0.0;
    for (int k = 0; k < 4; ++k) s += a.m[i][k] * v[k];
    r[i] = s;
  }
  return r;
}

inline double max_abs(const Mat4& a) {
  double r = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r = std::max(r, std::abs(a.m[i][j]));
  return r;
}

inline bool is_symmetric(const Mat4& a, double tol = 0.0) {
  const double scale = std::max(max_abs(a), 1e-300);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (std::abs(a.m[i][j] - a.m[j][i]) > tol * scale) return false;
  return true;
}

// g(a, b) for a metric-like bilinear form.
inline double bilinear(const Mat4& g, const Vec4& a, const Vec4& b) {
  double s = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) s += g.m[i][j] * a[i] * b[j];
  return s;
}

// Determinant by LU decomposition with partial pivoting.
inline double det(const Mat4& a) {
  double lu[4][4];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) lu[i][j] = a.m[i][j];
  double d = 1.0;
  for (int k = 0; k < 4; ++k) {
    int p = k;
    for (int i = k + 1; i < 4; ++i)
      if (std::abs(lu[i][k]) > std::abs(lu[p][k])) p = i;
    if (lu[p][k] == 0.0) return 0.0;
    if (p != k) {
      for (int j = 0; j < 4; ++j) std::swap(lu[p][j], lu[k][j]);
      d = -d;
    }
    d *= lu[k][k];
    for (int i = k + 1; i < 4; ++i) {
      const double f = lu[i][k] / lu[k][k];
      for (int j = k; j < 4; ++j) lu[i][j] -= f * lu[k][j];
    }
  }
  return d;
}

// Gauss-Jordan inverse with partial pivoting.
inline Mat4 inverse(const Mat4& a) {
  double w[4][8];
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) w[i][j] = a.m[i][j];
    for (int j = 0; j < 4; ++j) w[i][4 + j] = (i == j) ? 1.0 : 0.0;
  }
  for (int k = 0; k < 4; ++k) {
    int p = k;
    for (int i = k + 1; i < 4; ++i)
      if (std::abs(w[i][k]) > std::abs(w[p][k])) p = i;
    if (w[p][k] == 0.0) throw InvalidInputError("singular 4x4 matrix");
    if (p != k)
      for (int j = 0; j < 8; ++j) std::swap(w[p][j], w[k][j]);
    const double piv = w[k][k];
    for (int j = 0; j < 8; ++j) w[k][j] /= piv;
    for (int i = 0; i < 4; ++i) {
      if (i == k) continue;
      const double f = w[i][k];
      if (f == 0.0) continue;
      for (int j = 0; j < 8; ++j) w[i][j] -= f * w[k][j];
    }
  }
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r.m[i][j] = w[i][4 + j];
  return r;
}

// Inverse of a symmetric matrix, symmetrized to kill roundoff skew.
inline Mat4 inverse_symmetric(const Mat4& a) {
  Mat4 r = inverse(a);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      const double s = 0.5 * (r.m[i][j] + r.m[j][i]);
      r.m[i][j] = r.m[j][i] = s;
    }
  return r;
}

// Eigenvalues of a symmetric 4x4 matrix by the cyclic Jacobi method.
inline std::array<double, 4> symmetric_eigenvalues(const Mat4& a) {
  double w[4][4];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) w[i][j] = a.m[i][j];
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) off += w[i][j] * w[i][j];
    if (off < 1e-300) break;
    for (int p = 0; p < 4; ++p)
      for (int q = p + 1; q < 4; ++q) {
        if (w[p][q] == 0.0) continue;
        const double theta = (w[q][q] - w[p][p]) / (2.0 * w[p][q]);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double cth = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * cth;
        for (int k = 0; k < 4; ++k) {
          const double wkp = w[k][p], wkq = w[k][q];
          w[k][p] = cth * wkp - s * wkq;
          w[k][q] = s * wkp + cth * wkq;
        }
        for (int k = 0; k < 4; ++k) {
          const double wpk = w[p][k], wqk = w[q][k];
          w[p][k] = cth * wpk - s * wqk;
          w[q][k] = s * wpk + cth * wqk;
        }
      }
  }
  return {w[0][0], w[1][1], w[2][2], w[3][3]};
}

}  // namespace spinlight
