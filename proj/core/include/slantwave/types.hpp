#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace slantwave {

using Complex = std::complex<double>;

/// Spatial vector sized for 1D/2D problems. The inactive component stays zero,
/// so 1D code can use the same type without branching.
struct Vec {
  double x = 0.0;
  double y = 0.0;

  double operator[](int a) const { return a == 0 ? x : y; }
  double& operator[](int a) { return a == 0 ? x : y; }
};

inline Vec operator+(Vec a, Vec b) { return {a.x + b.x, a.y + b.y}; }
inline Vec operator-(Vec a, Vec b) { return {a.x - b.x, a.y - b.y}; }
inline Vec operator*(double s, Vec a) { return {s * a.x, s * a.y}; }
inline double dot(Vec a, Vec b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec a) { return std::sqrt(dot(a, a)); }

/// Complex-valued spatial vector (gradients of complex fields).
struct CVec {
  Complex x{};
  Complex y{};

  Complex operator[](int a) const { return a == 0 ? x : y; }
  Complex& operator[](int a) { return a == 0 ? x : y; }
};

inline CVec operator+(CVec a, CVec b) { return {a.x + b.x, a.y + b.y}; }
inline CVec operator-(CVec a, CVec b) { return {a.x - b.x, a.y - b.y}; }
inline CVec operator*(double s, CVec a) { return {s * a.x, s * a.y}; }
inline CVec operator*(Complex s, CVec a) { return {s * a.x, s * a.y}; }

/// Real vector dotted into a complex vector (no conjugation).
inline Complex dot(Vec a, CVec b) { return a.x * b.x + a.y * b.y; }
/// Hermitian dot: conj(a) . b.
inline Complex hdot(CVec a, CVec b) {
  return std::conj(a.x) * b.x + std::conj(a.y) * b.y;
}

/// Symmetric coefficient matrix value at one point (1x1 or 2x2).
struct SymMat {
  int dim = 1;
  double a11 = 1.0;
  double a12 = 0.0;
  double a22 = 1.0;

  Vec apply(Vec v) const {
    if (dim == 1) return {a11 * v.x, 0.0};
    return {a11 * v.x + a12 * v.y, a12 * v.x + a22 * v.y};
  }
  CVec apply(CVec v) const {
    if (dim == 1) return {a11 * v.x, Complex{}};
    return {a11 * v.x + a12 * v.y, a12 * v.x + a22 * v.y};
  }
  /// v^T A v for real v.
  double quad(Vec v) const {
    if (dim == 1) return a11 * v.x * v.x;
    return a11 * v.x * v.x + 2.0 * a12 * v.x * v.y + a22 * v.y * v.y;
  }
  /// conj(v)^T A v; real because A is real symmetric.
  double quad(CVec v) const {
    if (dim == 1) return a11 * std::norm(v.x);
    return a11 * std::norm(v.x) + a22 * std::norm(v.y) +
           2.0 * a12 * std::real(std::conj(v.x) * v.y);
  }
  double min_eigenvalue() const {
    if (dim == 1) return a11;
    const double m = 0.5 * (a11 + a22);
    const double r = std::sqrt(0.25 * (a11 - a22) * (a11 - a22) + a12 * a12);
    return m - r;
  }
  double max_eigenvalue() const {
    if (dim == 1) return a11;
    const double m = 0.5 * (a11 + a22);
    const double r = std::sqrt(0.25 * (a11 - a22) * (a11 - a22) + a12 * a12);
    return m + r;
  }
};

inline SymMat operator+(SymMat a, SymMat b) {
  return {a.dim, a.a11 + b.a11, a.a12 + b.a12, a.a22 + b.a22};
}
inline SymMat operator*(double s, SymMat a) {
  return {a.dim, s * a.a11, s * a.a12, s * a.a22};
}

}  // namespace slantwave
