#ifndef TRIAD_COMPLEX3_HPP
#define TRIAD_COMPLEX3_HPP

#include <array>
#include <cmath>
#include <complex>
#include <cstdlib>

namespace triad {

using Complex = std::complex<double>;

/// Real 3-vector.
using Vec3 = std::array<double, 3>;

/// Complex 3-vector amplitude. Dot products follow the unconjugated
/// convention a.b = sum_j a_j b_j; norms conjugate the second factor.
struct Complex3 {
  std::array<Complex, 3> v{};

  Complex& operator[](std::size_t i) { return v[i]; }
  const Complex& operator[](std::size_t i) const { return v[i]; }

  Complex3& operator+=(const Complex3& o) {
    v[0] += o.v[0];
    v[1] += o.v[1];
    v[2] += o.v[2];
    return *this;
  }
};

inline Complex3 operator+(Complex3 a, const Complex3& b) { return a += b; }

inline Complex3 operator-(const Complex3& a, const Complex3& b) {
  return {{{a[0] - b[0], a[1] - b[1], a[2] - b[2]}}};
}

inline Complex3 operator*(Complex s, const Complex3& a) {
  return {{{s * a[0], s * a[1], s * a[2]}}};
}

inline Complex3 operator*(double s, const Complex3& a) {
  return {{{s * a[0], s * a[1], s * a[2]}}};
}

inline Complex3 conj(const Complex3& a) {
  return {{{std::conj(a[0]), std::conj(a[1]), std::conj(a[2])}}};
}

/// Unconjugated dot product sum_j a_j b_j.
inline Complex dot(const Complex3& a, const Complex3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline Complex3 cross(const Complex3& a, const Complex3& b) {
  return {{{a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]}}};
}

/// Scalar triple product a x b . c.
inline Complex triple(const Complex3& a, const Complex3& b, const Complex3& c) {
  return dot(cross(a, b), c);
}

/// |a|^2 = sum_j a_j a_j*, real and >= 0.
inline double norm2(const Complex3& a) {
  return std::norm(a[0]) + std::norm(a[1]) + std::norm(a[2]);
}

inline double norm(const Complex3& a) { return std::sqrt(norm2(a)); }

/// Componentwise product with a real diagonal, diag(d) a.
inline Complex3 dmul(const Vec3& d, const Complex3& a) {
  return {{{d[0] * a[0], d[1] * a[1], d[2] * a[2]}}};
}

inline double max_abs(const Complex3& a) {
  return std::max({std::abs(a[0]), std::abs(a[1]), std::abs(a[2])});
}

inline bool all_finite(const Complex3& a) {
  for (const auto& c : a.v)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  return true;
}

inline Complex3 to_complex3(const Vec3& r) {
  return {{{Complex(r[0], 0), Complex(r[1], 0), Complex(r[2], 0)}}};
}

// Vec3 helpers.

inline Vec3 operator+(const Vec3& a, const Vec3& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

inline Vec3 operator-(const Vec3& a, const Vec3& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

inline Vec3 operator*(double s, const Vec3& a) {
  return {s * a[0], s * a[1], s * a[2]};
}

inline double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1],
          a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

}  // namespace triad

#endif  // TRIAD_COMPLEX3_HPP
