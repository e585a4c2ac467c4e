#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>

namespace etg {

/// Fixed-size real 3-vector with value semantics.
struct Vec3 {
  std::array<double, 3> v{0.0, 0.0, 0.0};

  constexpr Vec3() = default;
  constexpr Vec3(double a, double b, double c) : v{a, b, c} {}

  constexpr double& operator[](std::size_t i) { return v[i]; }
  constexpr double operator[](std::size_t i) const { return v[i]; }

  constexpr Vec3& operator+=(const Vec3& o) {
    for (std::size_t i = 0; i < 3; ++i) v[i] += o.v[i];
    return *this;
  }
  constexpr Vec3& operator-=(const Vec3& o) {
    for (std::size_t i = 0; i < 3; ++i) v[i] -= o.v[i];
    return *this;
  }
  constexpr Vec3& operator*=(double s) {
    for (auto& x : v) x *= s;
    return *this;
  }

  friend constexpr Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
  friend constexpr Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
  friend constexpr Vec3 operator*(Vec3 a, double s) { return a *= s; }
  friend constexpr Vec3 operator*(double s, Vec3 a) { return a *= s; }
  friend constexpr Vec3 operator-(Vec3 a) { return a *= -1.0; }
  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

constexpr double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline double norm(const Vec3& a) { return std::hypot(a[0], a[1], a[2]); }

inline double max_abs(const Vec3& a) {
  return std::max({std::abs(a[0]), std::abs(a[1]), std::abs(a[2])});
}

inline double max_abs_diff(const Vec3& a, const Vec3& b) { return max_abs(a - b); }

/// A point x = (x1, x2, x3) in the body frame.
using State = Vec3;

}  // namespace etg
