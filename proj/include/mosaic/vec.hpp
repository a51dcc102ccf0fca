#pragma once

#include "mosaic/rational.hpp"

#include <array>
#include <cmath>
#include <compare>

namespace mosaic {

/// Point / vector with exact or floating scalar. 2D data uses z == 0.
template <class T>
struct Vec3 {
  T x{}, y{}, z{};

  Vec3() = default;
  Vec3(T px, T py) : x(std::move(px)), y(std::move(py)), z(T(0)) {}
  Vec3(T px, T py, T pz) : x(std::move(px)), y(std::move(py)), z(std::move(pz)) {}

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  Vec3 operator*(const T& s) const { return {x * s, y * s, z * s}; }
  Vec3& operator+=(const Vec3& o) {
    x += o.x; y += o.y; z += o.z;
    return *this;
  }

  bool operator==(const Vec3& o) const { return x == o.x && y == o.y && z == o.z; }
  bool operator!=(const Vec3& o) const { return !(*this == o); }
  // lexicographic, for ordered maps
  bool operator<(const Vec3& o) const {
    if (x != o.x) return x < o.x;
    if (y != o.y) return y < o.y;
    return z < o.z;
  }
};

template <class T>
T dot(const Vec3<T>& u, const Vec3<T>& v) {
  return u.x * v.x + u.y * v.y + u.z * v.z;
}

template <class T>
Vec3<T> cross(const Vec3<T>& u, const Vec3<T>& v) {
  return {u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x};
}

/// z-component of the planar cross product, the 2D orientation form.
template <class T>
T cross2(const Vec3<T>& u, const Vec3<T>& v) {
  return u.x * v.y - u.y * v.x;
}

/// det[b-a, c-a, d-a]; positive when d is on the counterclockwise side.
template <class T>
T orient3(const Vec3<T>& a, const Vec3<T>& b, const Vec3<T>& c, const Vec3<T>& d) {
  return dot(cross(b - a, c - a), d - a);
}

template <class T>
Vec3<double> vec_to_double(const Vec3<T>& v) {
  return {to_double(v.x), to_double(v.y), to_double(v.z)};
}

inline double norm(const Vec3<double>& v) { return std::sqrt(dot(v, v)); }

inline Vec3<double> normalized(const Vec3<double>& v) {
  double n = norm(v);
  return {v.x / n, v.y / n, v.z / n};
}

}  // namespace mosaic
