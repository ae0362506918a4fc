#pragma once

#include <string>

#include "delzant/rational.hpp"

namespace delzant {

/// A point or displacement of the plane. Instantiated with Rational for the
/// exact pipeline and with double for the optimizer's fast path.
template <class T>
struct BasicPoint {
  T x{};
  T y{};

  friend bool operator==(const BasicPoint&, const BasicPoint&) = default;
  friend BasicPoint operator+(const BasicPoint& a, const BasicPoint& b) {
    return {a.x + b.x, a.y + b.y};
  }
  friend BasicPoint operator-(const BasicPoint& a, const BasicPoint& b) {
    return {a.x - b.x, a.y - b.y};
  }
  friend BasicPoint operator-(const BasicPoint& a) { return {-a.x, -a.y}; }
  friend BasicPoint operator*(const T& c, const BasicPoint& p) { return {c * p.x, c * p.y}; }
};

template <class T>
T cross(const BasicPoint<T>& a, const BasicPoint<T>& b) {
  return a.x * b.y - a.y * b.x;
}

template <class T>
T dot(const BasicPoint<T>& a, const BasicPoint<T>& b) {
  return a.x * b.x + a.y * b.y;
}

/// Symmetric 2x2 matrix [[xx, xy], [xy, yy]].
template <class T>
struct BasicSym2 {
  T xx{};
  T xy{};
  T yy{};

  friend bool operator==(const BasicSym2&, const BasicSym2&) = default;

  T det() const { return xx * yy - xy * xy; }
  T trace() const { return xx + yy; }

  /// v^T M^{-1} v via the adjugate; M must be invertible.
  T inverse_quadratic_form(const BasicPoint<T>& v) const {
    return (yy * v.x * v.x - 2 * xy * v.x * v.y + xx * v.y * v.y) / det();
  }

  BasicPoint<T> inverse_apply(const BasicPoint<T>& v) const {
    const T d = det();
    return {(yy * v.x - xy * v.y) / d, (xx * v.y - xy * v.x) / d};
  }
};

using Point = BasicPoint<Rational>;
using Vector2 = Point;
using Sym2 = BasicSym2<Rational>;

inline std::string to_string(const Point& p) {
  return "(" + to_string(p.x) + "," + to_string(p.y) + ")";
}

}  // namespace delzant
