#pragma once

#include <span>
#include <string>
#include <vector>

#include "delzant/geometry.hpp"
#include "delzant/polygon.hpp"

namespace delzant {

/// Raw monomial moments  m_ij = ∫_P x^i y^j da  for i + j <= 2.
template <class T>
struct BasicMoments {
  T m00{}, m10{}, m01{}, m20{}, m11{}, m02{};
};

/// The measure-theoretic data of one polygon.
template <class T>
struct BasicMeasures {
  T area{};                                // |P|
  T lambda_perimeter{};                    // |∂P|, sum of edge lambda-lengths
  BasicPoint<T> interior_barycenter{};     // centroid of P under da
  BasicPoint<T> boundary_barycenter{};     // centroid of ∂P under dλ
  BasicPoint<T> displacement{};            // boundary - interior barycenter
  BasicSym2<T> inertia{};                  // second central moments

  /// D^T Π^{-1} D
  T quadratic_form() const { return inertia.inverse_quadratic_form(displacement); }
};

using PolygonMeasures = BasicMeasures<Rational>;

namespace detail {

/// Fan triangulation from vertex 0 with closed-form triangle integrals.
template <class T>
BasicMoments<T> fan_moments(std::span<const BasicPoint<T>> v) {
  BasicMoments<T> m;
  const auto& a = v[0];
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    const auto& b = v[i];
    const auto& c = v[i + 1];
    const T area = cross(b - a, c - a) / 2;
    const T sx = a.x + b.x + c.x;
    const T sy = a.y + b.y + c.y;
    m.m00 += area;
    m.m10 += area * sx / 3;
    m.m01 += area * sy / 3;
    m.m20 += area * (a.x * a.x + b.x * b.x + c.x * c.x + sx * sx) / 12;
    m.m11 += area * (a.x * a.y + b.x * b.y + c.x * c.y + sx * sy) / 12;
    m.m02 += area * (a.y * a.y + b.y * b.y + c.y * c.y + sy * sy) / 12;
  }
  return m;
}

/// Measures from counterclockwise vertices and per-edge lambda-lengths
/// (edge i from vertex i to vertex i + 1).
template <class T>
BasicMeasures<T> measures_from(std::span<const BasicPoint<T>> v, std::span<const T> lambda) {
  const std::size_t n = v.size();
  const BasicMoments<T> m = fan_moments(v);
  BasicMeasures<T> out;
  out.area = m.m00;
  out.interior_barycenter = {m.m10 / m.m00, m.m01 / m.m00};

  BasicPoint<T> weighted{};
  for (std::size_t i = 0; i < n; ++i) {
    out.lambda_perimeter += lambda[i];
    // ∫_edge x dλ = midpoint * lambda-length for linear integrands.
    weighted = weighted + lambda[i] * (v[i] + v[(i + 1) % n]);
  }
  out.boundary_barycenter = (T(1) / (2 * out.lambda_perimeter)) * weighted;
  out.displacement = out.boundary_barycenter - out.interior_barycenter;

  const auto& c = out.interior_barycenter;
  out.inertia.xx = m.m20 - m.m00 * c.x * c.x;
  out.inertia.xy = m.m11 - m.m00 * c.x * c.y;
  out.inertia.yy = m.m02 - m.m00 * c.y * c.y;
  return out;
}

}  // namespace detail

Rational area(const MomentPolygon& polygon);
Rational lambda_perimeter(const MomentPolygon& polygon);
Point interior_barycenter(const MomentPolygon& polygon);
Point boundary_barycenter(const MomentPolygon& polygon);
Vector2 displacement(const MomentPolygon& polygon);
Sym2 inertia_matrix(const MomentPolygon& polygon);

/// ∫_P x^i y^j da, exact. Requires i, j >= 0 and i + j <= 2.
Rational monomial_moment(const MomentPolygon& polygon, int i, int j);

PolygonMeasures compute_measures(const MomentPolygon& polygon);

/// Header and row for the measures CSV: every value exact "p/q".
std::string measures_csv_header();
std::string measures_csv_row(const PolygonMeasures& m);

}  // namespace delzant
