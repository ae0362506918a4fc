#include "delzant/measures.hpp"

namespace delzant {

namespace {

std::vector<Rational> lambda_lengths(const MomentPolygon& polygon) {
  std::vector<Rational> out;
  out.reserve(polygon.size());
  for (const auto& e : polygon.edges()) out.push_back(e.lambda_length);
  return out;
}

}  // namespace

Rational area(const MomentPolygon& polygon) {
  // Shoelace; independent of the fan triangulation used for moments.
  Rational twice = 0;
  const auto& v = polygon.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) twice += cross(v[i], v[(i + 1) % v.size()]);
  return twice / 2;
}

Rational lambda_perimeter(const MomentPolygon& polygon) {
  Rational total = 0;
  for (const auto& e : polygon.edges()) total += e.lambda_length;
  return total;
}

Point interior_barycenter(const MomentPolygon& polygon) {
  const auto m = detail::fan_moments<Rational>(polygon.vertices());
  return {m.m10 / m.m00, m.m01 / m.m00};
}

Point boundary_barycenter(const MomentPolygon& polygon) {
  Point weighted{0, 0};
  Rational total = 0;
  for (const auto& e : polygon.edges()) {
    weighted = weighted + e.lambda_length * e.midpoint();
    total += e.lambda_length;
  }
  return (1 / total) * weighted;
}

Vector2 displacement(const MomentPolygon& polygon) {
  return boundary_barycenter(polygon) - interior_barycenter(polygon);
}

Sym2 inertia_matrix(const MomentPolygon& polygon) { return compute_measures(polygon).inertia; }

Rational monomial_moment(const MomentPolygon& polygon, int i, int j) {
  if (i < 0 || j < 0 || i + j > 2) {
    throw DomainError("monomial moments are available for degree <= 2, got x^" +
                      std::to_string(i) + " y^" + std::to_string(j));
  }
  const auto m = detail::fan_moments<Rational>(polygon.vertices());
  switch (i * 3 + j) {
    case 0: return m.m00;
    case 1: return m.m01;
    case 2: return m.m02;
    case 3: return m.m10;
    case 4: return m.m11;
    default: return m.m20;
  }
}

PolygonMeasures compute_measures(const MomentPolygon& polygon) {
  const auto lambda = lambda_lengths(polygon);
  return detail::measures_from<Rational>(polygon.vertices(), lambda);
}

std::string measures_csv_header() {
  return "area,perimeter,xbar1,xbar2,bx1,bx2,d1,d2,pi11,pi12,pi22";
}

std::string measures_csv_row(const PolygonMeasures& m) {
  std::string row;
  for (const Rational* value :
       {&m.area, &m.lambda_perimeter, &m.interior_barycenter.x, &m.interior_barycenter.y,
        &m.boundary_barycenter.x, &m.boundary_barycenter.y, &m.displacement.x, &m.displacement.y,
        &m.inertia.xx, &m.inertia.xy, &m.inertia.yy}) {
    if (!row.empty()) row += ',';
    row += to_string(*value);
  }
  return row;
}

}  // namespace delzant
