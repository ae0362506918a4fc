#include "delzant/invariants.hpp"

#include <cstdio>
#include <numbers>

namespace delzant {

PiScaled::PiScaled(Rational coefficient, int pi_power)
    : coefficient_(std::move(coefficient)), pi_power_(pi_power) {
  if (pi_power < 0) throw DomainError("negative power of pi");
}

namespace {

void require_same_power(const PiScaled& a, const PiScaled& b) {
  if (!a.is_zero() && !b.is_zero() && a.pi_power() != b.pi_power()) {
    throw DomainError("cannot combine " + a.str() + " and " + b.str() +
                      ": different powers of pi");
  }
}

int common_power(const PiScaled& a, const PiScaled& b) {
  return a.is_zero() ? b.pi_power() : a.pi_power();
}

}  // namespace

PiScaled operator+(const PiScaled& a, const PiScaled& b) {
  require_same_power(a, b);
  return {a.coefficient_ + b.coefficient_, common_power(a, b)};
}

PiScaled operator-(const PiScaled& a, const PiScaled& b) {
  require_same_power(a, b);
  return {a.coefficient_ - b.coefficient_, common_power(a, b)};
}

bool operator==(const PiScaled& a, const PiScaled& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a.pi_power_ == b.pi_power_ && a.coefficient_ == b.coefficient_;
}

std::partial_ordering operator<=>(const PiScaled& a, const PiScaled& b) {
  if (!a.is_zero() && !b.is_zero() && a.pi_power_ != b.pi_power_) {
    return std::partial_ordering::unordered;
  }
  if (a.coefficient_ < b.coefficient_) return std::partial_ordering::less;
  if (a.coefficient_ > b.coefficient_) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

double PiScaled::to_double() const {
  double scale = 1.0;
  for (int i = 0; i < pi_power_; ++i) scale *= std::numbers::pi;
  return delzant::to_double(coefficient_) * scale;
}

std::string PiScaled::str() const {
  if (is_zero()) return "0";
  std::string out = to_string(coefficient_);
  if (pi_power_ >= 1) out += " pi";
  if (pi_power_ >= 2) out += "^" + std::to_string(pi_power_);
  return out;
}

SurfaceTopology SurfaceTopology::from_fixed_points(int count) {
  SurfaceTopology t;
  t.euler = count;
  t.b2 = count - 2;
  // b+ = 1 for these rational surfaces, so τ = 1 - (b2 - 1).
  t.signature = 4 - count;
  if (t.c1_squared() != 12 - t.euler) throw std::logic_error("inconsistent topology");
  return t;
}

std::array<PiScaled, 2> futaki_vector(const MomentPolygon& polygon) {
  const Rational perimeter = lambda_perimeter(polygon);
  const Vector2 d = displacement(polygon);
  return {PiScaled(-4 * perimeter * d.x, 1), PiScaled(-4 * perimeter * d.y, 1)};
}

std::array<PiScaled, 2> futaki_vector_per_edge(const MomentPolygon& polygon) {
  const Point center = interior_barycenter(polygon);
  Rational f1 = 0, f2 = 0;
  for (const auto& e : polygon.edges()) {
    const Point mid = e.midpoint();
    f1 += (mid.x - center.x) * e.lambda_length;
    f2 += (mid.y - center.y) * e.lambda_length;
  }
  return {PiScaled(-4 * f1, 1), PiScaled(-4 * f2, 1)};
}

namespace {

PiScaled norm_sq_from(const PolygonMeasures& m) {
  return {16 * m.lambda_perimeter * m.lambda_perimeter * m.quadratic_form(), 2};
}

}  // namespace

PiScaled futaki_norm_sq(const MomentPolygon& polygon) {
  return norm_sq_from(compute_measures(polygon));
}

Rational virtual_action(const PolygonMeasures& m) { return virtual_action_from(m); }

Rational virtual_action(const MomentPolygon& polygon) {
  return virtual_action(compute_measures(polygon));
}

PiScaled calabi_lower_bound(const MomentPolygon& polygon) {
  return {32 * virtual_action(polygon), 2};
}

ChernVolume chern_and_volume(const MomentPolygon& polygon) {
  return {lambda_perimeter(polygon), 2 * area(polygon)};
}

SurfaceTopology topology(const MomentPolygon& polygon) {
  if (const auto report = is_delzant(polygon); !report) {
    const auto& bad = report.offenders.front();
    throw DomainError("topology requires a Delzant polygon; vertex " + to_string(bad.point) +
                      " has determinant " + bad.determinant.str());
  }
  return SurfaceTopology::from_fixed_points(static_cast<int>(polygon.size()));
}

namespace {

PiScaled weyl_from(const SurfaceTopology& t, const Rational& action) {
  return {Rational(-12 * t.signature) + Rational(8, 3) * action, 2};
}

}  // namespace

PiScaled weyl_lower_bound(const MomentPolygon& polygon) {
  return weyl_from(topology(polygon), virtual_action(polygon));
}

ActionReport action_report(const MomentPolygon& polygon) {
  ActionReport r;
  r.measures = compute_measures(polygon);
  const auto& m = r.measures;
  r.delzant = static_cast<bool>(is_delzant(polygon));
  r.chern_pairing = m.lambda_perimeter;
  r.volume_pairing = 2 * m.area;
  r.futaki = {PiScaled(-4 * m.lambda_perimeter * m.displacement.x, 1),
              PiScaled(-4 * m.lambda_perimeter * m.displacement.y, 1)};
  r.quad_form = m.quadratic_form();
  r.futaki_norm_sq = norm_sq_from(m);
  r.virtual_action = virtual_action(m);
  r.calabi_bound = PiScaled(32 * r.virtual_action, 2);
  if (r.delzant) {
    const auto t = SurfaceTopology::from_fixed_points(static_cast<int>(polygon.size()));
    r.topology = t;
    r.weyl_bound = weyl_from(t, r.virtual_action);
    // ∫|R|² = -8π²(χ+3τ) + C/4,  ∫|r|² = -8π²(2χ+3τ) + C/2,  C = 32π²A
    r.riemann_bound = PiScaled(Rational(-8 * (t.euler + 3 * t.signature)) + 8 * r.virtual_action, 2);
    r.ricci_bound =
        PiScaled(Rational(-8 * (2 * t.euler + 3 * t.signature)) + 16 * r.virtual_action, 2);
  }
  return r;
}

namespace {

std::string decimal(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::string invariants_csv_header(bool with_float) {
  std::string h =
      "perimeter,area,d1,d2,quad_form,action,futaki1_coeff,futaki2_coeff,calabi_coeff,euler,"
      "signature,weyl_coeff,riemann_coeff,ricci_coeff";
  if (with_float) h += ",action_float,calabi_float,weyl_float";
  return h;
}

std::string invariants_csv_row(const ActionReport& r, bool with_float) {
  const auto& m = r.measures;
  std::string row = to_string(m.lambda_perimeter) + ',' + to_string(m.area) + ',' +
                    to_string(m.displacement.x) + ',' + to_string(m.displacement.y) + ',' +
                    to_string(r.quad_form) + ',' + to_string(r.virtual_action) + ',' +
                    to_string(r.futaki[0].coefficient()) + ',' +
                    to_string(r.futaki[1].coefficient()) + ',' +
                    to_string(r.calabi_bound.coefficient()) + ',';
  if (r.topology) {
    row += std::to_string(r.topology->euler) + ',' + std::to_string(r.topology->signature) + ',' +
           to_string(r.weyl_bound->coefficient()) + ',' +
           to_string(r.riemann_bound->coefficient()) + ',' +
           to_string(r.ricci_bound->coefficient());
  } else {
    row += ",,,,";
  }
  if (with_float) {
    row += ',' + decimal(to_double(r.virtual_action)) + ',' + decimal(r.calabi_bound.to_double()) +
           ',' + (r.weyl_bound ? decimal(r.weyl_bound->to_double()) : std::string());
  }
  return row;
}

}  // namespace delzant
