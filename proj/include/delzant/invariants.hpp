#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>

#include "delzant/measures.hpp"
#include "delzant/polygon.hpp"
#include "delzant/rational.hpp"

namespace delzant {

/// An exact scalar  coefficient * π^power.  π is never evaluated in exact
/// paths; to_double() uses std::numbers::pi.
class PiScaled {
 public:
  PiScaled() = default;
  PiScaled(Rational coefficient, int pi_power);

  const Rational& coefficient() const { return coefficient_; }
  int pi_power() const { return pi_power_; }
  bool is_zero() const { return coefficient_ == 0; }

  /// Sum and difference need equal powers unless one side is zero.
  friend PiScaled operator+(const PiScaled& a, const PiScaled& b);
  friend PiScaled operator-(const PiScaled& a, const PiScaled& b);
  friend PiScaled operator-(const PiScaled& a) { return {-a.coefficient_, a.pi_power_}; }
  friend PiScaled operator*(const PiScaled& a, const PiScaled& b) {
    return {a.coefficient_ * b.coefficient_, a.pi_power_ + b.pi_power_};
  }
  friend PiScaled operator*(const Rational& c, const PiScaled& a) {
    return {c * a.coefficient_, a.pi_power_};
  }

  /// Zero equals zero at any power; otherwise coefficient and power must match.
  friend bool operator==(const PiScaled& a, const PiScaled& b);
  /// Ordering of values with equal power (or where either is zero).
  friend std::partial_ordering operator<=>(const PiScaled& a, const PiScaled& b);

  double to_double() const;
  /// "0", "-4/9 pi", "256/39 pi^2"
  std::string str() const;

 private:
  Rational coefficient_{0};
  int pi_power_ = 0;
};

struct SurfaceTopology {
  int euler = 0;
  int signature = 0;
  int b2 = 0;

  /// From the number of torus-fixed points (= polygon vertices).
  static SurfaceTopology from_fixed_points(int count);
  /// c1^2 = 2χ + 3τ
  int c1_squared() const { return 2 * euler + 3 * signature; }
};

struct ChernVolume {
  Rational c1_dot_omega;  // |∂P|
  Rational omega_sq;      // 2|P|
};

struct ActionReport {
  bool delzant = true;  // false: values are polygon arithmetic only
  Rational chern_pairing;
  Rational volume_pairing;
  std::array<PiScaled, 2> futaki;
  PiScaled futaki_norm_sq;
  Rational quad_form;
  Rational virtual_action;
  PiScaled calabi_bound;
  std::optional<SurfaceTopology> topology;
  std::optional<PiScaled> weyl_bound;
  std::optional<PiScaled> riemann_bound;  // ∫|R|^2 of the extremal metric
  std::optional<PiScaled> ricci_bound;    // ∫|r|^2 of the extremal metric
  PolygonMeasures measures;

  /// (c1·Ω)^2 / Ω^2
  Rational kahler_einstein_part() const { return chern_pairing * chern_pairing / volume_pairing; }
};

/// F = -4π |∂P| D
std::array<PiScaled, 2> futaki_vector(const MomentPolygon& polygon);
/// F_k = -4π Σ_edges (midpoint_k - x̄_k) λ_edge
std::array<PiScaled, 2> futaki_vector_per_edge(const MomentPolygon& polygon);
/// 16π² |∂P|² D^T Π^{-1} D
PiScaled futaki_norm_sq(const MomentPolygon& polygon);

/// A = |∂P|²/2 (1/|P| + D^T Π^{-1} D)
Rational virtual_action(const MomentPolygon& polygon);
Rational virtual_action(const PolygonMeasures& m);

template <class T>
T virtual_action_from(const BasicMeasures<T>& m) {
  return m.lambda_perimeter * m.lambda_perimeter / 2 * (1 / m.area + m.quadratic_form());
}

/// 32π² A: the Calabi energy of an extremal metric in the class.
PiScaled calabi_lower_bound(const MomentPolygon& polygon);
ChernVolume chern_and_volume(const MomentPolygon& polygon);

/// Throws DomainError unless the polygon is Delzant.
SurfaceTopology topology(const MomentPolygon& polygon);
/// -12π²τ + (1/12)·32π²A. Throws DomainError unless Delzant.
PiScaled weyl_lower_bound(const MomentPolygon& polygon);

ActionReport action_report(const MomentPolygon& polygon);

/// CSV columns for one polygon (see invariants_csv_header()). With
/// `with_float`, decimal renderings of action, calabi and weyl are appended.
std::string invariants_csv_header(bool with_float = false);
std::string invariants_csv_row(const ActionReport& report, bool with_float = false);

}  // namespace delzant
