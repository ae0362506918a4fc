#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "delzant/polygon.hpp"
#include "delzant/rational.hpp"

namespace delzant {

// ---------------------------------------------------------------------------
// Closed-form reference values along the built-in families.

/// (2α³ + (4+3k)α² + 2(1+k)²α + k(k²+2)/2) / (α² + kα + k²/6); k >= 0, α > 0.
Rational hirzebruch_closed_form(std::int64_t k, const Rational& alpha);
/// d/dα of the above, by the quotient rule on exact polynomials. Also
/// defined at α = 0 when k > 0.
Rational hirzebruch_closed_form_derivative(std::int64_t k, const Rational& alpha);

/// Action of the two-point blow-up of CP2 as a ratio of bivariate
/// polynomials. Defined for α, β >= 0 (boundary values give blow-down limits).
Rational two_point_closed_form(const Rational& alpha, const Rational& beta);
std::array<Rational, 2> two_point_closed_form_gradient(const Rational& alpha, const Rational& beta);

/// The α = β restriction: a ratio of two sextics. Defined for α >= 0.
Rational symmetric_two_point_closed_form(const Rational& alpha);
Rational symmetric_two_point_closed_form_derivative(const Rational& alpha);

// ---------------------------------------------------------------------------
// Parametrized families of Delzant polygons.

enum class FamilyKind { hirzebruch, two_point, symmetric_two_point, chop };

/// Chop `vertex` of the base polygon by a corner of lambda-length equal to
/// parameter number `parameter`.
struct ChopSite {
  std::size_t vertex;
  std::size_t parameter;
};

/// Open interval (lo, hi); hi absent means +∞.
struct ParameterDomain {
  Rational lo;
  std::optional<Rational> hi;

  bool contains(const Rational& x) const { return x > lo && (!hi || x < *hi); }
  bool contains(double x) const;
};

class FamilySpec {
 public:
  static FamilySpec hirzebruch(std::int64_t k);
  static FamilySpec two_point();
  static FamilySpec symmetric_two_point();
  /// Base must be Delzant; sites must name distinct vertices and use the
  /// parameter indices 0..d-1. Each parameter's domain is bounded so that
  /// every chop stays strictly inside its adjacent edges, even when both
  /// ends of an edge are chopped.
  static FamilySpec chop(MomentPolygon base, std::vector<ChopSite> sites);

  FamilyKind kind() const { return kind_; }
  std::int64_t k() const { return k_; }
  std::size_t dimension() const { return domain_.size(); }
  const std::vector<ParameterDomain>& domain() const { return domain_; }
  const std::vector<std::string>& parameter_names() const { return names_; }
  const std::optional<MomentPolygon>& base() const { return base_; }
  const std::vector<ChopSite>& sites() const { return sites_; }
  std::string name() const;

  /// Primitive edge directions, constant over the whole domain.
  const std::vector<LatticeVector>& edge_directions() const { return directions_; }

 private:
  FamilySpec() = default;
  void finish();

  FamilyKind kind_ = FamilyKind::hirzebruch;
  std::int64_t k_ = 0;
  std::optional<MomentPolygon> base_;
  std::vector<ChopSite> sites_;
  std::vector<ParameterDomain> domain_;
  std::vector<std::string> names_;
  std::vector<LatticeVector> directions_;
};

/// Polygon at an exact parameter point; throws DomainError outside the domain.
MomentPolygon family_polygon(const FamilySpec& family, std::span<const Rational> params);
/// Exact virtual action at an exact parameter point.
Rational family_eval(const FamilySpec& family, std::span<const Rational> params);
/// Same pipeline evaluated in binary64 arithmetic.
double family_eval_float(const FamilySpec& family, std::span<const double> params);

// ---------------------------------------------------------------------------
// Grid scans.

struct GridAxis {
  std::vector<Rational> values;

  /// steps >= 1 evenly spaced points from lo to hi inclusive (steps == 1: lo).
  static GridAxis linspace(const Rational& lo, const Rational& hi, std::size_t steps);
};

struct ScanRow {
  std::vector<Rational> params;
  Rational action;
};

/// Row-major over the axes (last axis fastest). `threads` = 0 uses
/// DELZANT_THREADS if set, else the hardware concurrency.
std::vector<ScanRow> scan(const FamilySpec& family, const std::vector<GridAxis>& axes,
                          unsigned threads = 0);

std::string scan_csv(const FamilySpec& family, const std::vector<ScanRow>& rows);

// ---------------------------------------------------------------------------
// Critical points.

enum class Classification { interior_min, boundary, saddle_suspect };

std::string to_string(Classification c);

struct MinimizeOptions {
  double tol = 1e-10;            // parameter tolerance
  double gradient_tol = 1e-8;    // |∇A| below this counts as critical
  double fd_step = 1e-5;         // relative central-difference step
  double witness_tol = 1e-6;     // |A(witness) - A(x*)| allowed
  std::size_t max_sweeps = 500;  // coordinate-descent sweeps
  Integer max_witness_denominator{1000000};
};

struct CriticalPoint {
  std::vector<double> params;
  double action_value = 0;
  std::vector<Rational> witness;  // continued-fraction approximation of params
  Rational action_value_exact_at_rational_witness;
  double gradient_norm = 0;
  Classification classification = Classification::saddle_suspect;
  std::size_t sweeps = 0;
};

/// One-parameter families: golden-section search on the closed bracket
/// [lo, hi], refined by bisection on the sign of the central-difference
/// derivative. A monotone profile is reported as `boundary`.
CriticalPoint minimize(const FamilySpec& family, double lo, double hi,
                       const MinimizeOptions& options = {});

/// Any dimension: coordinate descent of one-dimensional searches inside the
/// box [lo_i, hi_i], starting from `init`; converged when every coordinate
/// moves less than tol in a sweep.
CriticalPoint minimize(const FamilySpec& family, std::vector<double> init,
                       std::vector<std::array<double, 2>> box, const MinimizeOptions& options = {});

std::string critical_point_report(const FamilySpec& family, const CriticalPoint& cp);
std::string critical_point_csv(const FamilySpec& family, const CriticalPoint& cp);

struct DerivativeCheck {
  std::vector<double> fd_gradient;
  std::optional<std::vector<double>> exact_gradient;  // built-in families only
  double discrepancy = 0;  // max |fd - exact|, NaN without an exact gradient
};

/// Central differences of family_eval_float with absolute step h against the
/// closed-form derivative evaluated exactly at the binary value of params.
DerivativeCheck derivative_check(const FamilySpec& family, std::span<const double> params, double h);

}  // namespace delzant
