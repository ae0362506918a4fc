#pragma once

// Test-only reference computations. Nothing here is used by the library;
// each routine takes a different route from the production code it checks.

#include <cstdint>
#include <random>
#include <vector>

#include "delzant/polygon.hpp"

namespace delzant::testing {

struct ExactMoments {
  Rational m00, m10, m01, m20, m11, m02;
};

/// Monomial moments from Green's theorem, one boundary edge at a time.
ExactMoments green_moments(const std::vector<Point>& vertices);

/// ∫_∂P x dλ by Simpson's rule on each edge (exact for linear integrands).
Point boundary_first_moment_simpson(const MomentPolygon& polygon);

/// Lambda-length of a rational displacement by searching the smallest
/// integer multiple that lands on the lattice: w = L * u with u primitive.
Rational brute_force_lambda_length(const Point& w);

struct McEstimate {
  double estimate;
  double stderr_;
};

/// Rejection-sampled Monte-Carlo estimate of ∫_P x^i y^j da over the
/// bounding box. Deterministic for a fixed seed; samples must be >= 1000.
McEstimate mc_moment_oracle(const MomentPolygon& polygon, int i, int j, std::size_t samples,
                            std::uint64_t seed);

using Rng = std::mt19937_64;

/// Small positive rational num/den with num in [1, max_num], den in [1, max_den].
Rational random_rational(Rng& rng, int max_num, int max_den);

/// Delzant polygon: a minimal model (CP2, P1xP1, F_k) followed by a random
/// number of corner chops.
MomentPolygon random_delzant(Rng& rng, int max_blowups);

/// Convex lattice polygon (typically not Delzant): hull of random integer points.
MomentPolygon random_lattice_polygon(Rng& rng);

/// Random GL(2,Z) map built from elementary generators, with a random
/// rational translation (zero when `with_translation` is false).
UnimodularMap random_unimodular(Rng& rng, bool with_translation);

}  // namespace delzant::testing
