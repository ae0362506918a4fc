#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "delzant/invariants.hpp"
#include "oracles.hpp"

using namespace delzant;

namespace {

PiScaled pi(const Rational& c) { return {c, 1}; }
PiScaled pi2(const Rational& c) { return {c, 2}; }

}  // namespace

TEST_CASE("PiScaled arithmetic") {
  const PiScaled a(Rational(1, 2), 1), b(Rational(1, 3), 1);
  CHECK(a + b == pi(Rational(5, 6)));
  CHECK(a - b == pi(Rational(1, 6)));
  CHECK(-a == pi(Rational(-1, 2)));
  CHECK(a * b == pi2(Rational(1, 6)));
  CHECK(Rational(4) * a == pi(2));
  CHECK_THROWS_AS(a + pi2(1), DomainError);
  CHECK_THROWS_AS(a - PiScaled(1, 0), DomainError);
  CHECK(a + PiScaled(0, 2) == a);
  CHECK(PiScaled(0, 1) == PiScaled(0, 2));
  CHECK(PiScaled(0, 1) != pi(1));
  CHECK(pi(1) != pi2(1));
  CHECK(a > b);
  CHECK(pi(-1) < PiScaled(0, 0));
  CHECK(!(pi(1) < pi2(2)));
  CHECK(!(pi(1) > pi2(2)));
  CHECK(a.to_double() == doctest::Approx(std::numbers::pi / 2));
  CHECK(pi2(3).to_double() == doctest::Approx(3 * std::numbers::pi * std::numbers::pi));
  CHECK(PiScaled().str() == "0");
  CHECK(pi(Rational(-4, 9)).str() == "-4/9 pi");
  CHECK(pi2(Rational(256, 39)).str() == "256/39 pi^2");
  CHECK(PiScaled(7, 0).str() == "7");
}

TEST_CASE("Futaki vector") {
  CHECK(futaki_vector(gen_cp2(Rational(5, 7)))[0].is_zero());
  CHECK(futaki_vector(gen_cp2(Rational(5, 7)))[1].is_zero());
  const auto f = futaki_vector(gen_hirzebruch(1, 1));
  CHECK(f[0] == pi(Rational(-4, 9)));
  CHECK(f[1] == pi(Rational(8, 9)));
  const auto g = futaki_vector(gen_hirzebruch(0, 3));
  CHECK(g[0].is_zero());
  CHECK(g[1].is_zero());
  CHECK(futaki_vector(gen_hirzebruch(2, 1))[0] == pi(-2));
  CHECK(futaki_vector(gen_two_point_blowup(1, 1))[0] == pi(Rational(-4, 3)));
}

TEST_CASE("per-edge Futaki vector") {
  const auto f = futaki_vector_per_edge(gen_hirzebruch(1, 1));
  CHECK(f[0] == pi(Rational(-4, 9)));
  CHECK(f[1] == pi(Rational(8, 9)));
  const auto sq = futaki_vector_per_edge(gen_p1xp1(1, 1));
  CHECK(sq[0].is_zero());
  CHECK(sq[1].is_zero());

  testing::Rng rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = trial % 4 ? testing::random_delzant(rng, 6) : testing::random_lattice_polygon(rng);
    CHECK(futaki_vector(p) == futaki_vector_per_edge(p));
  }
}

TEST_CASE("Futaki norm") {
  CHECK(futaki_norm_sq(gen_hirzebruch(1, 1)) == pi2(Rational(256, 39)));
  CHECK(futaki_norm_sq(gen_hirzebruch(2, 1)) == pi2(Rational(288, 11)));
  CHECK(futaki_norm_sq(gen_cp2(1)).is_zero());

  testing::Rng rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = testing::random_delzant(rng, 5);
    const auto m = compute_measures(p);
    // F^T Π^{-1} F with F taken from the Futaki vector itself.
    const auto f = futaki_vector(p);
    const Vector2 fv{f[0].coefficient(), f[1].coefficient()};
    CHECK(futaki_norm_sq(p) == pi2(m.inertia.inverse_quadratic_form(fv)));
    CHECK(futaki_norm_sq(p) ==
          pi2(16 * m.lambda_perimeter * m.lambda_perimeter * m.quadratic_form()));
  }
}

TEST_CASE("virtual action examples") {
  CHECK(virtual_action(gen_cp2(1)) == 9);
  CHECK(virtual_action(gen_cp2(Rational(13, 5))) == 9);
  CHECK(virtual_action(gen_p1xp1(1, 1)) == 8);
  CHECK(virtual_action(gen_hirzebruch(1, 1)) == Rational(111, 13));
  CHECK(virtual_action(gen_hirzebruch(2, 1)) == Rational(108, 11));
  CHECK(virtual_action(gen_two_point_blowup(1, 1)) == Rational(2919, 409));
  const auto m = compute_measures(gen_hirzebruch(1, 1));
  CHECK(virtual_action(m) == Rational(111, 13));
  CHECK(virtual_action_from(m) == Rational(111, 13));
}

TEST_CASE("Calabi and Weyl bounds") {
  CHECK(calabi_lower_bound(gen_cp2(1)) == pi2(288));
  CHECK(calabi_lower_bound(gen_hirzebruch(1, 1)) == pi2(Rational(3552, 13)));
  CHECK(calabi_lower_bound(gen_hirzebruch(0, 1)) == pi2(256));
  CHECK(weyl_lower_bound(gen_hirzebruch(1, 1)) == pi2(Rational(296, 13)));
  CHECK(weyl_lower_bound(gen_cp2(1)) == pi2(12));
}

TEST_CASE("Chern pairing and volume") {
  const auto a = chern_and_volume(gen_cp2(1));
  CHECK(a.c1_dot_omega == 3);
  CHECK(a.omega_sq == 1);
  const auto b = chern_and_volume(gen_hirzebruch(1, 1));
  CHECK(b.c1_dot_omega == 5);
  CHECK(b.omega_sq == 3);
  const auto c = chern_and_volume(gen_two_point_blowup(1, 1));
  CHECK(c.c1_dot_omega == 7);
  CHECK(c.omega_sq == 7);
}

TEST_CASE("topology") {
  const auto cp2 = topology(gen_cp2(1));
  CHECK(cp2.euler == 3);
  CHECK(cp2.signature == 1);
  CHECK(cp2.b2 == 1);
  CHECK(cp2.c1_squared() == 9);
  for (int k = 0; k <= 4; ++k) {
    const auto t = topology(gen_hirzebruch(k, Rational(1, 2)));
    CHECK(t.euler == 4);
    CHECK(t.signature == 0);
    CHECK(t.c1_squared() == 8);
  }
  const auto tp = topology(gen_two_point_blowup(1, 1));
  CHECK(tp.euler == 5);
  CHECK(tp.signature == -1);
  CHECK(tp.c1_squared() == 7);

  testing::Rng rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    const auto p = testing::random_delzant(rng, 6);
    const auto t = topology(p);
    CHECK(t.euler == static_cast<int>(p.size()));
    CHECK(t.signature == 4 - t.euler);
    CHECK(t.b2 == t.euler - 2);
    CHECK(t.c1_squared() == 12 - t.euler);
  }
}

TEST_CASE("non-Delzant polygons") {
  const auto p = build_polygon({{0, 0}, {1, 0}, {0, 2}});
  CHECK_THROWS_AS(topology(p), DomainError);
  CHECK_THROWS_AS(weyl_lower_bound(p), DomainError);
  const auto r = action_report(p);
  CHECK_FALSE(r.delzant);
  CHECK_FALSE(r.topology.has_value());
  CHECK_FALSE(r.weyl_bound.has_value());
  CHECK(r.virtual_action == virtual_action(p));
}

TEST_CASE("action report") {
  const auto r = action_report(gen_hirzebruch(1, 1));
  CHECK(r.delzant);
  CHECK(r.chern_pairing == 5);
  CHECK(r.volume_pairing == 3);
  CHECK(r.virtual_action == Rational(111, 13));
  CHECK(r.quad_form == Rational(16, 975));
  CHECK(r.futaki_norm_sq == pi2(Rational(256, 39)));
  CHECK(r.calabi_bound == pi2(Rational(3552, 13)));
  REQUIRE(r.topology.has_value());
  CHECK(r.topology->euler == 4);
  CHECK(*r.weyl_bound == pi2(Rational(296, 13)));
  CHECK(*r.riemann_bound == pi2(-32 + 8 * Rational(111, 13)));
  CHECK(*r.ricci_bound == pi2(-64 + 16 * Rational(111, 13)));
  CHECK(r.kahler_einstein_part() == Rational(25, 3));
}

TEST_CASE("action decomposes into Kähler-Einstein part plus Futaki term") {
  testing::Rng rng(53);
  for (int trial = 0; trial < 60; ++trial) {
    const auto p = trial % 3 ? testing::random_delzant(rng, 5) : testing::random_lattice_polygon(rng);
    const auto r = action_report(p);
    CHECK(r.virtual_action ==
          r.kahler_einstein_part() + r.futaki_norm_sq.coefficient() / 32);
    CHECK(r.virtual_action >= r.kahler_einstein_part());
    const bool balanced = r.measures.displacement == Point{0, 0};
    CHECK((r.virtual_action == r.kahler_einstein_part()) == balanced);
  }
}

TEST_CASE("virtual action is invariant under lattice maps and scaling") {
  testing::Rng rng(59);
  for (int trial = 0; trial < 60; ++trial) {
    const auto p = trial % 3 ? testing::random_delzant(rng, 5) : testing::random_lattice_polygon(rng);
    const Rational a = virtual_action(p);
    CHECK(virtual_action(apply_map(p, testing::random_unimodular(rng, true))) == a);
    CHECK(virtual_action(scale(p, testing::random_rational(rng, 7, 5))) == a);
  }
}

TEST_CASE("Delzant property survives lattice maps") {
  testing::Rng rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    const auto p = testing::random_delzant(rng, 4);
    CHECK(is_delzant(apply_map(p, testing::random_unimodular(rng, true))).delzant);
    CHECK(topology(apply_map(p, testing::random_unimodular(rng, true))).euler ==
          static_cast<int>(p.size()));
  }
}

TEST_CASE("invariants CSV") {
  CHECK(invariants_csv_header() ==
        "perimeter,area,d1,d2,quad_form,action,futaki1_coeff,futaki2_coeff,calabi_coeff,euler,"
        "signature,weyl_coeff,riemann_coeff,ricci_coeff");
  CHECK(invariants_csv_header(true).ends_with(",action_float,calabi_float,weyl_float"));
  const auto r = action_report(gen_hirzebruch(1, 1));
  CHECK(invariants_csv_row(r) ==
        "5,3/2,1/45,-2/45,16/975,111/13,-4/9,8/9,3552/13,4,0,296/13,472/13,944/13");
  const auto row = invariants_csv_row(r, true);
  CHECK(std::count(row.begin(), row.end(), ',') == 16);
}
