#include <doctest.h>

#include <algorithm>

#include "delzant/measures.hpp"
#include "delzant/polygon.hpp"
#include "oracles.hpp"

using namespace delzant;

namespace {

MomentPolygon unit_triangle() { return build_polygon({{0, 0}, {1, 0}, {0, 1}}); }
MomentPolygon unit_square() { return build_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

bool cyclic_equal(const std::vector<Point>& a, const std::vector<Point>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t shift = 0; shift < a.size(); ++shift) {
    bool same = true;
    for (std::size_t i = 0; i < a.size() && same; ++i) same = a[(i + shift) % a.size()] == b[i];
    if (same) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("primitive_decompose") {
  auto d = primitive_decompose({4, 6});
  CHECK(d.direction == LatticeVector{2, 3});
  CHECK(d.lambda_length == 2);

  d = primitive_decompose({0, 5});
  CHECK(d.direction == LatticeVector{0, 1});
  CHECK(d.lambda_length == 5);

  d = primitive_decompose({Rational(1, 2), Rational(-1, 2)});
  CHECK(d.direction == LatticeVector{1, -1});
  CHECK(d.lambda_length == Rational(1, 2));

  d = primitive_decompose({Rational(-2, 3), Rational(4, 9)});
  CHECK(d.direction == LatticeVector{-3, 2});
  CHECK(d.lambda_length == Rational(2, 9));

  CHECK_THROWS_AS(primitive_decompose({0, 0}), DomainError);
}

TEST_CASE("primitive_decompose round-trips against a brute-force lattice length") {
  testing::Rng rng(7);
  std::uniform_int_distribution<int> num(-30, 30), den(1, 12);
  for (int trial = 0; trial < 300; ++trial) {
    const Point w{Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
    if (w.x == 0 && w.y == 0) continue;
    const auto d = primitive_decompose(w);
    CHECK(d.direction.is_primitive());
    CHECK(d.lambda_length > 0);
    CHECK(d.lambda_length * d.direction.as_point() == w);
    CHECK(d.lambda_length == testing::brute_force_lambda_length(w));
  }
}

TEST_CASE("build_polygon validates and orients") {
  const auto tri = unit_triangle();
  REQUIRE(tri.size() == 3);
  for (const auto& e : tri.edges()) CHECK(e.lambda_length == 1);

  const auto cw = build_polygon({{0, 0}, {0, 1}, {1, 0}});
  CHECK(cw.vertices() == tri.vertices());

  CHECK_THROWS_WITH_AS(build_polygon({{0, 0}, {1, 0}, {2, 0}, {0, 1}}),
                       doctest::Contains("collinear"), DomainError);
  CHECK_THROWS_AS(build_polygon({{0, 0}, {1, 0}}), DomainError);
  CHECK_THROWS_WITH_AS(build_polygon({{0, 0}, {1, 0}, {1, 0}, {0, 1}}),
                       doctest::Contains("duplicate"), DomainError);
  // Dart: reflex vertex at (1, 1/2).
  CHECK_THROWS_WITH_AS(build_polygon({{0, 0}, {2, 0}, {1, Rational(1, 2)}, {2, 2}, {0, 2}}),
                       doctest::Contains("not convex"), DomainError);
  // Pentagram: every turn is a left turn but the cycle winds twice.
  CHECK_THROWS_WITH_AS(build_polygon({{0, 10}, {6, -8}, {-10, 3}, {10, 3}, {-6, -8}}),
                       doctest::Contains("winds"), DomainError);
}

TEST_CASE("edges satisfy end - start = lambda * primitive direction") {
  testing::Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = trial % 2 ? testing::random_delzant(rng, 4) : testing::random_lattice_polygon(rng);
    for (const auto& e : p.edges()) {
      CHECK(e.direction.is_primitive());
      CHECK(e.lambda_length > 0);
      CHECK(e.end - e.start == e.lambda_length * e.direction.as_point());
    }
    CHECK(build_polygon(p.vertices()) == p);
  }
}

TEST_CASE("is_delzant") {
  CHECK(is_delzant(build_polygon({{0, 0}, {2, 0}, {0, 2}})).delzant);
  CHECK(is_delzant(unit_square()).delzant);

  const auto report = is_delzant(build_polygon({{0, 0}, {1, 0}, {0, 2}}));
  CHECK_FALSE(report.delzant);
  REQUIRE(report.offenders.size() == 1);
  CHECK(report.offenders[0].vertex == 1);
  CHECK(report.offenders[0].point == Point{1, 0});
  CHECK(report.offenders[0].determinant == 2);

  const auto wide = is_delzant(build_polygon({{0, 0}, {3, 0}, {0, 1}}));
  REQUIRE(wide.offenders.size() == 1);
  CHECK(wide.offenders[0].point == Point{0, 1});
  CHECK(wide.offenders[0].determinant == 3);
}

TEST_CASE("unimodular maps") {
  CHECK_THROWS_AS(UnimodularMap(2, 0, 0, 1), DomainError);
  const UnimodularMap shear(1, 1, 0, 1);
  const auto image = apply_map(unit_triangle(), shear);
  CHECK(image.vertices() == std::vector<Point>{{0, 0}, {1, 0}, {1, 1}});
  CHECK(is_delzant(image).delzant);

  const auto moved = apply_map(unit_triangle(), UnimodularMap::translation({5, -3}));
  CHECK(moved.vertices() == std::vector<Point>{{5, -3}, {6, -3}, {5, -2}});
  CHECK(area(moved) == area(unit_triangle()));
  CHECK(lambda_perimeter(moved) == lambda_perimeter(unit_triangle()));

  // A reflection reverses orientation; build_polygon restores it.
  const auto flipped = apply_map(unit_square(), UnimodularMap(1, 0, 0, -1));
  CHECK(area(flipped) == 1);
}

TEST_CASE("apply_map preserves the Delzant condition") {
  testing::Rng rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const auto p = trial % 3 ? testing::random_delzant(rng, 3) : testing::random_lattice_polygon(rng);
    const auto q = apply_map(p, testing::random_unimodular(rng, true));
    CHECK(is_delzant(p).delzant == is_delzant(q).delzant);
    CHECK(is_delzant(p).offenders.size() == is_delzant(q).offenders.size());
  }
}

TEST_CASE("scale") {
  CHECK(scale(unit_triangle(), 2).vertices() == std::vector<Point>{{0, 0}, {2, 0}, {0, 2}});
  CHECK(scale(unit_triangle(), 1) == unit_triangle());
  CHECK_THROWS_AS(scale(unit_triangle(), 0), DomainError);
  CHECK_THROWS_AS(scale(unit_triangle(), -1), DomainError);

  testing::Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto p = testing::random_delzant(rng, 3);
    const Rational c = testing::random_rational(rng, 7, 5);
    const auto q = scale(p, c);
    CHECK(lambda_perimeter(q) == c * lambda_perimeter(p));
    for (std::size_t i = 0; i < p.size(); ++i) {
      CHECK(q.edge(i).lambda_length == c * p.edge(i).lambda_length);
    }
  }
}

TEST_CASE("generators") {
  CHECK(gen_cp2(1) == unit_triangle());
  CHECK(is_delzant(gen_cp2(2)).delzant);
  for (const auto& e : gen_cp2(Rational(1, 3)).edges()) CHECK(e.lambda_length == Rational(1, 3));
  CHECK_THROWS_AS(gen_cp2(0), DomainError);

  CHECK(gen_hirzebruch(1, 1).vertices() == std::vector<Point>{{0, 0}, {2, 0}, {1, 1}, {0, 1}});
  CHECK(gen_hirzebruch(0, 3) == gen_p1xp1(3, 1));
  const auto f2 = gen_hirzebruch(2, 1);
  CHECK(f2.vertices() == std::vector<Point>{{0, 0}, {3, 0}, {1, 1}, {0, 1}});
  CHECK(is_delzant(f2).delzant);
  CHECK_THROWS_AS(gen_hirzebruch(-1, 1), DomainError);
  CHECK_THROWS_AS(gen_hirzebruch(1, 0), DomainError);

  const auto tp = gen_two_point_blowup(1, 1);
  CHECK(area(tp) == Rational(7, 2));
  CHECK(lambda_perimeter(tp) == 7);
  testing::Rng rng(9);
  for (int trial = 0; trial < 25; ++trial) {
    const auto a = testing::random_rational(rng, 20, 7), b = testing::random_rational(rng, 20, 7);
    CHECK(is_delzant(gen_two_point_blowup(a, b)).delzant);
  }
  CHECK_THROWS_AS(gen_two_point_blowup(1, 0), DomainError);
}

TEST_CASE("blow_up") {
  const auto q = blow_up(gen_cp2(2), 0, 1);
  CHECK(cyclic_equal(q.vertices(), {{1, 0}, {2, 0}, {0, 2}, {0, 1}}));
  CHECK(is_delzant(q).delzant);
  CHECK(area(q) == Rational(3, 2));

  CHECK_THROWS_WITH_AS(blow_up(gen_cp2(2), 0, 2), doctest::Contains("strictly smaller"), DomainError);
  CHECK_THROWS_AS(blow_up(gen_cp2(2), 3, Rational(1, 2)), DomainError);
  CHECK_THROWS_AS(blow_up(gen_cp2(2), 0, 0), DomainError);
  CHECK_THROWS_WITH_AS(blow_up(build_polygon({{0, 0}, {1, 0}, {0, 2}}), 0, Rational(1, 4)),
                       doctest::Contains("Delzant"), DomainError);

  for (std::size_t v = 0; v < 4; ++v) {
    const auto p = blow_up(unit_square(), v, Rational(1, 2));
    CHECK(p.size() == 5);
    CHECK(is_delzant(p).delzant);
    CHECK(area(p) == Rational(7, 8));
  }
}

TEST_CASE("blow_up adds one vertex and removes eps^2/2 of area") {
  testing::Rng rng(13);
  for (int trial = 0; trial < 80; ++trial) {
    const auto p = testing::random_delzant(rng, 3);
    std::uniform_int_distribution<std::size_t> pick(0, p.size() - 1);
    const std::size_t i = pick(rng);
    const Rational room = std::min(p.edge(i).lambda_length, p.edge(i + p.size() - 1).lambda_length);
    const Rational eps = room * testing::random_rational(rng, 9, 1) / 10;
    const auto q = blow_up(p, i, eps);
    CHECK(q.size() == p.size() + 1);
    CHECK(area(q) == area(p) - eps * eps / 2);
    CHECK(is_delzant(q).delzant);
  }
}

TEST_CASE("polygon text format") {
  const std::string text = "# a comment\n\n0 0\n  5/2 0\n3/2 1\n0 1\n";
  const auto p = parse_polygon(text);
  CHECK(p == gen_hirzebruch(1, Rational(3, 2)));
  CHECK(format_polygon(p) == "0 0\n5/2 0\n3/2 1\n0 1\n");

  CHECK_THROWS_AS(parse_polygon("0 0\n1\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_polygon("0 0\n1 0 7\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_polygon("0 0\n1 x\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_polygon("0 0\n1 0\n"), DomainError);
}

TEST_CASE("polygon text round trip is byte-identical") {
  testing::Rng rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const auto p = apply_map(testing::random_delzant(rng, 4), testing::random_unimodular(rng, true));
    const std::string once = format_polygon(p);
    CHECK(format_polygon(parse_polygon(once)) == once);
  }
}
