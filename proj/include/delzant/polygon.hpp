#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "delzant/geometry.hpp"
#include "delzant/rational.hpp"

namespace delzant {

/// Integer vector of the lattice Z^2.
struct LatticeVector {
  Integer a;
  Integer b;

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
  friend LatticeVector operator-(const LatticeVector& v) { return {-v.a, -v.b}; }

  /// gcd(|a|, |b|) == 1; the zero vector is not primitive.
  bool is_primitive() const;
  Point as_point() const { return {Rational(a), Rational(b)}; }
};

Integer det(const LatticeVector& u, const LatticeVector& v);

/// x -> M x + t with M an integer matrix of determinant +-1.
class UnimodularMap {
 public:
  /// Throws DomainError unless det M = +-1.
  UnimodularMap(Integer m11, Integer m12, Integer m21, Integer m22, Point translation = {});

  static UnimodularMap identity();
  static UnimodularMap translation(Point t);

  const Integer& m11() const { return m11_; }
  const Integer& m12() const { return m12_; }
  const Integer& m21() const { return m21_; }
  const Integer& m22() const { return m22_; }
  const Point& offset() const { return t_; }
  Integer determinant() const { return m11_ * m22_ - m12_ * m21_; }

  /// Linear part only.
  Point apply_linear(const Point& v) const;
  Point operator()(const Point& p) const { return apply_linear(p) + t_; }

  /// (this ∘ other)(x) = this(other(x)).
  UnimodularMap compose(const UnimodularMap& other) const;

 private:
  Integer m11_, m12_, m21_, m22_;
  Point t_;
};

struct Edge {
  Point start;
  Point end;
  LatticeVector direction;  // primitive
  Rational lambda_length;   // end - start == lambda_length * direction, > 0

  Point midpoint() const { return Rational(1, 2) * (start + end); }
};

struct PrimitiveDecomposition {
  LatticeVector direction;
  Rational lambda_length;
};

/// Writes w = lambda_length * direction with direction primitive and
/// lambda_length > 0. Throws DomainError for w = 0.
PrimitiveDecomposition primitive_decompose(const Point& w);

/// A strictly convex polygon with rational vertices in counterclockwise
/// order. Construct through build_polygon(); instances are immutable.
class MomentPolygon {
 public:
  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t size() const { return vertices_.size(); }
  const Point& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }
  /// Edge i runs from vertex(i) to vertex(i + 1).
  const Edge& edge(std::size_t i) const { return edges_[i % edges_.size()]; }

  friend bool operator==(const MomentPolygon& a, const MomentPolygon& b) {
    return a.vertices_ == b.vertices_;
  }

 private:
  friend MomentPolygon build_polygon(std::vector<Point> vertices);
  MomentPolygon(std::vector<Point> vertices, std::vector<Edge> edges)
      : vertices_(std::move(vertices)), edges_(std::move(edges)) {}

  std::vector<Point> vertices_;
  std::vector<Edge> edges_;
};

/// Validates and normalizes a vertex list. Clockwise input is reversed
/// (keeping the first vertex first). Throws DomainError for fewer than three
/// points, repeated consecutive points, collinear triples, and non-convex or
/// self-overlapping vertex cycles.
MomentPolygon build_polygon(std::vector<Point> vertices);

struct CornerDefect {
  std::size_t vertex;
  Point point;
  Integer determinant;  // det(next direction, previous direction), > 0
};

struct DelzantReport {
  bool delzant = true;
  std::vector<CornerDefect> offenders;

  explicit operator bool() const { return delzant; }
};

/// At vertex i the two outgoing primitive directions are u (towards vertex
/// i + 1) and w (towards vertex i - 1); the corner is smooth iff |det(u w)| = 1.
DelzantReport is_delzant(const MomentPolygon& polygon);

/// Outgoing primitive directions (towards next, towards previous) at vertex i.
std::pair<LatticeVector, LatticeVector> corner_directions(const MomentPolygon& polygon,
                                                          std::size_t i);

MomentPolygon apply_map(const MomentPolygon& polygon, const UnimodularMap& map);

/// x -> c x; throws DomainError for c <= 0.
MomentPolygon scale(const MomentPolygon& polygon, const Rational& c);

// Generators. All throw DomainError for nonpositive parameters.

/// Triangle (0,0), (a,0), (0,a).
MomentPolygon gen_cp2(const Rational& a);
/// Rectangle [0,a] x [0,b].
MomentPolygon gen_p1xp1(const Rational& a, const Rational& b);
/// Trapezoid (0,0), (alpha+k,0), (alpha,1), (0,1): fibre area normalized to 1.
MomentPolygon gen_hirzebruch(std::int64_t k, const Rational& alpha);
/// Pentagon (1,0), (1+alpha,0), (1+alpha,1+beta), (0,1+beta), (0,1):
/// exceptional edge of lambda-length 1.
MomentPolygon gen_two_point_blowup(const Rational& alpha, const Rational& beta);

/// Chops the corner at `vertex_index` by a new edge of lambda-length eps.
/// Requires a Delzant polygon and 0 < eps < lambda-length of both adjacent
/// edges. The vertex is replaced, in place, by v + eps*w then v + eps*u.
MomentPolygon blow_up(const MomentPolygon& polygon, std::size_t vertex_index, const Rational& eps);

/// Polygon text format: one "x y" line per vertex, each field an integer or
/// "p/q"; blank lines and lines starting with '#' are ignored.
MomentPolygon read_polygon(std::istream& in);
MomentPolygon parse_polygon(const std::string& text);
void write_polygon(std::ostream& out, const MomentPolygon& polygon);
std::string format_polygon(const MomentPolygon& polygon);

}  // namespace delzant
