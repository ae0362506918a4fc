#include "delzant/polygon.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace delzant {

using boost::multiprecision::abs;

bool LatticeVector::is_primitive() const {
  if (a == 0 && b == 0) return false;
  return gcd(abs(a), abs(b)) == 1;
}

Integer det(const LatticeVector& u, const LatticeVector& v) { return u.a * v.b - u.b * v.a; }

UnimodularMap::UnimodularMap(Integer m11, Integer m12, Integer m21, Integer m22, Point translation)
    : m11_(std::move(m11)),
      m12_(std::move(m12)),
      m21_(std::move(m21)),
      m22_(std::move(m22)),
      t_(std::move(translation)) {
  const Integer d = determinant();
  if (d != 1 && d != -1) {
    throw DomainError("map is not unimodular: det = " + d.str());
  }
}

UnimodularMap UnimodularMap::identity() { return {1, 0, 0, 1}; }

UnimodularMap UnimodularMap::translation(Point t) { return {1, 0, 0, 1, std::move(t)}; }

Point UnimodularMap::apply_linear(const Point& v) const {
  return {Rational(m11_) * v.x + Rational(m12_) * v.y, Rational(m21_) * v.x + Rational(m22_) * v.y};
}

UnimodularMap UnimodularMap::compose(const UnimodularMap& other) const {
  return {m11_ * other.m11_ + m12_ * other.m21_,
          m11_ * other.m12_ + m12_ * other.m22_,
          m21_ * other.m11_ + m22_ * other.m21_,
          m21_ * other.m12_ + m22_ * other.m22_,
          apply_linear(other.t_) + t_};
}

PrimitiveDecomposition primitive_decompose(const Point& w) {
  if (w.x == 0 && w.y == 0) throw DomainError("cannot decompose the zero vector");
  const Integer scale = lcm(denominator(w.x), denominator(w.y));
  const Integer a = numerator(w.x) * (scale / denominator(w.x));
  const Integer b = numerator(w.y) * (scale / denominator(w.y));
  const Integer g = gcd(abs(a), abs(b));
  LatticeVector dir{a / g, b / g};
  Rational length = dir.a != 0 ? w.x / Rational(dir.a) : w.y / Rational(dir.b);
  return {std::move(dir), std::move(length)};
}

namespace {

// Position of a direction in the cyclic angle order starting at angle 0.
bool upper_half(const Point& d) { return d.y > 0 || (d.y == 0 && d.x > 0); }

bool angle_less(const Point& a, const Point& b) {
  const bool ha = upper_half(a), hb = upper_half(b);
  if (ha != hb) return ha;
  return cross(a, b) > 0;
}

Rational signed_double_area(const std::vector<Point>& v) {
  Rational s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += cross(v[i], v[(i + 1) % v.size()]);
  return s;
}

}  // namespace

MomentPolygon build_polygon(std::vector<Point> vertices) {
  const std::size_t n = vertices.size();
  if (n < 3) throw DomainError("a polygon needs at least 3 vertices, got " + std::to_string(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (vertices[i] == vertices[(i + 1) % n]) {
      throw DomainError("duplicate consecutive vertex " + to_string(vertices[i]) + " at index " +
                        std::to_string(i));
    }
  }
  if (signed_double_area(vertices) < 0) std::reverse(vertices.begin() + 1, vertices.end());

  for (std::size_t i = 0; i < n; ++i) {
    const Point& prev = vertices[(i + n - 1) % n];
    const Point& cur = vertices[i];
    const Point& next = vertices[(i + 1) % n];
    const Rational turn = cross(cur - prev, next - cur);
    if (turn == 0) {
      throw DomainError("collinear vertices " + to_string(prev) + ", " + to_string(cur) + ", " +
                        to_string(next));
    }
    if (turn < 0) throw DomainError("polygon is not convex at vertex " + to_string(cur));
  }

  // All left turns still admits star-shaped cycles that wind more than once;
  // a simple convex polygon's edge directions wrap around exactly once.
  std::size_t wraps = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point d0 = vertices[(i + 1) % n] - vertices[i];
    const Point d1 = vertices[(i + 2) % n] - vertices[(i + 1) % n];
    if (!angle_less(d0, d1)) ++wraps;
  }
  if (wraps != 1) throw DomainError("vertex cycle winds more than once; polygon is not simple");

  std::vector<Edge> edges;
  edges.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = vertices[i];
    const Point& b = vertices[(i + 1) % n];
    auto [dir, length] = primitive_decompose(b - a);
    edges.push_back(Edge{a, b, std::move(dir), std::move(length)});
  }
  return MomentPolygon(std::move(vertices), std::move(edges));
}

std::pair<LatticeVector, LatticeVector> corner_directions(const MomentPolygon& polygon,
                                                          std::size_t i) {
  const std::size_t n = polygon.size();
  return {polygon.edge(i).direction, -polygon.edge((i + n - 1) % n).direction};
}

DelzantReport is_delzant(const MomentPolygon& polygon) {
  DelzantReport report;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const auto [u, w] = corner_directions(polygon, i);
    Integer d = det(u, w);
    if (abs(d) != 1) {
      report.delzant = false;
      report.offenders.push_back(CornerDefect{i, polygon.vertex(i), std::move(d)});
    }
  }
  return report;
}

MomentPolygon apply_map(const MomentPolygon& polygon, const UnimodularMap& map) {
  std::vector<Point> out;
  out.reserve(polygon.size());
  for (const auto& v : polygon.vertices()) out.push_back(map(v));
  return build_polygon(std::move(out));
}

MomentPolygon scale(const MomentPolygon& polygon, const Rational& c) {
  if (c <= 0) throw DomainError("scale factor must be positive, got " + to_string(c));
  std::vector<Point> out;
  out.reserve(polygon.size());
  for (const auto& v : polygon.vertices()) out.push_back(c * v);
  return build_polygon(std::move(out));
}

namespace {

void require_positive(const Rational& value, const char* name) {
  if (value <= 0) {
    throw DomainError(std::string("parameter ") + name + " must be positive, got " +
                      to_string(value));
  }
}

}  // namespace

MomentPolygon gen_cp2(const Rational& a) {
  require_positive(a, "a");
  return build_polygon({{0, 0}, {a, 0}, {0, a}});
}

MomentPolygon gen_p1xp1(const Rational& a, const Rational& b) {
  require_positive(a, "a");
  require_positive(b, "b");
  return build_polygon({{0, 0}, {a, 0}, {a, b}, {0, b}});
}

MomentPolygon gen_hirzebruch(std::int64_t k, const Rational& alpha) {
  if (k < 0) throw DomainError("Hirzebruch index k must be >= 0, got " + std::to_string(k));
  require_positive(alpha, "alpha");
  return build_polygon({{0, 0}, {alpha + k, 0}, {alpha, 1}, {0, 1}});
}

MomentPolygon gen_two_point_blowup(const Rational& alpha, const Rational& beta) {
  require_positive(alpha, "alpha");
  require_positive(beta, "beta");
  return build_polygon({{1, 0}, {1 + alpha, 0}, {1 + alpha, 1 + beta}, {0, 1 + beta}, {0, 1}});
}

MomentPolygon blow_up(const MomentPolygon& polygon, std::size_t vertex_index, const Rational& eps) {
  const std::size_t n = polygon.size();
  if (vertex_index >= n) {
    throw DomainError("vertex index " + std::to_string(vertex_index) + " out of range [0, " +
                      std::to_string(n) + ")");
  }
  if (const auto report = is_delzant(polygon); !report) {
    throw DomainError("blow-up requires a Delzant polygon; corner " +
                      to_string(report.offenders.front().point) + " has determinant " +
                      report.offenders.front().determinant.str());
  }
  if (eps <= 0) throw DomainError("blow-up size must be positive, got " + to_string(eps));
  const Edge& next = polygon.edge(vertex_index);
  const Edge& prev = polygon.edge(vertex_index + n - 1);
  if (eps >= next.lambda_length || eps >= prev.lambda_length) {
    throw DomainError("blow-up size " + to_string(eps) + " at vertex " +
                      to_string(polygon.vertex(vertex_index)) +
                      " must be strictly smaller than the adjacent edge lengths " +
                      to_string(prev.lambda_length) + " and " + to_string(next.lambda_length));
  }
  const auto [u, w] = corner_directions(polygon, vertex_index);
  const Point& v = polygon.vertex(vertex_index);

  std::vector<Point> out;
  out.reserve(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == vertex_index) {
      out.push_back(v + eps * w.as_point());
      out.push_back(v + eps * u.as_point());
    } else {
      out.push_back(polygon.vertex(i));
    }
  }
  return build_polygon(std::move(out));
}

MomentPolygon read_polygon(std::istream& in) {
  std::vector<Point> vertices;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string x, y, extra;
    if (!(fields >> x) || x.front() == '#') continue;
    if (!(fields >> y) || (fields >> extra)) {
      throw ParseError("line " + std::to_string(line_no) + ": expected two fields");
    }
    try {
      vertices.push_back({parse_rational(x), parse_rational(y)});
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return build_polygon(std::move(vertices));
}

MomentPolygon parse_polygon(const std::string& text) {
  std::istringstream in(text);
  return read_polygon(in);
}

void write_polygon(std::ostream& out, const MomentPolygon& polygon) {
  for (const auto& v : polygon.vertices()) out << to_string(v.x) << ' ' << to_string(v.y) << '\n';
}

std::string format_polygon(const MomentPolygon& polygon) {
  std::ostringstream out;
  write_polygon(out, polygon);
  return out.str();
}

}  // namespace delzant
