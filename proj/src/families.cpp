#include "delzant/families.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <limits>
#include <sstream>
#include <thread>

#include "delzant/invariants.hpp"
#include "delzant/measures.hpp"

namespace delzant {

namespace {

// Dense univariate polynomial, coefficient of x^i at index i.
using Poly = std::vector<Rational>;

Poly poly(std::initializer_list<int> coeffs) {
  Poly p;
  for (int c : coeffs) p.emplace_back(c);
  return p;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Poly operator*(const Rational& c, Poly p) {
  for (auto& x : p) x *= c;
  return p;
}

Poly power(const Poly& p, int n) {
  Poly out = poly({1});
  for (int i = 0; i < n; ++i) out = out * p;
  return out;
}

Rational eval(const Poly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly derivative(const Poly& p) {
  Poly out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(Rational(static_cast<long long>(i)) * p[i]);
  if (out.empty()) out.emplace_back(0);
  return out;
}

Rational quotient_derivative(const Poly& num, const Poly& den, const Rational& x) {
  const Rational n = eval(num, x), d = eval(den, x);
  return (eval(derivative(num), x) * d - n * eval(derivative(den), x)) / (d * d);
}

// Bivariate polynomial: rows[i] is the polynomial in β multiplying α^i.
struct BiPoly {
  std::vector<Poly> rows;

  void add(std::size_t alpha_power, const Poly& in_beta) {
    if (rows.size() <= alpha_power) rows.resize(alpha_power + 1, poly({0}));
    Poly& row = rows[alpha_power];
    if (row.size() < in_beta.size()) row.resize(in_beta.size(), Rational(0));
    for (std::size_t j = 0; j < in_beta.size(); ++j) row[j] += in_beta[j];
  }

  Rational operator()(const Rational& alpha, const Rational& beta) const {
    Rational acc = 0;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) acc = acc * alpha + eval(*it, beta);
    return acc;
  }

  BiPoly d_alpha() const {
    BiPoly out;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      out.add(i - 1, Rational(static_cast<long long>(i)) * rows[i]);
    }
    if (out.rows.empty()) out.add(0, poly({0}));
    return out;
  }

  BiPoly d_beta() const {
    BiPoly out;
    for (std::size_t i = 0; i < rows.size(); ++i) out.add(i, derivative(rows[i]));
    return out;
  }
};

struct TwoPointForm {
  BiPoly num, den;
};

const TwoPointForm& two_point_form() {
  static const TwoPointForm form = [] {
    const Poly one_plus_beta = poly({1, 1});
    TwoPointForm f;
    f.num.add(0, poly({3, 28, 96, 168, 164, 80, 16}));
    f.num.add(1, Rational(4) * poly({7, 58, 176, 270, 228, 96, 16}));
    f.num.add(2, Rational(4) * poly({24, 176, 479, 652, 478, 172, 24}));
    f.num.add(3, Rational(8) * poly({21, 135, 326, 392, 248, 74, 8}));
    f.num.add(4, Rational(4) * poly({41, 228, 478, 496, 263, 60, 4}));
    f.num.add(5, Rational(16) * poly({5, 24, 43, 37, 15, 2}));
    f.num.add(6, Rational(16) * power(one_plus_beta, 4));
    for (auto& row : f.num.rows) row = Rational(3) * row;

    f.den.add(0, poly({1, 10, 36, 64, 60, 24}));
    f.den.add(1, Rational(2) * poly({5, 45, 144, 224, 180, 60}));
    f.den.add(2, Rational(12) * poly({3, 24, 69, 96, 68, 20}));
    f.den.add(3, Rational(16) * poly({4, 28, 72, 90, 57, 15}));
    f.den.add(4, Rational(12) * (power(one_plus_beta, 2) * poly({5, 20, 23, 10})));
    f.den.add(5, Rational(24) * power(one_plus_beta, 5));
    return f;
  }();
  return form;
}

const Poly& sextic_num() {
  static const Poly p = poly({9, 96, 396, 840, 954, 528, 96});
  return p;
}

const Poly& sextic_den() {
  static const Poly p = poly({1, 12, 54, 120, 138, 72, 12});
  return p;
}

std::pair<Poly, Poly> hirzebruch_form(std::int64_t k) {
  const Rational kk(k);
  Poly num{kk * (kk * kk + 2) / 2, 2 * (1 + kk) * (1 + kk), 4 + 3 * kk, Rational(2)};
  Poly den{kk * kk / 6, kk, Rational(1)};
  return {num, den};
}

void require_nonnegative(const Rational& x, const char* name) {
  if (x < 0) {
    throw DomainError(std::string("parameter ") + name + " must be >= 0, got " + to_string(x));
  }
}

}  // namespace

Rational hirzebruch_closed_form(std::int64_t k, const Rational& alpha) {
  if (k < 0) throw DomainError("Hirzebruch index k must be >= 0");
  if (alpha <= 0) throw DomainError("alpha must be positive, got " + to_string(alpha));
  const auto [num, den] = hirzebruch_form(k);
  return eval(num, alpha) / eval(den, alpha);
}

Rational hirzebruch_closed_form_derivative(std::int64_t k, const Rational& alpha) {
  if (k < 0) throw DomainError("Hirzebruch index k must be >= 0");
  if (alpha < 0 || (alpha == 0 && k == 0)) {
    throw DomainError("derivative needs alpha > 0 (or alpha = 0 with k > 0)");
  }
  const auto [num, den] = hirzebruch_form(k);
  return quotient_derivative(num, den, alpha);
}

Rational two_point_closed_form(const Rational& alpha, const Rational& beta) {
  require_nonnegative(alpha, "alpha");
  require_nonnegative(beta, "beta");
  const auto& f = two_point_form();
  return f.num(alpha, beta) / f.den(alpha, beta);
}

std::array<Rational, 2> two_point_closed_form_gradient(const Rational& alpha, const Rational& beta) {
  require_nonnegative(alpha, "alpha");
  require_nonnegative(beta, "beta");
  static const BiPoly num_a = two_point_form().num.d_alpha(), num_b = two_point_form().num.d_beta();
  static const BiPoly den_a = two_point_form().den.d_alpha(), den_b = two_point_form().den.d_beta();
  const auto& f = two_point_form();
  const Rational n = f.num(alpha, beta), d = f.den(alpha, beta);
  const Rational d2 = d * d;
  return {(num_a(alpha, beta) * d - n * den_a(alpha, beta)) / d2,
          (num_b(alpha, beta) * d - n * den_b(alpha, beta)) / d2};
}

Rational symmetric_two_point_closed_form(const Rational& alpha) {
  require_nonnegative(alpha, "alpha");
  return eval(sextic_num(), alpha) / eval(sextic_den(), alpha);
}

Rational symmetric_two_point_closed_form_derivative(const Rational& alpha) {
  require_nonnegative(alpha, "alpha");
  return quotient_derivative(sextic_num(), sextic_den(), alpha);
}

// ---------------------------------------------------------------------------

bool ParameterDomain::contains(double x) const {
  if (!std::isfinite(x)) return false;
  const double lo_d = to_double(lo);
  if (!(x > lo_d)) return false;
  if (hi && !(x < to_double(*hi))) return false;
  // Near the bounds the binary value decides.
  return contains(exact_from_double(x));
}

namespace {

template <class T>
T from_rational(const Rational& r) {
  if constexpr (std::is_same_v<T, double>) {
    return to_double(r);
  } else {
    return r;
  }
}

template <class T>
std::vector<BasicPoint<T>> vertices_at(const FamilySpec& f, std::span<const T> p) {
  const T one(1), zero(0);
  switch (f.kind()) {
    case FamilyKind::hirzebruch: {
      const T k = from_rational<T>(Rational(f.k()));
      return {{zero, zero}, {p[0] + k, zero}, {p[0], one}, {zero, one}};
    }
    case FamilyKind::two_point:
    case FamilyKind::symmetric_two_point: {
      const T& a = p[0];
      const T& b = f.kind() == FamilyKind::two_point ? p[1] : p[0];
      return {{one, zero}, {one + a, zero}, {one + a, one + b}, {zero, one + b}, {zero, one}};
    }
    case FamilyKind::chop: {
      const auto& base = *f.base();
      std::vector<std::optional<std::size_t>> site_of(base.size());
      for (const auto& s : f.sites()) site_of[s.vertex] = s.parameter;
      std::vector<BasicPoint<T>> out;
      for (std::size_t i = 0; i < base.size(); ++i) {
        const auto& v = base.vertex(i);
        const BasicPoint<T> vt{from_rational<T>(v.x), from_rational<T>(v.y)};
        if (!site_of[i]) {
          out.push_back(vt);
          continue;
        }
        const auto [u, w] = corner_directions(base, i);
        const T& eps = p[*site_of[i]];
        const BasicPoint<T> ut{from_rational<T>(Rational(u.a)), from_rational<T>(Rational(u.b))};
        const BasicPoint<T> wt{from_rational<T>(Rational(w.a)), from_rational<T>(Rational(w.b))};
        out.push_back(vt + eps * wt);
        out.push_back(vt + eps * ut);
      }
      return out;
    }
  }
  return {};
}

template <class T>
void check_params(const FamilySpec& f, std::span<const T> params) {
  if (params.size() != f.dimension()) {
    throw DomainError(f.name() + " takes " + std::to_string(f.dimension()) + " parameter(s), got " +
                      std::to_string(params.size()));
  }
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (!f.domain()[i].contains(params[i])) {
      std::ostringstream msg;
      msg << "parameter " << f.parameter_names()[i] << " = ";
      if constexpr (std::is_same_v<T, double>) {
        msg << params[i];
      } else {
        msg << to_string(params[i]);
      }
      const auto& d = f.domain()[i];
      msg << " outside the domain (" << to_string(d.lo) << ", "
          << (d.hi ? to_string(*d.hi) : std::string("inf")) << ") of " << f.name();
      throw DomainError(msg.str());
    }
  }
}

Rational reference_point(const ParameterDomain& d) {
  return d.hi ? Rational((d.lo + *d.hi) / 2) : Rational(d.lo + 1);
}

}  // namespace

FamilySpec FamilySpec::hirzebruch(std::int64_t k) {
  if (k < 0) throw DomainError("Hirzebruch index k must be >= 0, got " + std::to_string(k));
  FamilySpec f;
  f.kind_ = FamilyKind::hirzebruch;
  f.k_ = k;
  f.domain_ = {{Rational(0), std::nullopt}};
  f.names_ = {"alpha"};
  f.finish();
  return f;
}

FamilySpec FamilySpec::two_point() {
  FamilySpec f;
  f.kind_ = FamilyKind::two_point;
  f.domain_ = {{Rational(0), std::nullopt}, {Rational(0), std::nullopt}};
  f.names_ = {"alpha", "beta"};
  f.finish();
  return f;
}

FamilySpec FamilySpec::symmetric_two_point() {
  FamilySpec f;
  f.kind_ = FamilyKind::symmetric_two_point;
  f.domain_ = {{Rational(0), std::nullopt}};
  f.names_ = {"alpha"};
  f.finish();
  return f;
}

FamilySpec FamilySpec::chop(MomentPolygon base, std::vector<ChopSite> sites) {
  if (const auto report = is_delzant(base); !report) {
    throw DomainError("chop family needs a Delzant base polygon; vertex " +
                      to_string(report.offenders.front().point) + " has determinant " +
                      report.offenders.front().determinant.str());
  }
  if (sites.empty()) throw DomainError("chop family needs at least one chop site");
  const std::size_t n = base.size();
  std::size_t dim = 0;
  std::vector<int> chopped(n, 0);
  for (const auto& s : sites) {
    if (s.vertex >= n) {
      throw DomainError("chop vertex " + std::to_string(s.vertex) + " out of range [0, " +
                        std::to_string(n) + ")");
    }
    if (chopped[s.vertex]++) throw DomainError("vertex " + std::to_string(s.vertex) + " chopped twice");
    dim = std::max(dim, s.parameter + 1);
  }
  std::vector<bool> used(dim, false);
  for (const auto& s : sites) used[s.parameter] = true;
  if (std::find(used.begin(), used.end(), false) != used.end()) {
    throw DomainError("chop parameters must be numbered 0..d-1 without gaps");
  }

  FamilySpec f;
  f.kind_ = FamilyKind::chop;
  f.domain_.assign(dim, ParameterDomain{Rational(0), std::nullopt});
  for (const auto& s : sites) {
    // Edge i joins vertices i and i+1; share its length among chopped ends.
    for (const std::size_t e : {s.vertex, (s.vertex + n - 1) % n}) {
      const int ends = chopped[e] + chopped[(e + 1) % n];
      const Rational bound = base.edge(e).lambda_length / ends;
      auto& hi = f.domain_[s.parameter].hi;
      if (!hi || bound < *hi) hi = bound;
    }
  }
  for (std::size_t i = 0; i < dim; ++i) f.names_.push_back("eps" + std::to_string(i + 1));
  f.base_ = std::move(base);
  f.sites_ = std::move(sites);
  f.finish();
  return f;
}

void FamilySpec::finish() {
  std::vector<Rational> ref;
  for (const auto& d : domain_) ref.push_back(reference_point(d));
  const MomentPolygon p = family_polygon(*this, ref);
  directions_.clear();
  for (const auto& e : p.edges()) directions_.push_back(e.direction);
}

std::string FamilySpec::name() const {
  switch (kind_) {
    case FamilyKind::hirzebruch: return "hirzebruch(" + std::to_string(k_) + ")";
    case FamilyKind::two_point: return "two_point";
    case FamilyKind::symmetric_two_point: return "symmetric_two_point";
    case FamilyKind::chop: return "chop(" + std::to_string(base_->size()) + "-gon, " +
                                  std::to_string(sites_.size()) + " sites)";
  }
  return "family";
}

MomentPolygon family_polygon(const FamilySpec& family, std::span<const Rational> params) {
  check_params(family, params);
  return build_polygon(vertices_at<Rational>(family, params));
}

Rational family_eval(const FamilySpec& family, std::span<const Rational> params) {
  return virtual_action(family_polygon(family, params));
}

double family_eval_float(const FamilySpec& family, std::span<const double> params) {
  check_params(family, params);
  const auto v = vertices_at<double>(family, params);
  const auto& dirs = family.edge_directions();
  std::vector<double> lambda(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const BasicPoint<double> u{to_double(Rational(dirs[i].a)), to_double(Rational(dirs[i].b))};
    lambda[i] = dot(v[(i + 1) % v.size()] - v[i], u) / dot(u, u);
  }
  return virtual_action_from(detail::measures_from<double>(v, lambda));
}

// ---------------------------------------------------------------------------

GridAxis GridAxis::linspace(const Rational& lo, const Rational& hi, std::size_t steps) {
  GridAxis axis;
  if (steps == 0) return axis;
  if (steps == 1) {
    axis.values.push_back(lo);
    return axis;
  }
  const Rational step = (hi - lo) / static_cast<long long>(steps - 1);
  for (std::size_t i = 0; i < steps; ++i) axis.values.push_back(lo + step * static_cast<long long>(i));
  return axis;
}

namespace {

unsigned thread_count(unsigned requested, std::size_t jobs) {
  unsigned n = requested;
  if (n == 0) {
    if (const char* env = std::getenv("DELZANT_THREADS"); env && *env) {
      n = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
    }
  }
  if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(jobs, 1)));
}

}  // namespace

std::vector<ScanRow> scan(const FamilySpec& family, const std::vector<GridAxis>& axes,
                          unsigned threads) {
  if (axes.empty()) throw DomainError("empty grid");
  if (axes.size() != family.dimension()) {
    throw DomainError(family.name() + " needs " + std::to_string(family.dimension()) +
                      " grid axes, got " + std::to_string(axes.size()));
  }
  std::size_t total = 1;
  for (std::size_t a = 0; a < axes.size(); ++a) {
    if (axes[a].values.empty()) throw DomainError("empty grid axis " + std::to_string(a + 1));
    for (const auto& v : axes[a].values) {
      if (!family.domain()[a].contains(v)) {
        throw DomainError("grid value " + to_string(v) + " for " + family.parameter_names()[a] +
                          " lies outside the domain of " + family.name());
      }
    }
    total *= axes[a].values.size();
  }

  std::vector<ScanRow> rows(total);
  for (std::size_t r = 0; r < total; ++r) {
    std::size_t rest = r;
    rows[r].params.resize(axes.size());
    for (std::size_t a = axes.size(); a-- > 0;) {
      rows[r].params[a] = axes[a].values[rest % axes[a].values.size()];
      rest /= axes[a].values.size();
    }
  }

  const unsigned n = thread_count(threads, total);
  auto work = [&](unsigned t) {
    for (std::size_t r = t; r < total; r += n) rows[r].action = family_eval(family, rows[r].params);
  };
  if (n == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(work, t);
  }
  return rows;
}

namespace {

std::string decimal(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::string scan_csv(const FamilySpec& family, const std::vector<ScanRow>& rows) {
  std::string out;
  for (const auto& name : family.parameter_names()) out += name + ',';
  out += "action,action_float\n";
  for (const auto& row : rows) {
    for (const auto& p : row.params) out += to_string(p) + ',';
    out += to_string(row.action) + ',' + decimal(to_double(row.action)) + '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string to_string(Classification c) {
  switch (c) {
    case Classification::interior_min: return "interior_min";
    case Classification::boundary: return "boundary";
    case Classification::saddle_suspect: return "saddle_suspect";
  }
  return "unknown";
}

namespace {

using Objective = std::function<double(double)>;

double fd_step(double x, const MinimizeOptions& o) { return o.fd_step * std::max(1.0, std::abs(x)); }

double central_difference(const Objective& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2 * h);
}

// Minimizes f on [lo, hi]; returns the abscissa.
double line_minimize(const Objective& f, double lo, double hi, const MinimizeOptions& o) {
  const double inv_phi = (std::sqrt(5.0) - 1) / 2;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 500 && b - a > o.tol; ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  double x = fc <= fd ? c : d;

  // Polish: bisect on the sign of the central-difference slope.
  auto slope = [&](double t) { return central_difference(f, t, fd_step(t, o)); };
  double w = 1e-7 * std::max(1.0, std::abs(x));
  for (int it = 0; it < 40; ++it, w *= 2) {
    const double l = std::max(lo, x - w), r = std::min(hi, x + w);
    if (r - l < 4 * fd_step(x, o)) continue;
    const double gl = slope(l + fd_step(l, o)), gr = slope(r - fd_step(r, o));
    if (gl < 0 && gr > 0) {
      double a2 = l + fd_step(l, o), b2 = r - fd_step(r, o);
      for (int k = 0; k < 200 && b2 - a2 > o.tol * 1e-3; ++k) {
        const double m = (a2 + b2) / 2;
        (slope(m) < 0 ? a2 : b2) = m;
      }
      const double refined = (a2 + b2) / 2;
      if (std::abs(slope(refined)) <= std::abs(slope(x))) x = refined;
      break;
    }
    if (l == lo && r == hi) break;
  }
  return x;
}

CriticalPoint finish_point(const FamilySpec& family, std::vector<double> x,
                           const std::vector<std::array<double, 2>>& box,
                           const MinimizeOptions& o, std::size_t sweeps) {
  CriticalPoint cp;
  cp.sweeps = sweeps;
  cp.action_value = family_eval_float(family, x);
  double g2 = 0;
  bool at_boundary = false;
  bool convex = true;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double h = fd_step(x[i], o);
    auto along = [&](double t) {
      auto y = x;
      y[i] = t;
      return family_eval_float(family, y);
    };
    const double span = box[i][1] - box[i][0];
    if (x[i] - box[i][0] < 10 * o.tol + 1e-9 * span || box[i][1] - x[i] < 10 * o.tol + 1e-9 * span) {
      at_boundary = true;
    }
    double lo_t = x[i] - h, hi_t = x[i] + h;
    const auto& dom = family.domain()[i];
    if (!dom.contains(lo_t) || !dom.contains(hi_t)) {
      at_boundary = true;
      continue;
    }
    const double g = (along(hi_t) - along(lo_t)) / (2 * h);
    g2 += g * g;
    const double h2 = 1e-3 * std::max(1.0, std::abs(x[i]));
    if (dom.contains(x[i] - h2) && dom.contains(x[i] + h2)) {
      if (along(x[i] + h2) + along(x[i] - h2) - 2 * cp.action_value <= 0) convex = false;
    }
  }
  cp.gradient_norm = std::sqrt(g2);

  if (at_boundary) {
    cp.classification = Classification::boundary;
  } else if (cp.gradient_norm < o.gradient_tol && convex) {
    cp.classification = Classification::interior_min;
  } else {
    cp.classification = Classification::saddle_suspect;
  }

  for (double v : x) cp.witness.push_back(approximate(v, o.max_witness_denominator));
  try {
    cp.action_value_exact_at_rational_witness = family_eval(family, cp.witness);
  } catch (const DomainError&) {
    // Witness rounded onto the domain boundary; fall back to the binary value.
    cp.witness.clear();
    for (double v : x) cp.witness.push_back(exact_from_double(v));
    cp.action_value_exact_at_rational_witness = family_eval(family, cp.witness);
  }
  cp.params = std::move(x);
  return cp;
}

void check_box(const FamilySpec& family, const std::vector<std::array<double, 2>>& box) {
  if (box.size() != family.dimension()) {
    throw DomainError("search box has " + std::to_string(box.size()) + " interval(s), " +
                      family.name() + " has dimension " + std::to_string(family.dimension()));
  }
  for (std::size_t i = 0; i < box.size(); ++i) {
    if (!(box[i][0] < box[i][1])) throw DomainError("empty search interval for " + family.parameter_names()[i]);
    if (!family.domain()[i].contains(box[i][0]) || !family.domain()[i].contains(box[i][1])) {
      throw DomainError("search interval for " + family.parameter_names()[i] +
                        " must lie inside the open domain of " + family.name());
    }
  }
}

}  // namespace

CriticalPoint minimize(const FamilySpec& family, double lo, double hi, const MinimizeOptions& options) {
  if (family.dimension() != 1) {
    throw DomainError("bracketed minimize needs a one-parameter family; " + family.name() +
                      " has dimension " + std::to_string(family.dimension()));
  }
  const std::vector<std::array<double, 2>> box{{lo, hi}};
  check_box(family, box);
  const Objective f = [&](double t) { return family_eval_float(family, std::span<const double>(&t, 1)); };
  const double x = line_minimize(f, lo, hi, options);
  return finish_point(family, {x}, box, options, 1);
}

CriticalPoint minimize(const FamilySpec& family, std::vector<double> init,
                       std::vector<std::array<double, 2>> box, const MinimizeOptions& options) {
  check_box(family, box);
  if (init.size() != family.dimension()) {
    throw DomainError("initial point has " + std::to_string(init.size()) + " coordinate(s), " +
                      family.name() + " has dimension " + std::to_string(family.dimension()));
  }
  for (std::size_t i = 0; i < init.size(); ++i) {
    if (init[i] < box[i][0] || init[i] > box[i][1]) {
      throw DomainError("initial " + family.parameter_names()[i] + " lies outside the search box");
    }
  }
  std::vector<double> x = std::move(init);
  std::size_t sweep = 0;
  while (sweep < options.max_sweeps) {
    ++sweep;
    double largest_move = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const Objective f = [&](double t) {
        auto y = x;
        y[i] = t;
        return family_eval_float(family, y);
      };
      const double next = line_minimize(f, box[i][0], box[i][1], options);
      largest_move = std::max(largest_move, std::abs(next - x[i]));
      x[i] = next;
    }
    if (largest_move < options.tol) break;
  }
  return finish_point(family, std::move(x), box, options, sweep);
}

std::string critical_point_report(const FamilySpec& family, const CriticalPoint& cp) {
  std::string out = "family = " + family.name() + "\n";
  for (std::size_t i = 0; i < cp.params.size(); ++i) {
    out += family.parameter_names()[i] + " = " + decimal(cp.params[i]) + "\n";
    out += family.parameter_names()[i] + "_witness = " + to_string(cp.witness[i]) + "\n";
  }
  out += "action = " + decimal(cp.action_value) + "\n";
  out += "action_exact_at_witness = " + to_string(cp.action_value_exact_at_rational_witness) + "\n";
  out += "gradient_norm = " + decimal(cp.gradient_norm) + "\n";
  out += "classification = " + to_string(cp.classification) + "\n";
  if (cp.classification == Classification::interior_min) out += "bach_flat_candidate = yes\n";
  return out;
}

std::string critical_point_csv(const FamilySpec& family, const CriticalPoint& cp) {
  std::string header, row;
  for (std::size_t i = 0; i < cp.params.size(); ++i) {
    const auto& name = family.parameter_names()[i];
    header += name + ',' + name + "_witness,";
    row += decimal(cp.params[i]) + ',' + to_string(cp.witness[i]) + ',';
  }
  header += "action,action_exact_at_witness,gradient_norm,classification\n";
  row += decimal(cp.action_value) + ',' + to_string(cp.action_value_exact_at_rational_witness) + ',' +
         decimal(cp.gradient_norm) + ',' + to_string(cp.classification) + '\n';
  return header + row;
}

DerivativeCheck derivative_check(const FamilySpec& family, std::span<const double> params, double h) {
  if (!(h > 0)) throw DomainError("finite-difference step must be positive");
  std::vector<double> x(params.begin(), params.end());
  DerivativeCheck out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto plus = x, minus = x;
    plus[i] += h;
    minus[i] -= h;
    out.fd_gradient.push_back((family_eval_float(family, plus) - family_eval_float(family, minus)) /
                              (2 * h));
  }

  std::vector<Rational> exact_x;
  for (double v : x) exact_x.push_back(exact_from_double(v));
  switch (family.kind()) {
    case FamilyKind::hirzebruch:
      out.exact_gradient = {to_double(hirzebruch_closed_form_derivative(family.k(), exact_x[0]))};
      break;
    case FamilyKind::two_point: {
      const auto g = two_point_closed_form_gradient(exact_x[0], exact_x[1]);
      out.exact_gradient = {to_double(g[0]), to_double(g[1])};
      break;
    }
    case FamilyKind::symmetric_two_point:
      out.exact_gradient = {to_double(symmetric_two_point_closed_form_derivative(exact_x[0]))};
      break;
    case FamilyKind::chop:
      break;
  }
  if (out.exact_gradient) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      out.discrepancy = std::max(out.discrepancy, std::abs(out.fd_gradient[i] - (*out.exact_gradient)[i]));
    }
  } else {
    out.discrepancy = std::numeric_limits<double>::quiet_NaN();
  }
  return out;
}

}  // namespace delzant
