// Python bindings. Rationals cross the boundary as "p/q" strings; the
// Python package converts them to fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "delzant/families.hpp"
#include "delzant/invariants.hpp"
#include "delzant/measures.hpp"
#include "delzant/polygon.hpp"

namespace py = pybind11;
using namespace delzant;

namespace {

using RationalText = std::string;
using PointText = std::pair<RationalText, RationalText>;
using PiText = std::pair<RationalText, int>;

Rational R(const std::string& s) { return parse_rational(s); }
PointText P(const Point& p) { return {to_string(p.x), to_string(p.y)}; }
PiText Pi(const PiScaled& p) { return {to_string(p.coefficient()), p.pi_power()}; }

std::vector<Rational> rationals(const std::vector<std::string>& xs) {
  std::vector<Rational> out;
  for (const auto& x : xs) out.push_back(R(x));
  return out;
}

py::dict measures_dict(const PolygonMeasures& m) {
  py::dict d;
  d["area"] = to_string(m.area);
  d["perimeter"] = to_string(m.lambda_perimeter);
  d["interior_barycenter"] = P(m.interior_barycenter);
  d["boundary_barycenter"] = P(m.boundary_barycenter);
  d["displacement"] = P(m.displacement);
  d["inertia"] = std::vector<std::string>{to_string(m.inertia.xx), to_string(m.inertia.xy), to_string(m.inertia.yy)};
  d["quad_form"] = to_string(m.quadratic_form());
  return d;
}

py::dict critical_dict(const CriticalPoint& cp) {
  py::dict d;
  d["params"] = cp.params;
  d["action"] = cp.action_value;
  std::vector<std::string> w;
  for (const auto& x : cp.witness) w.push_back(to_string(x));
  d["witness"] = w;
  d["action_at_witness"] = to_string(cp.action_value_exact_at_rational_witness);
  d["gradient_norm"] = cp.gradient_norm;
  d["classification"] = to_string(cp.classification);
  d["sweeps"] = cp.sweeps;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact moment-polygon computations";
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<MomentPolygon>(m, "Polygon")
      .def("vertices", [](const MomentPolygon& p) {
        std::vector<PointText> out;
        for (const auto& v : p.vertices()) out.push_back(P(v));
        return out;
      })
      .def("lambda_lengths", [](const MomentPolygon& p) {
        std::vector<std::string> out;
        for (const auto& e : p.edges()) out.push_back(to_string(e.lambda_length));
        return out;
      })
      .def("text", [](const MomentPolygon& p) { return format_polygon(p); })
      .def("__len__", &MomentPolygon::size)
      .def("__eq__", [](const MomentPolygon& a, const MomentPolygon& b) { return a == b; })
      .def("__repr__", [](const MomentPolygon& p) {
        std::string s = "Polygon([";
        for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + to_string(p.vertex(i));
        return s + "])";
      });

  m.def("build_polygon", [](const std::vector<PointText>& pts) {
    std::vector<Point> v;
    for (const auto& [x, y] : pts) v.push_back({R(x), R(y)});
    return build_polygon(std::move(v));
  });
  m.def("parse_polygon", &parse_polygon);
  m.def("gen_cp2", [](const std::string& a) { return gen_cp2(R(a)); });
  m.def("gen_p1xp1", [](const std::string& a, const std::string& b) { return gen_p1xp1(R(a), R(b)); });
  m.def("gen_hirzebruch", [](std::int64_t k, const std::string& a) { return gen_hirzebruch(k, R(a)); });
  m.def("gen_two_point_blowup",
        [](const std::string& a, const std::string& b) { return gen_two_point_blowup(R(a), R(b)); });
  m.def("blow_up", [](const MomentPolygon& p, std::size_t i, const std::string& eps) { return blow_up(p, i, R(eps)); });
  m.def("scale", [](const MomentPolygon& p, const std::string& c) { return scale(p, R(c)); });
  m.def("apply_map", [](const MomentPolygon& p, long long a, long long b, long long c, long long d,
                        const std::string& tx, const std::string& ty) {
    return apply_map(p, UnimodularMap(a, b, c, d, {R(tx), R(ty)}));
  });
  m.def("is_delzant", [](const MomentPolygon& p) {
    const auto r = is_delzant(p);
    std::vector<std::tuple<std::size_t, PointText, std::string>> bad;
    for (const auto& d : r.offenders) bad.emplace_back(d.vertex, P(d.point), d.determinant.str());
    return std::make_pair(r.delzant, bad);
  });

  m.def("measures", [](const MomentPolygon& p) { return measures_dict(compute_measures(p)); });
  m.def("monomial_moment", [](const MomentPolygon& p, int i, int j) { return to_string(monomial_moment(p, i, j)); });
  m.def("virtual_action", [](const MomentPolygon& p) { return to_string(virtual_action(p)); });
  m.def("futaki_vector", [](const MomentPolygon& p) {
    const auto f = futaki_vector(p);
    return std::make_pair(Pi(f[0]), Pi(f[1]));
  });
  m.def("futaki_norm_sq", [](const MomentPolygon& p) { return Pi(futaki_norm_sq(p)); });
  m.def("calabi_lower_bound", [](const MomentPolygon& p) { return Pi(calabi_lower_bound(p)); });
  m.def("weyl_lower_bound", [](const MomentPolygon& p) { return Pi(weyl_lower_bound(p)); });
  m.def("topology", [](const MomentPolygon& p) {
    const auto t = topology(p);
    return std::make_tuple(t.euler, t.signature, t.b2);
  });

  m.def("hirzebruch_closed_form",
        [](std::int64_t k, const std::string& a) { return to_string(hirzebruch_closed_form(k, R(a))); });
  m.def("hirzebruch_closed_form_derivative",
        [](std::int64_t k, const std::string& a) { return to_string(hirzebruch_closed_form_derivative(k, R(a))); });
  m.def("two_point_closed_form",
        [](const std::string& a, const std::string& b) { return to_string(two_point_closed_form(R(a), R(b))); });
  m.def("symmetric_two_point_closed_form",
        [](const std::string& a) { return to_string(symmetric_two_point_closed_form(R(a))); });

  py::class_<FamilySpec>(m, "Family")
      .def_static("hirzebruch", &FamilySpec::hirzebruch)
      .def_static("two_point", &FamilySpec::two_point)
      .def_static("symmetric_two_point", &FamilySpec::symmetric_two_point)
      .def_static("chop", [](const MomentPolygon& base, const std::vector<std::pair<std::size_t, std::size_t>>& sites) {
        std::vector<ChopSite> s;
        for (const auto& [v, p] : sites) s.push_back({v, p});
        return FamilySpec::chop(base, std::move(s));
      })
      .def_property_readonly("dimension", &FamilySpec::dimension)
      .def_property_readonly("parameter_names", &FamilySpec::parameter_names)
      .def_property_readonly("name", &FamilySpec::name)
      .def("polygon", [](const FamilySpec& f, const std::vector<std::string>& x) { return family_polygon(f, rationals(x)); })
      .def("eval", [](const FamilySpec& f, const std::vector<std::string>& x) { return to_string(family_eval(f, rationals(x))); })
      .def("eval_float", [](const FamilySpec& f, const std::vector<double>& x) { return family_eval_float(f, x); });

  m.def("scan", [](const FamilySpec& f, const std::vector<std::vector<std::string>>& axes, unsigned threads) {
    std::vector<GridAxis> g;
    for (const auto& a : axes) g.push_back(GridAxis{rationals(a)});
    std::vector<std::pair<std::vector<std::string>, std::string>> out;
    {
      py::gil_scoped_release release;
      for (const auto& row : scan(f, g, threads)) {
        std::vector<std::string> ps;
        for (const auto& p : row.params) ps.push_back(to_string(p));
        out.emplace_back(std::move(ps), to_string(row.action));
      }
    }
    return out;
  }, py::arg("family"), py::arg("axes"), py::arg("threads") = 0);

  m.def("minimize", [](const FamilySpec& f, double lo, double hi, double tol) {
    MinimizeOptions o;
    o.tol = tol;
    return critical_dict(minimize(f, lo, hi, o));
  }, py::arg("family"), py::arg("lo"), py::arg("hi"), py::arg("tol") = 1e-10);
  m.def("minimize_box", [](const FamilySpec& f, std::vector<double> init, std::vector<std::array<double, 2>> box, double tol) {
    MinimizeOptions o;
    o.tol = tol;
    return critical_dict(minimize(f, std::move(init), std::move(box), o));
  }, py::arg("family"), py::arg("init"), py::arg("box"), py::arg("tol") = 1e-10);
  m.def("derivative_check", [](const FamilySpec& f, const std::vector<double>& x, double h) {
    const auto d = derivative_check(f, x, h);
    return py::make_tuple(d.fd_gradient, d.exact_gradient, d.discrepancy);
  });
}
