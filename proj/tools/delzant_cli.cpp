// delzant: command-line front end for moment-polygon computations.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "delzant/families.hpp"
#include "delzant/invariants.hpp"
#include "delzant/measures.hpp"
#include "delzant/polygon.hpp"

using namespace delzant;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::vector<std::string> input;
  bool as_float = false;
  bool csv = false;
  double tol = 1e-10;
  std::uint64_t seed = 0;
  std::vector<std::string> grid;
  std::string bracket = "1e-3:20";
  std::string init;
  std::vector<std::string> box;
  std::string output;
  long long vertex = -1;
  std::string eps;
  unsigned threads = 0;
};

std::string decimal(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string num(const Rational& r, const Options& o) { return o.as_float ? decimal(to_double(r)) : to_string(r); }

std::string num(const PiScaled& p, const Options& o) { return o.as_float ? decimal(p.to_double()) : p.str(); }

std::string point(const Point& p, const Options& o) { return "(" + num(p.x, o) + "," + num(p.y, o) + ")"; }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

double parse_double(const std::string& s) {
  std::size_t used = 0;
  double x = 0;
  try {
    x = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ParseError("malformed number '" + s + "'");
  }
  if (used != s.size()) throw ParseError("malformed number '" + s + "'");
  return x;
}

std::size_t parse_index(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError("malformed index '" + s + "'");
  }
  return std::stoul(s);
}

std::int64_t parse_k(const std::string& s) {
  const Rational k = parse_rational(s);
  if (denominator(k) != 1) throw ParseError("Hirzebruch index must be an integer, got '" + s + "'");
  return numerator(k).convert_to<std::int64_t>();
}

void expect_args(const std::vector<std::string>& t, std::size_t n, const std::string& usage) {
  if (t.size() != n) throw UsageError("expected '" + usage + "'");
}

MomentPolygon load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return read_polygon(in);
}

MomentPolygon read_input(const std::vector<std::string>& t) {
  if (t.empty()) return read_polygon(std::cin);
  const std::string& g = t[0];
  if (g == "cp2") {
    expect_args(t, 2, "cp2 <a>");
    return gen_cp2(parse_rational(t[1]));
  }
  if (g == "p1xp1") {
    expect_args(t, 3, "p1xp1 <a> <b>");
    return gen_p1xp1(parse_rational(t[1]), parse_rational(t[2]));
  }
  if (g == "hirzebruch") {
    expect_args(t, 3, "hirzebruch <k> <alpha>");
    return gen_hirzebruch(parse_k(t[1]), parse_rational(t[2]));
  }
  if (g == "twopoint") {
    expect_args(t, 3, "twopoint <alpha> <beta>");
    return gen_two_point_blowup(parse_rational(t[1]), parse_rational(t[2]));
  }
  if (g == "file") {
    expect_args(t, 2, "file <path>");
    return load_file(t[1]);
  }
  throw ParseError("unknown generator '" + g + "' (expected cp2, p1xp1, hirzebruch, twopoint or file)");
}

FamilySpec read_family(const std::vector<std::string>& t) {
  if (t.empty()) throw UsageError("missing family (hirzebruch <k>, twopoint, symtwopoint or chop <path> v:p...)");
  const std::string& g = t[0];
  if (g == "hirzebruch") {
    expect_args(t, 2, "hirzebruch <k>");
    return FamilySpec::hirzebruch(parse_k(t[1]));
  }
  if (g == "twopoint") {
    expect_args(t, 1, "twopoint");
    return FamilySpec::two_point();
  }
  if (g == "symtwopoint") {
    expect_args(t, 1, "symtwopoint");
    return FamilySpec::symmetric_two_point();
  }
  if (g == "chop") {
    if (t.size() < 3) throw UsageError("expected 'chop <path> <vertex>:<parameter>...'");
    std::vector<ChopSite> sites;
    for (std::size_t i = 2; i < t.size(); ++i) {
      const auto parts = split(t[i], ':');
      if (parts.size() != 2) throw ParseError("chop site '" + t[i] + "' is not <vertex>:<parameter>");
      sites.push_back({parse_index(parts[0]), parse_index(parts[1])});
    }
    return FamilySpec::chop(load_file(t[1]), std::move(sites));
  }
  throw ParseError("unknown family '" + g + "' (expected hirzebruch, twopoint, symtwopoint or chop)");
}

GridAxis parse_axis(const std::string& spec) {
  if (spec.find(':') != std::string::npos) {
    const auto parts = split(spec, ':');
    if (parts.size() != 3) throw ParseError("grid '" + spec + "' is not <lo>:<hi>:<steps>");
    return GridAxis::linspace(parse_rational(parts[0]), parse_rational(parts[1]), parse_index(parts[2]));
  }
  GridAxis axis;
  for (const auto& v : split(spec, ',')) axis.values.push_back(parse_rational(v));
  return axis;
}

std::array<double, 2> parse_interval(const std::string& spec) {
  const auto parts = split(spec, ':');
  if (parts.size() != 2) throw ParseError("interval '" + spec + "' is not <lo>:<hi>");
  return {parse_double(parts[0]), parse_double(parts[1])};
}

std::string validate_report(const MomentPolygon& p, bool& ok) {
  const auto r = is_delzant(p);
  ok = r.delzant;
  std::string out = "vertices = " + std::to_string(p.size()) + "\n";
  if (r.delzant) return out + "delzant = yes\n";
  out += "delzant = no\n";
  for (const auto& d : r.offenders) {
    out += "corner at vertex " + to_string(d.point) + " (index " + std::to_string(d.vertex) +
           ") has determinant " + d.determinant.str() + "\n";
  }
  return out;
}

std::string measure_report(const MomentPolygon& p, const Options& o) {
  const auto m = compute_measures(p);
  if (o.csv) {
    if (!o.as_float) return measures_csv_header() + "\n" + measures_csv_row(m) + "\n";
    const Rational vals[] = {m.area, m.lambda_perimeter, m.interior_barycenter.x, m.interior_barycenter.y,
                             m.boundary_barycenter.x, m.boundary_barycenter.y, m.displacement.x,
                             m.displacement.y, m.inertia.xx, m.inertia.xy, m.inertia.yy};
    std::string row;
    for (const auto& v : vals) row += (row.empty() ? "" : ",") + num(v, o);
    return measures_csv_header() + "\n" + row + "\n";
  }
  return "area = " + num(m.area, o) + "\n" + "perimeter = " + num(m.lambda_perimeter, o) + "\n" +
         "interior_barycenter = " + point(m.interior_barycenter, o) + "\n" +
         "boundary_barycenter = " + point(m.boundary_barycenter, o) + "\n" +
         "d = " + point(m.displacement, o) + "\n" + "inertia = [" + num(m.inertia.xx, o) + " " +
         num(m.inertia.xy, o) + "; " + num(m.inertia.xy, o) + " " + num(m.inertia.yy, o) + "]\n";
}

std::string action_text(const ActionReport& r, const Options& o) {
  std::string out = std::string("delzant = ") + (r.delzant ? "yes" : "no") + "\n";
  out += "perimeter = " + num(r.chern_pairing, o) + "\n";
  out += "area = " + num(r.measures.area, o) + "\n";
  out += "d = " + point(r.measures.displacement, o) + "\n";
  out += "quad_form = " + num(r.quad_form, o) + "\n";
  out += "futaki = (" + num(r.futaki[0], o) + "," + num(r.futaki[1], o) + ")\n";
  out += "futaki_norm_sq = " + num(r.futaki_norm_sq, o) + "\n";
  out += "kahler_einstein_part = " + num(r.kahler_einstein_part(), o) + "\n";
  out += "action = " + num(r.virtual_action, o) + "\n";
  out += "calabi_bound = " + num(r.calabi_bound, o) + "\n";
  if (r.topology) {
    out += "euler = " + std::to_string(r.topology->euler) + "\n";
    out += "signature = " + std::to_string(r.topology->signature) + "\n";
    out += "weyl_bound = " + num(*r.weyl_bound, o) + "\n";
    out += "riemann_bound = " + num(*r.riemann_bound, o) + "\n";
    out += "ricci_bound = " + num(*r.ricci_bound, o) + "\n";
  } else {
    out += "note: polygon is not Delzant; topological bounds omitted\n";
  }
  return out;
}

std::string futaki_report(const MomentPolygon& p, const Options& o) {
  const auto f = futaki_vector(p);
  const auto n = futaki_norm_sq(p);
  if (o.csv) {
    return "futaki1,futaki2,norm_sq\n" + num(f[0], o) + "," + num(f[1], o) + "," + num(n, o) + "\n";
  }
  return "futaki = (" + num(f[0], o) + "," + num(f[1], o) + ")\nfutaki_norm_sq = " + num(n, o) + "\n";
}

std::string topology_report(const MomentPolygon& p, const Options& o) {
  const auto t = topology(p);
  if (o.csv) {
    return "euler,signature,b2,c1_squared\n" + std::to_string(t.euler) + "," + std::to_string(t.signature) +
           "," + std::to_string(t.b2) + "," + std::to_string(t.c1_squared()) + "\n";
  }
  return "euler = " + std::to_string(t.euler) + "\nsignature = " + std::to_string(t.signature) +
         "\nb2 = " + std::to_string(t.b2) + "\nc1_squared = " + std::to_string(t.c1_squared()) + "\n";
}

std::string scan_report(const Options& o) {
  const FamilySpec f = read_family(o.input);
  if (o.grid.empty()) throw UsageError("scan needs --grid (one per parameter)");
  std::vector<GridAxis> axes;
  for (const auto& g : o.grid) axes.push_back(parse_axis(g));
  return scan_csv(f, scan(f, axes, o.threads));
}

std::string minimize_report(const Options& o) {
  const FamilySpec f = read_family(o.input);
  MinimizeOptions mo;
  mo.tol = o.tol;
  CriticalPoint cp;
  if (o.init.empty()) {
    if (f.dimension() != 1) throw UsageError(f.name() + " has dimension " + std::to_string(f.dimension()) + "; pass --init");
    const auto [lo, hi] = parse_interval(o.bracket);
    cp = minimize(f, lo, hi, mo);
  } else {
    std::vector<double> x;
    for (const auto& v : split(o.init, ',')) x.push_back(parse_double(v));
    std::vector<std::array<double, 2>> box;
    for (const auto& b : o.box) box.push_back(parse_interval(b));
    if (box.empty()) {
      for (const auto& d : f.domain()) {
        const double lo = to_double(d.lo), hi = d.hi ? to_double(*d.hi) : 20.0;
        const double pad = 1e-6 * (hi - lo);
        box.push_back({lo + pad, hi - pad});
      }
    }
    cp = minimize(f, std::move(x), std::move(box), mo);
  }
  return o.csv ? critical_point_csv(f, cp) : critical_point_report(f, cp);
}

std::string blowup_report(const Options& o) {
  if (o.vertex < 0) throw UsageError("blowup needs --vertex");
  if (o.eps.empty()) throw UsageError("blowup needs --eps");
  return format_polygon(blow_up(read_input(o.input), static_cast<std::size_t>(o.vertex), parse_rational(o.eps)));
}

void emit(const std::string& text, const Options& o) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output);
  if (!out) throw UsageError("cannot write '" + o.output + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on moment polygons of toric surfaces"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_common = [&](CLI::App* sub, const char* input_help) {
    sub->add_option("input", o.input, input_help);
    sub->add_option("-o,--output", o.output, "Write the result to this file");
  };
  const char* polygon_help =
      "Generator spec: cp2 <a> | p1xp1 <a> <b> | hirzebruch <k> <alpha> | twopoint <alpha> <beta> | "
      "file <path>; standard input when omitted";
  const char* family_help = "Family: hirzebruch <k> | twopoint | symtwopoint | chop <path> <vertex>:<param>...";

  auto* gen = app.add_subcommand("gen", "Write a generated polygon in the text format");
  add_common(gen, polygon_help);
  auto* validate = app.add_subcommand("validate", "Check convexity and the Delzant condition");
  add_common(validate, polygon_help);
  auto* measure = app.add_subcommand("measure", "Area, perimeter, barycenters, displacement, inertia");
  add_common(measure, polygon_help);
  auto* action = app.add_subcommand("action", "Virtual action and derived bounds");
  add_common(action, polygon_help);
  auto* futaki = app.add_subcommand("futaki", "Futaki vector and its norm");
  add_common(futaki, polygon_help);
  auto* topo = app.add_subcommand("topology", "Euler characteristic and signature");
  add_common(topo, polygon_help);
  auto* scan_cmd = app.add_subcommand("scan", "Tabulate the action of a family on a grid (CSV)");
  add_common(scan_cmd, family_help);
  scan_cmd->add_option("--grid", o.grid, "Per-parameter grid: <lo>:<hi>:<steps> or v1,v2,...")->take_all();
  scan_cmd->add_option("--threads", o.threads, "Worker threads (default: DELZANT_THREADS or all cores)");
  auto* min_cmd = app.add_subcommand("minimize", "Locate a critical point of the action");
  add_common(min_cmd, family_help);
  min_cmd->add_option("--bracket", o.bracket, "One-parameter search interval <lo>:<hi>");
  min_cmd->add_option("--init", o.init, "Starting point v1,v2,... (coordinate descent)");
  min_cmd->add_option("--box", o.box, "Per-parameter search interval <lo>:<hi>")->take_all();
  auto* blow = app.add_subcommand("blowup", "Chop a corner and write the new polygon");
  add_common(blow, polygon_help);
  blow->add_option("--vertex", o.vertex, "Vertex index")->required();
  blow->add_option("--eps", o.eps, "Lambda-length of the new edge")->required();

  for (auto* sub : {gen, validate, measure, action, futaki, topo, scan_cmd, min_cmd, blow}) {
    sub->add_flag("--float", o.as_float, "Decimal instead of exact output");
    sub->add_flag("--csv", o.csv, "CSV output");
    sub->add_option("--tol", o.tol, "Optimizer parameter tolerance");
    sub->add_option("--seed", o.seed, "Seed for randomized paths");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) {
      emit(format_polygon(read_input(o.input)), o);
    } else if (validate->parsed()) {
      bool ok = true;
      const std::string text = validate_report(read_input(o.input), ok);
      emit(text, o);
      if (!ok) {
        std::cerr << "error: polygon is not Delzant\n";
        return 1;
      }
    } else if (measure->parsed()) {
      emit(measure_report(read_input(o.input), o), o);
    } else if (action->parsed()) {
      const auto r = action_report(read_input(o.input));
      emit(o.csv ? invariants_csv_header(o.as_float) + "\n" + invariants_csv_row(r, o.as_float) + "\n"
                 : action_text(r, o),
           o);
    } else if (futaki->parsed()) {
      emit(futaki_report(read_input(o.input), o), o);
    } else if (topo->parsed()) {
      emit(topology_report(read_input(o.input), o), o);
    } else if (scan_cmd->parsed()) {
      emit(scan_report(o), o);
    } else if (min_cmd->parsed()) {
      emit(minimize_report(o), o);
    } else if (blow->parsed()) {
      emit(blowup_report(o), o);
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
