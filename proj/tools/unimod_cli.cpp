#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "unimod/expr.hpp"
#include "unimod/report.hpp"

using nlohmann::json;
using namespace unimod;

namespace {

struct Options {
  long precision = kDefaultPrecision;
  long max_precision = kDefaultMaxPrecision;
  double tolerance = 1e-12;
  int grid = 64;
  int max_k = 24;
  std::string format = "json";
  bool json_flag = false;
  bool reducible = false;
};

struct Output {
  json report;
  std::string text;
};

SolverConfig solver_config(const Options& o) {
  SolverConfig c;
  c.precision_bits = o.precision;
  c.max_precision_bits = o.max_precision;
  c.tolerance = o.tolerance;
  c.search.grid = o.grid;
  return c;
}

std::string ball_text(const ComplexBall& b) {
  std::ostringstream s;
  s << b.re().to_string(25) << " + " << b.im().to_string(25) << "*i  (radius " << b.radius_double() << ")";
  return s.str();
}

Output run_solve(const std::string& a, const std::string& b, const Options& o) {
  const RatFun p1 = parse_ratfun(a), p2 = parse_ratfun(b);
  const SolutionReport r = solve_unimodular_pair(p1, p2, solver_config(o));
  Output out{to_json(r), {}};
  out.report["inputs"] = {to_string(p1), to_string(p2)};
  std::ostringstream t;
  t << "status: " << to_string(r.status) << "\nbound: " << r.bound << "\n";
  if (r.status == SolveStatus::FINITE) {
    t << "points: " << r.points.size() << "\n";
    for (const auto& p : r.points) {
      t << "  z = " << ball_text(p.z) << (p.exact ? "  exact" : "") << (p.newton_certified ? "" : "  uncertified")
        << "\n";
    }
  } else {
    t << "shared component: " << to_string(*r.shared_component) << "\n";
    if (r.witness) {
      t << "witness: W = " << to_string(r.witness->W) << ", Q1 = " << to_string(r.witness->Q1)
        << ", Q2 = " << to_string(r.witness->Q2) << ", mobius = " << to_string(r.witness->mobius)
        << ", residual = " << r.witness->residual << "\n";
    } else {
      t << "witness: unavailable (" << r.witness_error << ")\n";
    }
  }
  out.text = t.str();
  return out;
}

Output run_blaschke_check(const std::string& a) {
  const RatFun q = parse_ratfun(a);
  const bool preserving = is_circle_preserving(q);
  const bool finite = preserving && is_finite_blaschke(q);
  Output out{json{{"input", to_string(q)}, {"verdict", preserving}, {"circle_preserving", preserving},
                  {"finite_blaschke", finite}},
             {}};
  out.text = std::string("circle preserving: ") + (preserving ? "yes" : "no") +
             "\nfinite Blaschke product: " + (finite ? "yes" : "no") + "\n";
  return out;
}

Output run_blaschke_split(const std::string& a, const Options& o) {
  const RatFun q = parse_ratfun(a);
  const BlaschkeForm f = blaschke_quotient_split(q, o.precision, o.max_precision);
  Output out{to_json(f), {}};
  out.report["input"] = to_string(q);
  std::ostringstream t;
  t << "zeta = " << ball_text(f.unimodular_constant) << "\n";
  for (const auto& fac : f.factors) {
    t << (fac.inside ? "  B1 zero " : "  B2 zero ") << ball_text(fac.zero) << "  multiplicity " << fac.multiplicity
      << "\n";
  }
  out.text = t.str();
  return out;
}

Output run_argcd(const std::string& a, const std::string& b, const Options& o) {
  const UniPoly p1 = parse_polynomial(a), p2 = parse_polynomial(b);
  const ARReport r = ar_accumulate(p1, p2, o.max_k, solver_config(o));
  Output out{to_json(r), {}};
  out.report["inputs"] = {to_string(p1), to_string(p2)};
  out.report["max_k"] = o.max_k;
  std::ostringstream t;
  for (const auto& row : r.table) t << "k = " << row.k << ": " << to_string(row.gcd) << "\n";
  t << "stabilized F: " << to_string(r.stabilized_F) << "\nstabilized at: " << *r.stabilized_at
    << "\nconsistent with solve: " << (r.consistency ? "yes" : "no") << "\n";
  out.text = t.str();
  return out;
}

Output run_curve_analyze(const std::string& a, const Options& o) {
  const PlaneCurve c = make_curve(parse_bipoly(a), !o.reducible);
  const CurveReport r = analyze_unimodular(c, solver_config(o));
  Output out{to_json(r), {}};
  out.report["F"] = to_string(c.F);
  out.report["degree"] = c.degree;
  out.report["max_singular_points"] = c.degree >= 1 ? json(max_singular_points(c.degree)) : json(nullptr);
  std::ostringstream t;
  t << "curve: " << to_string(c.F) << "\nverdict: " << to_string(r.verdict) << "\nbound: " << r.bound << "\n";
  if (r.simple_point) t << "simple point: x = " << ball_text(r.simple_point->x) << ", y = " << ball_text(r.simple_point->y) << "\n";
  for (const auto& p : r.points) t << "  (" << ball_text(p.x) << ", " << ball_text(p.y) << ")\n";
  out.text = t.str();
  return out;
}

Output run_curve_implicitize(const std::string& a, const std::string& b) {
  const RatFun p1 = parse_ratfun(a), p2 = parse_ratfun(b);
  const BiPoly raw = implicit_resultant(p1, p2);
  const PlaneCurve c = implicitize(p1, p2);
  const int power = c.degree > 0 ? raw.total_degree() / c.degree : 1;
  Output out{json{{"inputs", {to_string(p1), to_string(p2)}},
                  {"F", to_string(c.F)},
                  {"raw_resultant", to_string(raw)},
                  {"power", power},
                  {"degree", c.degree},
                  {"deg_x", c.F.degree_first()},
                  {"deg_y", c.F.degree_second()}},
             {}};
  out.text = "F = " + to_string(c.F) + "\nraw resultant power: " + std::to_string(power) + "\n";
  return out;
}

Output run_decompose(const std::string& a, const std::string& b) {
  const RatFun p1 = parse_ratfun(a), p2 = parse_ratfun(b);
  const RatFun w = luroth_generator(p1, p2);
  const RatFun q1 = left_compose_factor(p1, w), q2 = left_compose_factor(p2, w);
  Output out{json{{"inputs", {to_string(p1), to_string(p2)}},
                  {"W", to_string(w)},
                  {"degree_W", rf_degree(w)},
                  {"Q1", to_string(q1)},
                  {"Q2", to_string(q2)}},
             {}};
  out.text = "W = " + to_string(w) + "\nQ1 = " + to_string(q1) + "\nQ2 = " + to_string(q2) + "\n";
  return out;
}

Output run_bound(const std::string& a, const std::string& b) {
  const RatFun p1 = parse_ratfun(a), p2 = parse_ratfun(b);
  const long bound = count_bound(p1, p2);
  Output out{json{{"inputs", {to_string(p1), to_string(p2)}},
                  {"n1", rf_degree(p1)},
                  {"n2", rf_degree(p2)},
                  {"bound", bound}},
             {}};
  out.text = "bound: " + std::to_string(bound) + "\n";
  return out;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CertificationFailed:
      return 2;
    case ErrorKind::BoundViolation:
    case ErrorKind::InternalDisagreement:
      return 3;
    default:
      return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unimodular points of level curves |P1(z)| = |P2(z)| = 1 over Q(i)"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--precision", o.precision, "Initial working precision in bits")->check(CLI::Range(16L, 1L << 20));
  app.add_option("--max-precision", o.max_precision, "Precision cap in bits")->check(CLI::Range(16L, 1L << 20));
  app.add_option("--tolerance", o.tolerance, "Witness residual tolerance");
  app.add_option("--grid", o.grid, "Grid resolution of the real-point search")->check(CLI::Range(2, 4096));
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--json", o.json_flag, "Same as --format json");

  std::string a, b;
  std::function<Output()> action;

  auto* solve = app.add_subcommand("solve", "Points with |P1(z)| = |P2(z)| = 1");
  solve->fallthrough();
  solve->add_option("P1", a)->required();
  solve->add_option("P2", b)->required();
  solve->callback([&] { action = [&] { return run_solve(a, b, o); }; });

  auto* blaschke = app.add_subcommand("blaschke", "Blaschke product tools");
  blaschke->fallthrough();
  blaschke->require_subcommand(1);
  auto* check = blaschke->add_subcommand("check", "Circle preservation and finite Blaschke test");
  check->fallthrough();
  check->add_option("Q", a)->required();
  check->callback([&] { action = [&] { return run_blaschke_check(a); }; });
  auto* split = blaschke->add_subcommand("split", "Write Q as zeta * B1 / B2");
  split->fallthrough();
  split->add_option("Q", a)->required();
  split->callback([&] { action = [&] { return run_blaschke_split(a, o); }; });

  auto* argcd = app.add_subcommand("argcd", "gcd(P1^k - 1, P2^k - 1) table");
  argcd->fallthrough();
  argcd->add_option("P1", a)->required();
  argcd->add_option("P2", b)->required();
  argcd->add_option("--max-k", o.max_k, "Horizon K")->check(CLI::Range(1, 1000));
  argcd->callback([&] { action = [&] { return run_argcd(a, b, o); }; });

  auto* curve = app.add_subcommand("curve", "Plane curve tools");
  curve->fallthrough();
  curve->require_subcommand(1);
  auto* analyze = curve->add_subcommand("analyze", "Unimodular points of F(x, y) = 0");
  analyze->fallthrough();
  analyze->add_option("F", a)->required();
  analyze->add_flag("--reducible", o.reducible, "Do not assume F irreducible");
  analyze->callback([&] { action = [&] { return run_curve_analyze(a, o); }; });
  auto* implicit = curve->add_subcommand("implicitize", "Implicit equation of z -> (P1(z), P2(z))");
  implicit->fallthrough();
  implicit->add_option("P1", a)->required();
  implicit->add_option("P2", b)->required();
  implicit->callback([&] { action = [&] { return run_curve_implicitize(a, b); }; });

  auto* decompose = app.add_subcommand("decompose", "Common right factor W with P_i = Q_i o W");
  decompose->fallthrough();
  decompose->add_option("P1", a)->required();
  decompose->add_option("P2", b)->required();
  decompose->callback([&] { action = [&] { return run_decompose(a, b); }; });

  auto* bound = app.add_subcommand("bound", "(deg P1 + deg P2)^2");
  bound->fallthrough();
  bound->add_option("P1", a)->required();
  bound->add_option("P2", b)->required();
  bound->callback([&] { action = [&] { return run_bound(a, b); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  if (o.json_flag) o.format = "json";
  if (o.precision > o.max_precision) {
    std::cerr << "--precision must not exceed --max-precision\n";
    return 1;
  }
  if (!(o.tolerance > 0)) {
    std::cerr << "--tolerance must be positive\n";
    return 1;
  }

  const CLI::App* top = app.get_subcommands().front();
  std::string command = top->get_name();
  if (!top->get_subcommands().empty()) command += " " + top->get_subcommands().front()->get_name();
  try {
    Output out = action();
    if (o.format == "json") {
      json report = json{{"schema_version", kReportSchemaVersion}, {"command", command}};
      report.update(out.report);
      std::cout << report.dump(2) << "\n";
    } else {
      std::cout << out.text;
    }
    return 0;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    if (o.format == "json") {
      json report = json{{"schema_version", kReportSchemaVersion}, {"command", command}};
      report.update(error_json(e.kind(), e.what()));
      std::cout << report.dump(2) << "\n";
    }
    return exit_code(e.kind());
  }
}
