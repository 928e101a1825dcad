// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "test_support.hpp"
#include "unimod/arlab.hpp"
#include "unimod/circlemaps.hpp"
#include "unimod/curvelab.hpp"
#include "unimod/error.hpp"
#include "unimod/expr.hpp"
#include "unimod/levelsolver.hpp"
#include "unimod/roots.hpp"

using namespace unimod;
using unimod::testing::gq;

namespace {

using Clock = std::chrono::steady_clock;

const VarPair kZW{'z', 'w'};

RatFun rf(const char* text) { return parse_ratfun(text); }

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// a and b differ by a nonzero constant factor.
bool associates(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a * b.lex_leading() == b * a.lex_leading();
}

// Primitive cube root of unity -1/2 + s*i*sqrt(3)/2 in a tiny ball.
ComplexBall cube_root_ball(int s) {
  const mpfr_prec_t prec = 512;
  Float re(-0.5, prec), im(prec), rad(kRadiusPrecision);
  mpfr_sqrt_ui(im.get(), 3, MPFR_RNDN);
  mpfr_div_si(im.get(), im.get(), 2 * s, MPFR_RNDN);
  mpfr_set_ui_2exp(rad.get(), 1, -500, MPFR_RNDU);
  return ComplexBall(re, im, rad);
}

GaussianRational random_disc_point(std::mt19937& rng) {
  while (true) {
    GaussianRational a = unimod::testing::random_gaussian(rng, 6, 7);
    if (gr_norm(a) < 1) return a;
  }
}

// Q Q* = 1 computed directly from the definition of Q*.
bool reflection_criterion(const RatFun& q) { return q * circle_reflection(q) == RatFun(GaussianRational(1)); }

// The Cayley conjugate has real coefficients up to a common scalar.
bool cayley_criterion(const RatFun& q) { return rf_is_real_up_to_reduction(cayley_conjugate(q)); }

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome tangent_circles() {
  const auto t0 = Clock::now();
  const SolutionReport r = solve_unimodular_pair(rf("z"), rf("z+2"));
  const double t = seconds_since(t0);
  std::ostringstream d;
  bool ok = r.status == SolveStatus::FINITE && r.points.size() == 1 && r.bound == 4 && t < 1.0;
  if (r.points.size() == 1) {
    const auto& p = r.points[0];
    ok = ok && p.newton_certified && p.z.contains(gq(-1)) && p.z.radius_double() < 1e-20;
    d << "radius " << p.z.radius_double() << ", ";
  }
  d << r.points.size() << " point(s), bound " << r.bound << ", " << t << " s";
  return {ok, d.str()};
}

Outcome ar_classic() {
  const auto t0 = Clock::now();
  const ARReport r = ar_accumulate(parse_polynomial("z"), parse_polynomial("z+1"), 12);
  const double t = seconds_since(t0);
  const UniPoly cyc = parse_polynomial("z^2+z+1");
  bool ok = r.table.size() == 12;
  for (const auto& row : r.table) {
    ok = ok && row.gcd == (row.k == 6 || row.k == 12 ? cyc : UniPoly::constant(1));
  }
  ok = ok && r.stabilized_F == cyc && r.stabilized_at == 6 && t < 5.0;
  std::ostringstream d;
  d << "stabilized_F " << to_string(r.stabilized_F) << " at " << (r.stabilized_at ? *r.stabilized_at : -1) << ", "
    << t << " s";
  return {ok, d.str()};
}

Outcome degenerate_witness() {
  const SolutionReport r = solve_unimodular_pair(rf("z^2"), rf("(z^2-1/2)/(1-1/2*z^2)"));
  bool ok = r.status == SolveStatus::DEGENERATE && r.shared_component &&
            associates(*r.shared_component, parse_bipoly("z^2*w^2-1", kZW)) && r.witness;
  std::ostringstream d;
  d << "status " << (r.status == SolveStatus::DEGENERATE ? "DEGENERATE" : "FINITE");
  if (r.witness) {
    const RatFun& w = r.witness->W;
    // Degree 2 and even means W is a Mobius image of z^2.
    const bool even = rf_compose(w, rf("-z")) == w;
    const bool rebuilt = rf_compose(r.witness->Q1, w) == rf("z^2") &&
                         rf_compose(r.witness->Q2, w) == rf("(z^2-1/2)/(1-1/2*z^2)");
    ok = ok && rf_degree(w) == 2 && even && rebuilt && r.witness->residual < 1e-10;
    d << ", W " << to_string(w) << ", residual " << r.witness->residual;
  }
  return {ok, d.str()};
}

Outcome random_bound() {
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<int> deg(1, 3), kind(0, 3);
  int pairs = 0, finite = 0, certified = 0, failures = 0;
  long max_ratio_num = 0, max_ratio_den = 1;
  std::string first_failure;
  while (pairs < 200) {
    auto draw = [&]() {
      const int n = deg(rng);
      std::vector<GaussianRational> num, den;
      for (int k = 0; k <= n; ++k) num.push_back(unimod::testing::random_gaussian_integer(rng, 3));
      while (num.back().is_zero()) num.back() = unimod::testing::random_gaussian_integer(rng, 3);
      if (kind(rng) != 0) return RatFun(UniPoly(num));
      const int m = deg(rng) - 1;
      for (int k = 0; k <= m; ++k) den.push_back(unimod::testing::random_gaussian_integer(rng, 3));
      while (den.back().is_zero()) den.back() = unimod::testing::random_gaussian_integer(rng, 3);
      return rf_make(UniPoly(num), UniPoly(den));
    };
    const RatFun p1 = draw(), p2 = draw();
    if (p1.is_constant() || p2.is_constant()) continue;
    ++pairs;
    try {
      const SolutionReport r = solve_unimodular_pair(p1, p2);
      if (r.status != SolveStatus::FINITE) continue;
      ++finite;
      const long n = static_cast<long>(r.points.size());
      if (n * max_ratio_den > max_ratio_num * r.bound) {
        max_ratio_num = n;
        max_ratio_den = r.bound;
      }
      bool ok = n <= r.bound;
      for (const auto& p : r.points) {
        if (!p.newton_certified) continue;
        ++certified;
        ok = ok && unit_deviation(rf_eval_ball(p1, p.z)) < 1e-10 && unit_deviation(rf_eval_ball(p2, p.z)) < 1e-10;
      }
      if (!ok) {
        ++failures;
        if (first_failure.empty()) first_failure = to_string(p1) + " , " + to_string(p2);
      }
    } catch (const Error& e) {
      ++failures;
      if (first_failure.empty()) first_failure = to_string(p1) + " , " + to_string(p2) + ": " + e.what();
    }
  }
  std::ostringstream d;
  d << pairs << " pairs, " << finite << " FINITE, " << certified << " certified points, max |points|/bound "
    << max_ratio_num << "/" << max_ratio_den << ", " << failures << " failures";
  if (!first_failure.empty()) d << " (first: " << first_failure << ")";
  return {failures == 0 && pairs == 200, d.str()};
}

Outcome blaschke_cross_validation() {
  std::mt19937 rng(5150);
  std::uniform_int_distribution<int> count(1, 3), mult(1, 3), power(0, 3);
  int finite_ok = 0, agree = 0, negatives_rejected = 0;
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<std::pair<GaussianRational, int>> zeros;
    for (int k = count(rng); k > 0; --k) zeros.emplace_back(random_disc_point(rng), mult(rng));
    const RatFun b = make_blaschke(gr_pow(gq(3, 5, 4, 5), power(rng)), zeros);
    finite_ok += is_finite_blaschke(b);
    agree += reflection_criterion(b) == cayley_criterion(b) && reflection_criterion(b);
    GaussianRational eps;
    while (eps.is_zero()) eps = unimod::testing::random_gaussian(rng, 3, 97);
    const RatFun neg = rf_make(b.num() + UniPoly::constant(eps), b.den());
    const bool r1 = reflection_criterion(neg), r2 = cayley_criterion(neg);
    agree += r1 == r2;
    negatives_rejected += !r1 && !r2;
  }
  std::ostringstream d;
  d << finite_ok << "/500 finite Blaschke, " << agree << "/1000 criteria agree, " << negatives_rejected
    << "/500 perturbed rejected";
  return {finite_ok == 500 && agree == 1000 && negatives_rejected == 500, d.str()};
}

Outcome degree_law() {
  std::mt19937 rng(777);
  int proper = 0, ok_count = 0, drawn = 0;
  while (proper < 100 && drawn < 1000) {
    ++drawn;
    const int n1 = 1 + drawn % 3, n2 = 1 + (drawn / 3) % 3;
    const RatFun p1 = unimod::testing::random_ratfun(rng, n1, drawn % 2 == 0 ? 0 : n1 - 1);
    const RatFun p2 = unimod::testing::random_ratfun(rng, n2, drawn % 4 < 2 ? 0 : n2);
    // Proper iff the generated field is all of C(z).
    if (rf_degree(luroth_generator(p1, p2)) != 1) continue;
    ++proper;
    const PlaneCurve c = implicitize(p1, p2);
    ok_count += c.F.degree_second() == n1 && c.F.degree_first() == n2;
  }
  const BiPoly raw = implicit_resultant(rf("z^2"), rf("z^4"));
  const PlaneCurve c = implicitize(rf("z^2"), rf("z^4"));
  const BiPoly line = parse_bipoly("y - x^2");
  const bool improper = associates(raw, line * line) && associates(c.F, line);
  std::ostringstream d;
  d << ok_count << "/" << proper << " proper pairs obey the law, raw (z^2, z^4) resultant " << to_string(raw);
  return {proper == 100 && ok_count == 100 && improper, d.str()};
}

Outcome cayley_correspondence() {
  const bool assoc = associates(cayley_substitute(parse_bipoly("x*y - 1")), parse_bipoly("x*y + 1"));
  const CurveReport inf = analyze_unimodular(make_curve(parse_bipoly("x*y - 1")));
  bool simple_ok = false;
  if (inf.simple_point) {
    const auto& sp = *inf.simple_point;
    // The point lies on the curve and on the torus.
    const ComplexBall value = parse_bipoly("x*y - 1").eval(sp.x, sp.y);
    simple_ok = value.contains_zero() && unit_deviation(sp.x) < 1e-20 && unit_deviation(sp.y) < 1e-20;
  }
  const CurveReport fin = analyze_unimodular(make_curve(parse_bipoly("x - y - 2")));
  const bool fin_ok = fin.verdict == CurveVerdict::FINITE_BOUNDED && fin.points.size() == 1 &&
                      fin.points[0].x.contains(gq(1)) && fin.points[0].y.contains(gq(-1));
  std::ostringstream d;
  d << "cayley " << to_string(cayley_substitute(parse_bipoly("x*y - 1"))) << ", xy-1 "
    << (inf.verdict == CurveVerdict::INFINITE_UNIMODULAR ? "INFINITE" : "FINITE") << ", x-y-2 "
    << fin.points.size() << " point(s)";
  return {assoc && inf.verdict == CurveVerdict::INFINITE_UNIMODULAR && simple_ok && fin_ok, d.str()};
}

Outcome luroth_round_trip() {
  const RatFun a = rf("z^2+1"), b = rf("z^4");
  const RatFun w = luroth_generator(a, b);
  bool ok = rf_degree(w) == 2 && rf_compose(left_compose_factor(a, w), w) == a &&
            rf_compose(left_compose_factor(b, w), w) == b;
  std::mt19937 rng(8080);
  int good = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const int dw = 1 + trial % 3;
    const RatFun w0 = unimod::testing::random_ratfun(rng, dw, trial % 2 == 0 ? 0 : dw - 1);
    // Coprime outer degrees keep C(Q1, Q2) = C(z).
    const RatFun q1 = unimod::testing::random_ratfun(rng, 2, trial % 3 == 0 ? 1 : 0);
    const RatFun q2 = unimod::testing::random_ratfun(rng, 3, trial % 5 == 0 ? 2 : 0);
    const RatFun p1 = rf_compose(q1, w0), p2 = rf_compose(q2, w0);
    try {
      const RatFun g = luroth_generator(p1, p2);
      good += rf_degree(g) == dw && rf_compose(left_compose_factor(p1, g), g) == p1 &&
              rf_compose(left_compose_factor(p2, g), g) == p2;
    } catch (const Error&) {
    }
  }
  std::ostringstream d;
  d << "W = " << to_string(w) << ", " << good << "/50 constructed pairs round trip";
  return {ok && good == 50, d.str()};
}

Outcome cross_module() {
  const ARReport ar = ar_accumulate(parse_polynomial("z"), parse_polynomial("z+1"), 12);
  const SolutionReport r = solve_unimodular_pair(rf("z"), rf("z+1"));
  int inside = 0;
  for (int s : {1, -1}) {
    const ComplexBall root = cube_root_ball(s);
    bool hit = false;
    for (const auto& p : r.points) hit = hit || p.z.contains(root);
    inside += hit;
  }
  std::ostringstream d;
  d << inside << "/2 cube roots inside solve balls, consistency " << (ar.consistency ? "true" : "false");
  return {inside == 2 && ar.consistency && ar.stabilized_F == parse_polynomial("z^2+z+1"), d.str()};
}

Outcome monomial_dichotomy() {
  const SolutionReport a = solve_unimodular_pair(rf("z"), rf("z^5"));
  const SolutionReport b = solve_unimodular_pair(rf("z"), rf("z^5+z"));
  std::ostringstream d;
  d << "z^5: " << (a.status == SolveStatus::DEGENERATE ? "DEGENERATE" : "FINITE")
    << ", z^5+z: " << (b.status == SolveStatus::DEGENERATE ? "DEGENERATE" : "FINITE") << " with " << b.points.size()
    << " point(s)";
  bool ok = a.status == SolveStatus::DEGENERATE && b.status == SolveStatus::FINITE;
  for (const auto& p : b.points) {
    if (p.newton_certified) ok = ok && unit_deviation(p.z) < 1e-10 && unit_deviation(rf_eval_ball(rf("z^5+z"), p.z)) < 1e-10;
  }
  return {ok, d.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"tangent circles: solve z z+2", tangent_circles},
      {"argcd z z+1 --max-k 12", ar_classic},
      {"degenerate pair with witness", degenerate_witness},
      {"bound on 200 random pairs", random_bound},
      {"Blaschke cross-validation", blaschke_cross_validation},
      {"proper degree law and power extraction", degree_law},
      {"Cayley correspondence", cayley_correspondence},
      {"Luroth round trip", luroth_round_trip},
      {"cube roots inside solve balls", cross_module},
      {"monomial dichotomy", monomial_dichotomy},
  };
  int failed = 0, index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    const auto t0 = Clock::now();
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %2d %s: %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str(), seconds_since(t0));
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d/%zu criteria passed\n", index - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
