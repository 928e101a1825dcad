#include "unimod/levelsolver.hpp"

#include <algorithm>
#include <cmath>

#include "unimod/circlemaps.hpp"
#include "unimod/curvelab.hpp"
#include "unimod/error.hpp"
#include "unimod/realcurve.hpp"

namespace unimod {

namespace {

const VarPair kZW{'z', 'w'};

bool possibly_real(const ComplexBall& b) { return mpfr_cmpabs(b.im().get(), b.radius().get()) <= 0; }

// x + iy for real enclosures x, y.
ComplexBall combine(const ComplexBall& x, const ComplexBall& y) {
  Float rad(kRadiusPrecision);
  mpfr_add(rad.get(), x.radius().get(), y.radius().get(), MPFR_RNDU);
  return ComplexBall(x.re(), y.re(), rad);
}

// Rescales G so that sigma(G) = G.
BiPoly sigma_normalize(const BiPoly& g) {
  const BiPoly s = swap_conj(g);
  GaussianRational c;
  for (int b = 0; b <= g.degree_second() && c.is_zero(); ++b) {
    for (int a = 0; a <= g.row(b).degree(); ++a) {
      if (!g.coeff(a, b).is_zero()) {
        c = s.coeff(a, b) / g.coeff(a, b);
        break;
      }
    }
  }
  if (!(s == g * c)) throw Error(ErrorKind::InternalDisagreement, "common factor of level polynomials is not sigma-stable");
  const GaussianRational scale = c == GaussianRational(-1) ? GaussianRational::i() : GaussianRational(1) + c;
  BiPoly out = normalize_positive(g * scale);
  out.set_vars(kZW);
  return out;
}

enum class Outcome { solution, excluded, unresolved };

struct Classified {
  Outcome outcome = Outcome::unresolved;
  CertifiedPoint point;
};

Classified classify(const BiPoly& f1, const BiPoly& f2, const ComplexBall& z, bool try_newton) {
  Classified out;
  const ComplexBall w = z.conj();
  if (!f1.eval(z, w).contains_zero() || !f2.eval(z, w).contains_zero()) {
    out.outcome = Outcome::excluded;
    return out;
  }
  if (auto q = guess_exact(z)) {
    const GaussianRational qc = gr_conj(*q);
    if (f1.eval(*q, qc).is_zero() && f2.eval(*q, qc).is_zero()) {
      out.outcome = Outcome::solution;
      out.point.z = to_ball(*q, z.precision());
      out.point.exact = true;
      out.point.newton_certified = true;
      return out;
    }
  }
  if (try_newton) {
    // The box is closed under (z, w) -> (conj w, conj z), which permutes the
    // zeros, so its unique zero has w = conj z.
    if (auto box = certify_box(f1, f2, Box2{z, w})) {
      out.outcome = Outcome::solution;
      out.point.z = box->inner.u;
      out.point.newton_certified = true;
      return out;
    }
  }
  out.point.z = z;
  return out;
}

// Candidate z-balls for isolated points of the real trace of a shared
// component: real singular points of its realification.
std::vector<ComplexBall> isolated_trace_candidates(const BiPoly& shared, mpfr_prec_t prec, mpfr_prec_t max_prec) {
  const BiPoly g = squarefree_part(realify(shared));
  if (g.is_constant()) return {};
  const BiPoly gx = derivative(g, Var::first), gy = derivative(g, Var::second);
  BiPoly d;
  for (int k = 0; k <= 8; ++k) {
    const BiPoly trial = k == 0 ? gx : (k == 1 ? gy : gx + gy * GaussianRational(k - 1));
    if (!trial.is_zero() && bi_gcd(g, trial).is_constant()) {
      d = trial;
      break;
    }
  }
  if (d.is_zero()) throw Error(ErrorKind::InternalDisagreement, "no derivative combination coprime to the component");
  std::vector<ComplexBall> out;
  const auto xs = projection_candidates(g, d, Var::first, prec, max_prec);
  const auto ys = projection_candidates(g, d, Var::second, prec, max_prec);
  for (const auto& x : xs) {
    if (!possibly_real(x.location)) continue;
    for (const auto& y : ys) {
      if (!possibly_real(y.location)) continue;
      const ComplexBall xr = x.location.real_part(), yr = y.location.real_part();
      if (!g.eval(xr, yr).contains_zero() || !d.eval(xr, yr).contains_zero()) continue;
      out.push_back(combine(xr, yr));
    }
  }
  return out;
}

std::vector<CertifiedPoint> enumerate_points(const BiPoly& f1, const BiPoly& f2, const std::optional<BiPoly>& shared,
                                             const SolverConfig& config) {
  for (mpfr_prec_t prec = config.precision_bits;; prec = std::min(prec * 2, config.max_precision_bits)) {
    std::vector<CertifiedPoint> found;
    bool unresolved = false;
    for (const auto& r : projection_candidates(f1, f2, Var::first, prec, config.max_precision_bits)) {
      Classified c = classify(f1, f2, r.location, true);
      if (c.outcome == Outcome::excluded) continue;
      if (c.outcome == Outcome::unresolved) unresolved = true;
      found.push_back(std::move(c.point));
    }
    if (shared) {
      for (const auto& z : isolated_trace_candidates(*shared, prec, config.max_precision_bits)) {
        Classified c = classify(*shared, *shared, z, false);
        if (c.outcome == Outcome::excluded) continue;
        if (c.outcome == Outcome::unresolved) unresolved = true;
        found.push_back(std::move(c.point));
      }
    }
    if (!unresolved || prec >= config.max_precision_bits) return found;
  }
}

std::vector<CertifiedPoint> finish(std::vector<CertifiedPoint> pts, const BiPoly& l1, const BiPoly& l2) {
  std::sort(pts.begin(), pts.end(), [](const CertifiedPoint& a, const CertifiedPoint& b) { return ball_less(a.z, b.z); });
  std::vector<CertifiedPoint> out;
  for (auto& p : pts) {
    auto same = std::find_if(out.begin(), out.end(), [&](const CertifiedPoint& q) { return q.z.overlaps(p.z); });
    if (same != out.end()) {
      if (!same->newton_certified && p.newton_certified) *same = std::move(p);
      continue;
    }
    out.push_back(std::move(p));
  }
  for (auto& p : out) {
    p.residual1 = l1.eval(p.z, p.z.conj());
    p.residual2 = l2.eval(p.z, p.z.conj());
  }
  return out;
}

// Exact rational close to a float, via continued fractions when a short one exists.
BigRational to_exact(const Float& v) {
  BigRational tol(1);
  mpq_div_2exp(tol.get_mpq_t(), tol.get_mpq_t(), static_cast<mp_bitcnt_t>(v.precision() / 2));
  mpz_class max_den = 1;
  max_den <<= static_cast<mp_bitcnt_t>(v.precision() / 4);
  if (auto q = rational_reconstruct(v, tol, max_den)) return *q;
  return v.to_rational();
}

GaussianRational to_exact(const ComplexBall& b) { return GaussianRational(to_exact(b.re()), to_exact(b.im())); }

// |a|^2 as a ball.
ComplexBall norm2(const ComplexBall& a) { return a * a.conj(); }

// Degree-1 map sending the unit circle onto the circline through a, b, c.
RatFun fit_circline(const ComplexBall& a, const ComplexBall& b, const ComplexBall& c) {
  if (a.overlaps(b) || b.overlaps(c) || a.overlaps(c)) {
    throw Error(ErrorKind::WitnessFitFailed, "trace images are not distinct");
  }
  const ComplexBall den = a.conj() * (b - c) + b.conj() * (c - a) + c.conj() * (a - b);
  const double scale = std::max({a.mag().to_double(), b.mag().to_double(), c.mag().to_double(), 1.0});
  if (den.mag().to_double() < 1e-30 * scale * scale) {
    // Collinear: the line a + d R, reached through the Cayley map.
    const ComplexBall dir = b - a;
    GaussianRational d = to_exact(dir);
    const GaussianRational p = to_exact(a);
    return rf_compose(rf_make(UniPoly({p, d}), UniPoly::constant(1)), cayley_map());
  }
  const ComplexBall num = norm2(a) * (b - c) + norm2(b) * (c - a) + norm2(c) * (a - b);
  const ComplexBall center = num / den;
  const ComplexBall d = a - center;
  Float radius(d.precision());
  mpfr_hypot(radius.get(), d.re().get(), d.im().get(), MPFR_RNDN);
  const GaussianRational c0 = to_exact(center);
  const GaussianRational r(to_exact(radius));
  return rf_make(UniPoly({c0, r}), UniPoly::constant(1));
}

double circle_residual(const RatFun& q, const RatFun& mobius, mpfr_prec_t prec) {
  const RatFun composed = rf_compose(q, mobius);
  double worst = 0.0;
  for (const auto& s : unimodular_samples(16)) {
    if (composed.den().eval(s).is_zero()) continue;
    worst = std::max(worst, unit_deviation(rf_eval_ball(composed, to_ball(s, prec))));
  }
  return worst;
}

}  // namespace

LevelPoly level_poly(const RatFun& p) {
  if (p.is_constant()) throw Error(ErrorKind::ConstantInput, "level polynomial of a constant");
  const BiPoly a = BiPoly::from_first(p.num(), kZW) * BiPoly::from_second(conj_poly(p.num()), kZW);
  const BiPoly b = BiPoly::from_first(p.den(), kZW) * BiPoly::from_second(conj_poly(p.den()), kZW);
  BiPoly l = normalize_positive(a - b);
  l.set_vars(kZW);
  return LevelPoly{l, p};
}

long count_bound(const RatFun& p1, const RatFun& p2) {
  const long n = rf_degree(p1) + rf_degree(p2);
  return n * n;
}

std::vector<ComplexBall> trace_points(const BiPoly& g, const SearchConfig& search, std::size_t max_points,
                                      mpfr_prec_t precision_bits) {
  std::vector<ComplexBall> out;
  for (const auto& p : find_simple_real_points(realify(g), search, max_points)) {
    out.push_back(to_ball(p, precision_bits));
  }
  return out;
}

SolutionReport solve_unimodular_pair(const RatFun& p1, const RatFun& p2, const SolverConfig& config) {
  SolutionReport report;
  report.bound = count_bound(p1, p2);
  if (p1.is_constant() && p2.is_constant()) throw Error(ErrorKind::ConstantInput, "both inputs are constant");
  if (p1.is_constant() || p2.is_constant()) {
    const GaussianRational c = (p1.is_constant() ? p1 : p2).constant_value();
    if (gr_norm(c) != 1) return report;
    const RatFun& other = p1.is_constant() ? p2 : p1;
    report.status = SolveStatus::DEGENERATE;
    report.shared_component = level_poly(other).poly;
  } else {
    const BiPoly l1 = level_poly(p1).poly, l2 = level_poly(p2).poly;
    const BiPoly g = bi_gcd(l1, l2);
    std::optional<BiPoly> shared;
    if (!g.is_constant()) {
      shared = sigma_normalize(g);
      if (!find_simple_real_points(realify(*shared), config.search, 1).empty()) {
        report.status = SolveStatus::DEGENERATE;
        report.shared_component = shared;
      }
    }
    if (report.status == SolveStatus::FINITE) {
      BiPoly f1 = l1, f2 = l2;
      if (shared) {
        f1 = exact_div(l1, g);
        f2 = exact_div(l2, g);
      }
      report.points = finish(enumerate_points(f1, f2, shared, config), l1, l2);
      if (static_cast<long>(report.points.size()) > report.bound) {
        throw Error(ErrorKind::BoundViolation, std::to_string(report.points.size()) + " points exceed the bound " +
                                                   std::to_string(report.bound));
      }
      return report;
    }
  }
  report.trace_points = trace_points(*report.shared_component, config.search, 3, config.precision_bits);
  try {
    report.witness = explain_degenerate(p1, p2, *report.shared_component, report.trace_points, config);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::WitnessFitFailed && e.kind() != ErrorKind::NotAFactor) throw;
    report.witness_error = e.what();
  }
  return report;
}

DegeneracyWitness explain_degenerate(const RatFun& p1, const RatFun& p2, const BiPoly& shared_component,
                                     const std::vector<ComplexBall>& solved_points, const SolverConfig& config) {
  (void)shared_component;
  DegeneracyWitness out;
  out.W = luroth_generator(p1, p2);
  out.Q1 = left_compose_factor(p1, out.W);
  out.Q2 = left_compose_factor(p2, out.W);
  std::vector<ComplexBall> images;
  for (const auto& z : solved_points) {
    if (images.size() == 3) break;
    try {
      images.push_back(rf_eval_ball(out.W, z));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PoleInBall) throw;
    }
  }
  if (images.size() < 3) throw Error(ErrorKind::WitnessFitFailed, "fewer than three usable trace points");
  out.mobius = fit_circline(images[0], images[1], images[2]);
  const mpfr_prec_t prec = std::max<mpfr_prec_t>(config.precision_bits, 128);
  out.residual = std::max(circle_residual(out.Q1, out.mobius, prec), circle_residual(out.Q2, out.mobius, prec));
  if (!(out.residual <= config.tolerance)) {
    throw Error(ErrorKind::WitnessFitFailed, "circline fit residual " + std::to_string(out.residual));
  }
  return out;
}

}  // namespace unimod
