#include "unimod/curvelab.hpp"

#include <algorithm>

#include "unimod/error.hpp"

namespace unimod {

namespace {

const VarPair kXY{'x', 'y'};

// A(t) - s B(t) as t-coefficients that are linear polynomials in s.
std::vector<UniPoly> pencil_coefficients(const RatFun& p) {
  const int n = rf_degree(p);
  std::vector<UniPoly> out;
  for (int k = 0; k <= n; ++k) out.push_back(UniPoly({p.num()[k], -p.den()[k]}));
  return out;
}

// The line s = c in the chosen variable.
BiPoly coordinate_line(const GaussianRational& c, Var v) {
  const BiPoly s = v == Var::first ? BiPoly::monomial(1, 1, 0, kXY) : BiPoly::monomial(1, 0, 1, kXY);
  return s - BiPoly::constant(c, kXY);
}

// Basis of the right nullspace of the matrix, by reduced row echelon form.
std::vector<std::vector<GaussianRational>> nullspace(std::vector<std::vector<GaussianRational>> m, std::size_t cols) {
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][col].is_zero()) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    const GaussianRational inv = GaussianRational(1) / m[row][col];
    for (auto& e : m[row]) e = e * inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      const GaussianRational f = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] = m[r][c] - f * m[row][c];
    }
    pivot_cols.push_back(col);
    ++row;
  }
  std::vector<std::vector<GaussianRational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
    std::vector<GaussianRational> v(cols);
    v[free] = GaussianRational(1);
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Numerator of P(y) - P(x).
BiPoly difference_numerator(const RatFun& p) {
  return BiPoly::from_first(p.den(), kXY) * BiPoly::from_second(p.num(), kXY) -
         BiPoly::from_first(p.num(), kXY) * BiPoly::from_second(p.den(), kXY);
}

bool may_be_unimodular(const ComplexBall& z) {
  return mpfr_cmp_ui(z.mig().get(), 1) <= 0 && mpfr_cmp_ui(z.mag().get(), 1) >= 0;
}

// 1 / conj(z)
ComplexBall circle_reflect_ball(const ComplexBall& z) { return inverse(z.conj()); }

std::optional<ChartPoint> chart_search(const BiPoly& f, const SearchConfig& search, mpfr_prec_t prec) {
  for (const int zeta : {1, -1}) {
    const BiPoly h = inverse_cayley_substitute(f, zeta);
    if (h.is_constant()) continue;
    const RealityResult r = conj_reality_test(h);
    if (!r.is_real_up_to_scalar) continue;
    const BiPoly real_h = h * *r.real_scale;
    auto pts = find_simple_real_points(real_h, search, 1);
    if (pts.empty()) continue;
    RatFun chart = inverse_cayley_map();
    if (zeta == -1) chart = chart * RatFun(GaussianRational(-1));
    const ComplexBall s = to_ball(GaussianRational(pts[0].x_mid()), prec);
    const ComplexBall t = to_ball(GaussianRational(pts[0].y_mid()), prec);
    return ChartPoint{zeta, pts[0], rf_eval_ball(chart, s), rf_eval_ball(chart, t)};
  }
  return std::nullopt;
}

enum class PairOutcome { unimodular, not_unimodular, unresolved };

struct PairResult {
  PairOutcome outcome = PairOutcome::unresolved;
  CurvePoint point;
};

// Classifies a candidate common zero (x, y) of F and its reflection.
PairResult classify_pair(const BiPoly& f, const BiPoly& fr, const ComplexBall& x, const ComplexBall& y) {
  PairResult out;
  if (!may_be_unimodular(x) || !may_be_unimodular(y)) {
    out.outcome = PairOutcome::not_unimodular;
    return out;
  }
  const auto gx = guess_exact(x), gy = guess_exact(y);
  if (gx && gy && f.eval(*gx, *gy).is_zero() && fr.eval(*gx, *gy).is_zero()) {
    const bool unit = gr_norm(*gx) == 1 && gr_norm(*gy) == 1;
    out.outcome = unit ? PairOutcome::unimodular : PairOutcome::not_unimodular;
    out.point = CurvePoint{to_ball(*gx, x.precision()), to_ball(*gy, y.precision()), true, true};
    return out;
  }
  // The reflection (x, y) -> (1/conj x, 1/conj y) permutes the common zeros,
  // so a unique zero in a box closed under it is fixed, hence unimodular.
  if (auto box = certify_box(f, fr, Box2{x, y})) {
    const ComplexBall rx = circle_reflect_ball(box->inner.u), ry = circle_reflect_ball(box->inner.v);
    if (box->outer.u.contains(rx) && box->outer.v.contains(ry)) {
      out.outcome = PairOutcome::unimodular;
      out.point = CurvePoint{box->inner.u, box->inner.v, true, false};
    } else if (!box->outer.u.overlaps(rx) || !box->outer.v.overlaps(ry)) {
      out.outcome = PairOutcome::not_unimodular;
    }
  }
  if (out.outcome == PairOutcome::unresolved) out.point = CurvePoint{x, y, false, false};
  return out;
}

std::vector<CurvePoint> enumerate_unimodular(const BiPoly& f, const BiPoly& fr, const SolverConfig& config) {
  for (mpfr_prec_t prec = config.precision_bits;; prec = std::min(prec * 2, config.max_precision_bits)) {
    const auto xs = projection_candidates(f, fr, Var::first, prec, config.max_precision_bits);
    const auto ys = projection_candidates(f, fr, Var::second, prec, config.max_precision_bits);
    std::vector<CurvePoint> found;
    bool unresolved = false;
    for (const auto& xr : xs) {
      if (!may_be_unimodular(xr.location)) continue;
      for (const auto& yr : ys) {
        if (!may_be_unimodular(yr.location)) continue;
        if (!f.eval(xr.location, yr.location).contains_zero()) continue;
        if (!fr.eval(xr.location, yr.location).contains_zero()) continue;
        PairResult r = classify_pair(f, fr, xr.location, yr.location);
        if (r.outcome == PairOutcome::not_unimodular) continue;
        if (r.outcome == PairOutcome::unresolved) unresolved = true;
        found.push_back(std::move(r.point));
      }
    }
    if (!unresolved || prec >= config.max_precision_bits) {
      std::sort(found.begin(), found.end(), [](const CurvePoint& a, const CurvePoint& b) {
        if (ball_less(a.x, b.x)) return true;
        if (ball_less(b.x, a.x)) return false;
        return ball_less(a.y, b.y);
      });
      std::vector<CurvePoint> unique;
      for (auto& p : found) {
        if (!unique.empty() && unique.back().x.overlaps(p.x) && unique.back().y.overlaps(p.y)) continue;
        unique.push_back(std::move(p));
      }
      return unique;
    }
  }
}

}  // namespace

PlaneCurve make_curve(const BiPoly& F, bool assumed_irreducible) {
  if (F.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "curve equation is zero");
  BiPoly f = normalize_lex(F);
  f.set_vars(kXY);
  return PlaneCurve{f, f.total_degree(), assumed_irreducible};
}

BiPoly implicit_resultant(const RatFun& p1, const RatFun& p2) {
  if (p1.is_constant() && p2.is_constant()) throw Error(ErrorKind::ImagePoint, "both coordinates are constant");
  if (p1.is_constant()) return coordinate_line(p1.constant_value(), Var::first);
  if (p2.is_constant()) return coordinate_line(p2.constant_value(), Var::second);
  return mixed_resultant(pencil_coefficients(p1), pencil_coefficients(p2), kXY);
}

PlaneCurve implicitize(const RatFun& p1, const RatFun& p2) {
  return make_curve(squarefree_part(implicit_resultant(p1, p2)));
}

RealityResult conj_reality_test(const BiPoly& F) {
  RealityResult out;
  if (F.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "reality test of zero");
  const GaussianRational& lead = F.lex_leading();
  const GaussianRational c = gr_conj(lead) / lead;
  if (!(conj_poly(F) == F * c)) return out;
  out.is_real_up_to_scalar = true;
  out.c = c;
  // conj(s F) = conj(s) c F, so s = 1 + c works unless c = -1.
  out.real_scale = c == GaussianRational(-1) ? GaussianRational::i() : GaussianRational(1) + c;
  GaussianRational root;
  if (gr_sqrt(c, root)) {
    out.lambda = root;
  } else {
    out.note = "c is not a square in Q(i); lambda lies in a quadratic extension";
  }
  return out;
}

BiPoly cayley_substitute(const BiPoly& G) {
  const GaussianRational i = GaussianRational::i();
  const UniPoly num({i, i}), den({1, -1});
  return normalize_lex(substitute_cleared(G, num, den, num, den));
}

BiPoly inverse_cayley_substitute(const BiPoly& G, int zeta) {
  const GaussianRational i = GaussianRational::i();
  const UniPoly num = UniPoly({-i, 1}) * GaussianRational(zeta), den({i, 1});
  return normalize_lex(substitute_cleared(G, num, den, num, den));
}

BiPoly circle_reflect(const BiPoly& F) {
  const UniPoly one = UniPoly::constant(1), t = UniPoly::identity();
  return substitute_cleared(conj_poly(F), one, t, one, t);
}

CurveReport analyze_unimodular(const PlaneCurve& c, const SolverConfig& config) {
  CurveReport report;
  report.bound = c.degree * c.degree;
  report.assumed_irreducible = c.assumed_irreducible;
  report.cayley = cayley_substitute(c.F);
  report.reality = conj_reality_test(inverse_cayley_substitute(c.F, 1));
  if (c.F.is_constant()) return report;
  if (auto p = chart_search(c.F, config.search, config.precision_bits)) {
    report.verdict = CurveVerdict::INFINITE_UNIMODULAR;
    report.simple_point = std::move(p);
    return report;
  }
  const BiPoly fr = circle_reflect(c.F);
  const BiPoly g = bi_gcd(c.F, fr);
  if (!g.is_constant()) {
    if (!(normalize_lex(g) == normalize_lex(c.F))) {
      if (auto p = chart_search(g, config.search, config.precision_bits)) {
        report.verdict = CurveVerdict::INFINITE_UNIMODULAR;
        report.simple_point = std::move(p);
        return report;
      }
    }
    throw Error(ErrorKind::SharedComponentUnresolved,
                "curve shares the component " + to_string(g) + " with its circle reflection");
  }
  report.points = enumerate_unimodular(c.F, fr, config);
  return report;
}

long max_singular_points(int d) {
  if (d < 1) throw Error(ErrorKind::DegreeZero, "curve degree must be positive");
  return static_cast<long>(d - 1) * (d - 2) / 2;
}

RatFun luroth_generator(const RatFun& p1, const RatFun& p2) {
  if (p1.is_constant() && p2.is_constant()) throw Error(ErrorKind::BothConstant, "no generator for constants");
  BiPoly h = bi_gcd(difference_numerator(p1), difference_numerator(p2));
  const int m = h.degree_second();
  const UniPoly& lead = h.row(m);
  std::optional<RatFun> w;
  for (int k = 0; k < m && !w; ++k) {
    RatFun coeff = rf_make(h.row(k), lead);
    if (!coeff.is_constant()) w = coeff;
  }
  if (!w) throw Error(ErrorKind::InternalDisagreement, "no nonconstant coefficient in the generator polynomial");
  UniPoly num = w->num(), den = w->den();
  if (den.is_constant()) {
    num = num - UniPoly::constant(num[0]);
  }
  const GaussianRational scale = GaussianRational(1) / num.leading();
  return rf_make(num * scale, den);
}

RatFun left_compose_factor(const RatFun& p, const RatFun& w) {
  const int dw = rf_degree(w), dp = rf_degree(p);
  if (dw == 0) throw Error(ErrorKind::NotAFactor, "constant right factor");
  if (dp % dw != 0) throw Error(ErrorKind::NotAFactor, "degree of the right factor does not divide");
  const int m = dp / dw;
  // C^h(A_W, B_W) B_P - D^h(A_W, B_W) A_P = 0, linear in the coefficients of C and D.
  std::vector<UniPoly> columns;
  std::vector<UniPoly> a_pow{UniPoly::constant(1)}, b_pow{UniPoly::constant(1)};
  for (int k = 1; k <= m; ++k) {
    a_pow.push_back(a_pow.back() * w.num());
    b_pow.push_back(b_pow.back() * w.den());
  }
  for (int k = 0; k <= m; ++k) {
    columns.push_back(a_pow[static_cast<std::size_t>(k)] * b_pow[static_cast<std::size_t>(m - k)] * p.den());
  }
  for (int k = 0; k <= m; ++k) {
    columns.push_back(-(a_pow[static_cast<std::size_t>(k)] * b_pow[static_cast<std::size_t>(m - k)] * p.num()));
  }
  int rows = 0;
  for (const auto& col : columns) rows = std::max(rows, col.degree() + 1);
  std::vector<std::vector<GaussianRational>> matrix(static_cast<std::size_t>(rows),
                                                    std::vector<GaussianRational>(columns.size()));
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (int r = 0; r <= columns[j].degree(); ++r) matrix[static_cast<std::size_t>(r)][j] = columns[j][r];
  }
  for (const auto& v : nullspace(std::move(matrix), columns.size())) {
    const UniPoly c(std::vector<GaussianRational>(v.begin(), v.begin() + m + 1));
    const UniPoly d(std::vector<GaussianRational>(v.begin() + m + 1, v.end()));
    if (d.is_zero()) continue;
    const RatFun q = rf_make(c, d);
    if (rf_compose(q, w) == p) return q;
  }
  throw Error(ErrorKind::NotAFactor, "no left factor through the given map");
}

}  // namespace unimod
