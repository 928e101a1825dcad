#include "unimod/realcurve.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace unimod {

namespace {

constexpr mpfr_prec_t kIntervalPrecision = 160;

int sign_of(const GaussianRational& v) { return sgn(v.re()); }

// Enclosure of p over the real interval [a, b] excludes zero.
bool nonzero_on(const UniPoly& p, const BigRational& a, const BigRational& b) {
  if (p.is_zero()) return false;
  if (p.is_constant()) return true;
  ComplexBall center = to_ball(GaussianRational((a + b) / 2), kIntervalPrecision);
  Float half(kRadiusPrecision);
  BigRational w = (b - a) / 2;
  mpfr_set_q(half.get(), w.get_mpq_t(), MPFR_RNDU);
  return !p.eval(center.with_radius_added(half)).contains_zero();
}

// A simple zero of h in (a, b), where h changes sign strictly, as a narrow
// interval on which h' does not vanish.
std::optional<std::pair<BigRational, BigRational>> refine(const UniPoly& h, const UniPoly& dh, BigRational a,
                                                          BigRational b, int sign_a, int refine_bits) {
  BigRational tiny(1);
  mpq_div_2exp(tiny.get_mpq_t(), tiny.get_mpq_t(), static_cast<mp_bitcnt_t>(refine_bits));
  bool certified = false;
  while (true) {
    if (!certified) certified = nonzero_on(dh, a, b);
    if (certified && b - a < tiny) return std::make_pair(a, b);
    if (b - a < tiny) return std::nullopt;
    BigRational m = (a + b) / 2;
    const int sm = sign_of(h.eval(GaussianRational(m)));
    if (sm == 0) {
      if (dh.eval(GaussianRational(m)).is_zero()) return std::nullopt;
      return std::make_pair(m, m);
    }
    if (sm == sign_a) {
      a = m;
    } else {
      b = m;
    }
  }
}

// Searches one line; `h` is g restricted to it and `cross` the partial
// derivative across it (used when the line is itself a component).
std::optional<std::pair<BigRational, BigRational>> search_line(const UniPoly& h, const BiPoly& g, bool horizontal,
                                                               const BigRational& fixed,
                                                               const std::vector<BigRational>& ts,
                                                               int refine_bits) {
  if (h.is_zero()) {
    const BiPoly cross = derivative(g, horizontal ? Var::second : Var::first);
    for (const auto& t : ts) {
      GaussianRational v = horizontal ? cross.eval(GaussianRational(t), GaussianRational(fixed))
                                      : cross.eval(GaussianRational(fixed), GaussianRational(t));
      if (!v.is_zero()) return std::make_pair(t, t);
    }
    return std::nullopt;
  }
  if (h.is_constant()) return std::nullopt;
  const UniPoly dh = derivative(h);
  std::vector<int> signs;
  signs.reserve(ts.size());
  for (const auto& t : ts) signs.push_back(sign_of(h.eval(GaussianRational(t))));
  for (std::size_t k = 0; k < ts.size(); ++k) {
    if (signs[k] == 0 && !dh.eval(GaussianRational(ts[k])).is_zero()) return std::make_pair(ts[k], ts[k]);
    if (k + 1 < ts.size() && signs[k] != 0 && signs[k + 1] != 0 && signs[k] != signs[k + 1]) {
      if (auto hit = refine(h, dh, ts[k], ts[k + 1], signs[k], refine_bits)) return hit;
    }
  }
  return std::nullopt;
}

}  // namespace

BiPoly realify(const BiPoly& g) {
  const VarPair xy{'x', 'y'};
  const GaussianRational i = GaussianRational::i();
  const BiPoly x = BiPoly::monomial(1, 1, 0, xy), y = BiPoly::monomial(1, 0, 1, xy);
  const BiPoly zp = x + y * i, wp = x - y * i;
  std::vector<BiPoly> z_pow{BiPoly::constant(1, xy)}, w_pow{BiPoly::constant(1, xy)};
  for (int k = 1; k <= g.degree_first(); ++k) z_pow.push_back(z_pow.back() * zp);
  for (int k = 1; k <= g.degree_second(); ++k) w_pow.push_back(w_pow.back() * wp);
  BiPoly out(xy);
  for (int b = 0; b <= g.degree_second(); ++b) {
    const UniPoly& row = g.row(b);
    for (int a = 0; a <= row.degree(); ++a) {
      if (row[a].is_zero()) continue;
      out += z_pow[static_cast<std::size_t>(a)] * w_pow[static_cast<std::size_t>(b)] * row[a];
    }
  }
  return out;
}

bool has_real_coefficients(const BiPoly& p) {
  return std::all_of(p.rows().begin(), p.rows().end(), [](const UniPoly& r) { return r.is_real(); });
}

BiPoly squarefree_part(const BiPoly& p) {
  if (p.is_constant()) return p;
  const BiPoly px = derivative(p, Var::first), py = derivative(p, Var::second);
  BiPoly d = px.is_zero() ? py : (py.is_zero() ? px : bi_gcd(px, py));
  BiPoly out = exact_div(p, bi_gcd(p, d));
  out.set_vars(p.vars());
  return out;
}

BigRational search_radius(const BiPoly& g) {
  double bound = 0.0;
  const UniPoly gx = g.eval_second(GaussianRational()), gy = g.eval_first(GaussianRational());
  if (gx.degree() >= 1) bound = std::max(bound, cauchy_root_bound(gx));
  if (gy.degree() >= 1) bound = std::max(bound, cauchy_root_bound(gy));
  const double r = std::clamp(std::ceil(1.0 + bound), 2.0, 64.0);
  return BigRational(static_cast<long>(r));
}

std::vector<SimpleRealPoint> find_simple_real_points(const BiPoly& g, const SearchConfig& config,
                                                     std::size_t max_points) {
  std::vector<SimpleRealPoint> out;
  if (g.is_constant() || max_points == 0) return out;
  const BiPoly sq = squarefree_part(g);
  const BigRational r = search_radius(sq);
  const int n = std::max(config.grid, 2);
  std::vector<BigRational> ts;
  ts.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    BigRational t = -r + 2 * r * BigRational(k, n - 1);
    t.canonicalize();
    ts.push_back(t);
  }
  for (const bool horizontal : {true, false}) {
    for (const auto& fixed : ts) {
      const UniPoly h = horizontal ? sq.eval_second(GaussianRational(fixed)) : sq.eval_first(GaussianRational(fixed));
      auto hit = search_line(h, sq, horizontal, fixed, ts, config.refine_bits);
      if (!hit) continue;
      if (horizontal) {
        out.push_back({hit->first, hit->second, fixed, fixed});
      } else {
        out.push_back({fixed, fixed, hit->first, hit->second});
      }
      if (out.size() >= max_points) return out;
    }
  }
  return out;
}

ComplexBall to_ball(const SimpleRealPoint& p, mpfr_prec_t precision_bits) {
  ComplexBall c = to_ball(GaussianRational(p.x_mid(), p.y_mid()), precision_bits);
  BigRational half = (p.x_hi - p.x_lo) / 2 + (p.y_hi - p.y_lo) / 2;
  Float extra(kRadiusPrecision);
  mpfr_set_q(extra.get(), half.get_mpq_t(), MPFR_RNDU);
  return c.with_radius_added(extra);
}

}  // namespace unimod
