#include "unimod/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "unimod/error.hpp"

namespace unimod {

namespace {

// Plain (non-rigorous) complex floating arithmetic for the iteration itself.
struct CFloat {
  Float re;
  Float im;
  explicit CFloat(mpfr_prec_t prec) : re(prec), im(prec) {}
  CFloat(Float r, Float i) : re(std::move(r)), im(std::move(i)) {}
};

CFloat cf_add(const CFloat& a, const CFloat& b) {
  CFloat out(a.re.precision());
  mpfr_add(out.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(out.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  return out;
}

CFloat cf_sub(const CFloat& a, const CFloat& b) {
  CFloat out(a.re.precision());
  mpfr_sub(out.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_sub(out.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  return out;
}

CFloat cf_mul(const CFloat& a, const CFloat& b) {
  CFloat out(a.re.precision());
  mpfr_fmms(out.re.get(), a.re.get(), b.re.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_fmma(out.im.get(), a.re.get(), b.im.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  return out;
}

CFloat cf_div(const CFloat& a, const CFloat& b) {
  const mpfr_prec_t prec = a.re.precision();
  Float n(prec);
  mpfr_fmma(n.get(), b.re.get(), b.re.get(), b.im.get(), b.im.get(), MPFR_RNDN);
  CFloat out(prec);
  mpfr_fmma(out.re.get(), a.re.get(), b.re.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_fmms(out.im.get(), a.im.get(), b.re.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_div(out.re.get(), out.re.get(), n.get(), MPFR_RNDN);
  mpfr_div(out.im.get(), out.im.get(), n.get(), MPFR_RNDN);
  return out;
}

bool cf_is_zero(const CFloat& a) { return a.re.is_zero() && a.im.is_zero(); }

// log2 |a|, robust to values outside the double range.
double cf_log2_abs(const CFloat& a) {
  if (cf_is_zero(a)) return -1e18;
  Float r(53);
  mpfr_hypot(r.get(), a.re.get(), a.im.get(), MPFR_RNDN);
  long exp = 0;
  double mant = mpfr_get_d_2exp(&exp, r.get(), MPFR_RNDN);
  return std::log2(mant) + static_cast<double>(exp);
}

CFloat cf_from(const GaussianRational& c, mpfr_prec_t prec) {
  CFloat out(prec);
  mpfr_set_q(out.re.get(), c.re().get_mpq_t(), MPFR_RNDN);
  mpfr_set_q(out.im.get(), c.im().get_mpq_t(), MPFR_RNDN);
  return out;
}

CFloat cf_round(const CFloat& a, mpfr_prec_t prec) {
  CFloat out(prec);
  mpfr_set(out.re.get(), a.re.get(), MPFR_RNDN);
  mpfr_set(out.im.get(), a.im.get(), MPFR_RNDN);
  return out;
}

std::vector<CFloat> initial_points(const UniPoly& f, mpfr_prec_t prec) {
  const int n = f.degree();
  GaussianRational shift = -f[n - 1] / (f.leading() * GaussianRational(n));
  const double radius = cauchy_root_bound(f);
  std::vector<CFloat> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / n + 0.4;
    CFloat p(Float(radius * std::cos(angle), prec), Float(radius * std::sin(angle), prec));
    pts.push_back(cf_add(p, cf_from(shift, prec)));
  }
  return pts;
}

// Aberth-Ehrlich iteration (Gauss-Seidel updates).
void aberth(const UniPoly& f, std::vector<CFloat>& z, mpfr_prec_t prec) {
  const int n = f.degree();
  std::vector<CFloat> coeffs;
  coeffs.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) coeffs.push_back(cf_from(f[k], prec));
  const double target = -static_cast<double>(prec) + 6.0;
  const int max_iter = 80 + 4 * n + static_cast<int>(prec / 8);
  for (int iter = 0; iter < max_iter; ++iter) {
    bool converged = true;
    for (int k = 0; k < n; ++k) {
      auto& zk = z[static_cast<std::size_t>(k)];
      CFloat p = coeffs[static_cast<std::size_t>(n)];
      CFloat dp(prec);
      for (int j = n - 1; j >= 0; --j) {
        dp = cf_add(cf_mul(dp, zk), p);
        p = cf_add(cf_mul(p, zk), coeffs[static_cast<std::size_t>(j)]);
      }
      if (cf_is_zero(p)) continue;
      if (cf_is_zero(dp)) {
        mpfr_nextabove(zk.re.get());
        converged = false;
        continue;
      }
      CFloat ratio = cf_div(p, dp);
      CFloat sum(prec);
      for (int j = 0; j < n; ++j) {
        if (j == k) continue;
        CFloat diff = cf_sub(zk, z[static_cast<std::size_t>(j)]);
        if (cf_is_zero(diff)) {
          mpfr_nextabove(diff.re.get());
        }
        CFloat one(Float(1.0, prec), Float(prec));
        sum = cf_add(sum, cf_div(one, diff));
      }
      CFloat one(Float(1.0, prec), Float(prec));
      CFloat denom = cf_sub(one, cf_mul(ratio, sum));
      CFloat step = cf_is_zero(denom) ? ratio : cf_div(ratio, denom);
      const double scale = std::max(0.0, cf_log2_abs(zk));
      if (cf_log2_abs(step) > target + scale) converged = false;
      zk = cf_sub(zk, step);
    }
    if (converged) break;
  }
}

struct Disc {
  ComplexBall ball;
  int multiplicity;
};

// Gerschgorin discs of the Weierstrass matrix diag(z) - W 1^T; nullopt when
// the approximations coincide.
std::optional<std::vector<Disc>> weierstrass_discs(const UniPoly& f, const std::vector<CFloat>& z,
                                                   mpfr_prec_t prec, int multiplicity) {
  const int n = f.degree();
  const ComplexBall lead = to_ball(f.leading(), prec);
  std::vector<ComplexBall> points;
  points.reserve(z.size());
  for (const auto& zk : z) points.emplace_back(zk.re, zk.im, Float(kRadiusPrecision));
  std::vector<Disc> out;
  out.reserve(z.size());
  for (int k = 0; k < n; ++k) {
    const auto& zk = points[static_cast<std::size_t>(k)];
    ComplexBall denom = lead;
    for (int j = 0; j < n; ++j) {
      if (j != k) denom = denom * (zk - points[static_cast<std::size_t>(j)]);
    }
    if (denom.contains_zero()) return std::nullopt;
    ComplexBall w = f.eval(zk) / denom;
    ComplexBall center = zk - w;
    Float spread = w.mag();
    mpfr_mul_si(spread.get(), spread.get(), n - 1, MPFR_RNDU);
    out.push_back({center.with_radius_added(spread), multiplicity});
  }
  return out;
}

bool pairwise_disjoint(const std::vector<Disc>& discs) {
  for (std::size_t i = 0; i < discs.size(); ++i) {
    for (std::size_t j = i + 1; j < discs.size(); ++j) {
      if (discs[i].ball.overlaps(discs[j].ball)) return false;
    }
  }
  return true;
}

}  // namespace

bool ball_less(const ComplexBall& a, const ComplexBall& b) {
  int c = mpfr_cmp(a.re().get(), b.re().get());
  if (c != 0) return c < 0;
  c = mpfr_cmp(a.im().get(), b.im().get());
  if (c != 0) return c < 0;
  return mpfr_cmp(a.radius().get(), b.radius().get()) < 0;
}

std::vector<RootBall> certified_roots(const UniPoly& p, mpfr_prec_t precision_bits, mpfr_prec_t max_precision_bits) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "roots of the zero polynomial");
  if (p.degree() < 1) throw Error(ErrorKind::DegreeZero, "roots of a constant polynomial");
  const auto factors = squarefree_decomposition(p);

  mpfr_prec_t prec = std::max<mpfr_prec_t>(precision_bits, 16);
  std::vector<std::vector<CFloat>> approx;
  approx.reserve(factors.size());
  for (const auto& f : factors) approx.push_back(initial_points(f.factor, prec));

  while (true) {
    std::vector<Disc> discs;
    bool ok = true;
    for (std::size_t i = 0; i < factors.size() && ok; ++i) {
      auto& z = approx[i];
      for (auto& zk : z) zk = cf_round(zk, prec);
      aberth(factors[i].factor, z, prec);
      auto found = weierstrass_discs(factors[i].factor, z, prec, factors[i].multiplicity);
      if (!found) {
        ok = false;
        break;
      }
      discs.insert(discs.end(), found->begin(), found->end());
    }
    if (ok && pairwise_disjoint(discs)) {
      std::vector<RootBall> out;
      out.reserve(discs.size());
      for (auto& d : discs) out.push_back({std::move(d.ball), d.multiplicity, true});
      std::sort(out.begin(), out.end(),
                [](const RootBall& a, const RootBall& b) { return ball_less(a.location, b.location); });
      return out;
    }
    if (prec >= max_precision_bits) break;
    prec = std::min<mpfr_prec_t>(prec * 2, max_precision_bits);
    // Approximations that collapsed at the old precision cannot be pulled
    // apart by Aberth steps, so start over.
    for (std::size_t i = 0; i < factors.size(); ++i) approx[i] = initial_points(factors[i].factor, prec);
  }
  throw Error(ErrorKind::CertificationFailed,
              "root isolation did not separate the roots at " + std::to_string(max_precision_bits) + " bits");
}

std::optional<Box2> krawczyk2(const BiPoly& f1, const BiPoly& f2, const Box2& x) {
  const mpfr_prec_t prec = std::max(x.u.precision(), x.v.precision());
  const Float zero_rad(kRadiusPrecision);
  const ComplexBall mu(x.u.re(), x.u.im(), zero_rad);
  const ComplexBall mv(x.v.re(), x.v.im(), zero_rad);
  const BiPoly f1u = derivative(f1, Var::first), f1v = derivative(f1, Var::second);
  const BiPoly f2u = derivative(f2, Var::first), f2v = derivative(f2, Var::second);

  // Approximate inverse of the midpoint Jacobian.
  ComplexBall a = f1u.eval(mu, mv), b = f1v.eval(mu, mv);
  ComplexBall c = f2u.eval(mu, mv), d = f2v.eval(mu, mv);
  ComplexBall det = a * d - b * c;
  if (det.contains_zero()) return std::nullopt;
  auto center = [](const ComplexBall& z) { return ComplexBall(z.re(), z.im(), Float(kRadiusPrecision)); };
  ComplexBall inv_det = center(inverse(center(det)));
  const ComplexBall y00 = center(d * inv_det), y01 = center(-b * inv_det);
  const ComplexBall y10 = center(-c * inv_det), y11 = center(a * inv_det);

  const ComplexBall r1 = f1.eval(mu, mv), r2 = f2.eval(mu, mv);
  const ComplexBall j00 = f1u.eval(x.u, x.v), j01 = f1v.eval(x.u, x.v);
  const ComplexBall j10 = f2u.eval(x.u, x.v), j11 = f2v.eval(x.u, x.v);
  const ComplexBall du{Float(prec), Float(prec), x.u.radius()};
  const ComplexBall dv{Float(prec), Float(prec), x.v.radius()};
  const ComplexBall one(Float(1.0, prec), Float(prec), zero_rad);

  ComplexBall ku = mu - (y00 * r1 + y01 * r2) + (one - (y00 * j00 + y01 * j10)) * du - (y00 * j01 + y01 * j11) * dv;
  ComplexBall kv = mv - (y10 * r1 + y11 * r2) - (y10 * j00 + y11 * j10) * du + (one - (y10 * j01 + y11 * j11)) * dv;

  auto shrunk = [](const ComplexBall& z) {
    Float r = z.radius();
    mpfr_mul_d(r.get(), r.get(), 0.999, MPFR_RNDD);
    return ComplexBall(z.re(), z.im(), r);
  };
  if (shrunk(x.u).contains(ku) && shrunk(x.v).contains(kv)) return Box2{std::move(ku), std::move(kv)};
  return std::nullopt;
}

std::optional<BigRational> rational_reconstruct(const Float& value, const BigRational& tolerance,
                                                const mpz_class& max_den) {
  const BigRational target = value.to_rational();
  BigRational x = target;
  mpz_class h1 = 1, h2 = 0, k1 = 0, k2 = 1;
  for (int step = 0; step < 400; ++step) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    mpz_class h = a * h1 + h2;
    mpz_class k = a * k1 + k2;
    if (k > max_den) return std::nullopt;
    BigRational candidate(h, k);
    candidate.canonicalize();
    if (abs(candidate - target) <= tolerance) return candidate;
    BigRational frac = x - BigRational(a);
    if (sgn(frac) == 0) return candidate;
    x = 1 / frac;
    h2 = h1;
    h1 = h;
    k2 = k1;
    k1 = k;
  }
  return std::nullopt;
}

std::optional<GaussianRational> gaussian_reconstruct(const ComplexBall& ball, const BigRational& tolerance,
                                                     const mpz_class& max_den) {
  auto re = rational_reconstruct(ball.re(), tolerance, max_den);
  if (!re) return std::nullopt;
  auto im = rational_reconstruct(ball.im(), tolerance, max_den);
  if (!im) return std::nullopt;
  return GaussianRational(*re, *im);
}

}  // namespace unimod
