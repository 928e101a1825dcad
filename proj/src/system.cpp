#include "unimod/system.hpp"

#include <algorithm>

#include "unimod/error.hpp"

namespace unimod {

namespace {

// f as a polynomial in the `keep` variable; f must not involve the other one.
UniPoly univariate_in(const BiPoly& f, Var keep) {
  if (keep == Var::first) return f.row(0);
  std::vector<GaussianRational> c;
  for (int b = 0; b <= f.degree_second(); ++b) c.push_back(f.coeff(0, b));
  return UniPoly(std::move(c));
}

}  // namespace

std::vector<RootBall> projection_candidates(const BiPoly& f1, const BiPoly& f2, Var keep, mpfr_prec_t precision_bits,
                                            mpfr_prec_t max_precision_bits) {
  if (f1.is_zero() || f2.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "system with a zero equation");
  if (f1.is_constant() || f2.is_constant()) return {};
  const Var other = keep == Var::first ? Var::second : Var::first;
  const int d1 = f1.degree(other), d2 = f2.degree(other);
  UniPoly r;
  if (d1 >= 1 && d2 >= 1) {
    r = bi_resultant(f1, f2, other);
    if (r.is_zero()) throw Error(ErrorKind::InternalDisagreement, "system equations share a factor");
  } else if (d1 == 0 && d2 == 0) {
    r = uni_gcd(univariate_in(f1, keep), univariate_in(f2, keep));
  } else {
    r = univariate_in(d1 == 0 ? f1 : f2, keep);
  }
  if (r.is_constant()) return {};
  return certified_roots(r, precision_bits, max_precision_bits);
}

std::optional<CertifiedBox> certify_box(const BiPoly& f1, const BiPoly& f2, const Box2& box) {
  const double base = std::max(box.u.radius_double(), box.v.radius_double());
  for (const double r : {4.0 * base, 1e-25, 1e-20, 1e-15, 1e-10}) {
    if (r < base || r == 0.0) continue;
    Float rad(r, kRadiusPrecision);
    const ComplexBall u(box.u.re(), box.u.im(), rad), v(box.v.re(), box.v.im(), rad);
    const Box2 outer{u, v};
    if (auto k = krawczyk2(f1, f2, outer)) return CertifiedBox{outer, *k};
  }
  return std::nullopt;
}

std::optional<GaussianRational> guess_exact(const ComplexBall& ball) {
  const mpfr_prec_t prec = ball.precision();
  BigRational tol(1);
  mpq_div_2exp(tol.get_mpq_t(), tol.get_mpq_t(), static_cast<mp_bitcnt_t>(prec / 2));
  BigRational rad = ball.radius().to_rational() * 4;
  if (rad > tol) tol = rad;
  mpz_class max_den = 1;
  max_den <<= static_cast<mp_bitcnt_t>(prec / 4);
  return gaussian_reconstruct(ball, tol, max_den);
}

}  // namespace unimod
