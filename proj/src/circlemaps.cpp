#include "unimod/circlemaps.hpp"

#include <algorithm>
#include <tuple>

#include "unimod/error.hpp"

namespace unimod {

namespace {

// p*(z) = z^n conj(p(1/conj z)) for n = deg p.
UniPoly reciprocal(const UniPoly& p) { return reverse(conj_poly(p), p.degree()); }

UniPoly shift_down(const UniPoly& p) {
  std::vector<GaussianRational> c(p.coefficients().begin() + 1, p.coefficients().end());
  return UniPoly(std::move(c));
}

// Certified roots with every ball strictly inside or strictly outside the circle.
std::vector<RootBall> roots_off_circle(const UniPoly& p, mpfr_prec_t prec, mpfr_prec_t max_prec) {
  while (true) {
    auto roots = certified_roots(p, prec, std::max(prec, max_prec));
    bool separated = true;
    for (const auto& r : roots) {
      Float hi = r.location.mag(), lo = r.location.mig();
      if (!(mpfr_cmp_ui(hi.get(), 1) < 0 || mpfr_cmp_ui(lo.get(), 1) > 0)) separated = false;
    }
    if (separated) return roots;
    if (prec >= max_prec) break;
    prec = std::min(prec * 2, max_prec);
  }
  throw Error(ErrorKind::CertificationFailed, "a zero could not be separated from the unit circle");
}

bool strictly_inside(const ComplexBall& b) { return mpfr_cmp_ui(b.mag().get(), 1) < 0; }

}  // namespace

RatFun circle_reflection(const RatFun& q) {
  const int d = rf_degree(q);
  return rf_make(reverse(conj_poly(q.num()), d), reverse(conj_poly(q.den()), d));
}

bool is_circle_preserving(const RatFun& q) {
  if (q.is_constant()) return gr_norm(q.constant_value()) == 1;
  const int d = rf_degree(q);
  const bool identity =
      q.num() * reverse(conj_poly(q.num()), d) == q.den() * reverse(conj_poly(q.den()), d);
  const bool cayley_real = rf_is_real_up_to_reduction(cayley_conjugate(q));
  if (identity != cayley_real)
    throw Error(ErrorKind::InternalDisagreement, "circle-preservation criteria disagree for " + to_string(q));
  return identity;
}

std::optional<int> schur_cohn_inside_count(const UniPoly& p) {
  if (p.is_zero()) return std::nullopt;
  UniPoly cur = p;
  int count = 0;
  while (cur.degree() > 0) {
    const GaussianRational an = cur.leading(), a0 = cur[0];
    const BigRational nn = gr_norm(an), n0 = gr_norm(a0);
    if (nn > n0) {
      // Same zeros inside as conj(a_n) p - a_0 p*, which vanishes at 0.
      cur = shift_down(gr_conj(an) * cur - a0 * reciprocal(cur));
      ++count;
    } else if (nn < n0) {
      cur = gr_conj(a0) * cur - an * reciprocal(cur);
    } else {
      return std::nullopt;
    }
    if (cur.is_zero()) return std::nullopt;
  }
  return count;
}

std::optional<int> count_inside_disc(const UniPoly& p) {
  if (auto exact = schur_cohn_inside_count(p)) return exact;
  if (p.is_zero()) return std::nullopt;
  if (p.degree() == 0) return 0;
  int count = 0;
  for (const auto& r : certified_roots(p)) {
    if (mpfr_cmp_ui(r.location.mag().get(), 1) < 0) {
      count += r.multiplicity;
    } else if (mpfr_cmp_ui(r.location.mig().get(), 1) <= 0) {
      return std::nullopt;
    }
  }
  return count;
}

bool schur_cohn_all_inside(const UniPoly& p) {
  if (p.is_zero()) return false;
  UniPoly cur = p;
  while (cur.degree() > 0) {
    const GaussianRational an = cur.leading(), a0 = cur[0];
    if (gr_norm(an) <= gr_norm(a0)) return false;
    cur = shift_down(gr_conj(an) * cur - a0 * reciprocal(cur));
  }
  return true;
}

bool is_finite_blaschke(const RatFun& q) {
  if (!is_circle_preserving(q)) return false;
  if (q.is_constant()) return true;
  if (q.num().degree() != rf_degree(q)) return false;
  const bool inside = schur_cohn_all_inside(q.num());
  bool all_balls_inside = true, some_ball_outside = false;
  for (const auto& r : certified_roots(q.num())) {
    all_balls_inside = all_balls_inside && strictly_inside(r.location);
    some_ball_outside = some_ball_outside || mpfr_cmp_ui(r.location.mig().get(), 1) >= 0;
  }
  if ((inside && some_ball_outside) || (!inside && all_balls_inside))
    throw Error(ErrorKind::InternalDisagreement, "Schur-Cohn and root isolation disagree for " + to_string(q));
  return inside;
}

BlaschkeForm blaschke_quotient_split(const RatFun& q, mpfr_prec_t precision_bits, mpfr_prec_t max_precision_bits) {
  if (!is_circle_preserving(q)) throw Error(ErrorKind::NotCirclePreserving, to_string(q) + " does not preserve the unit circle");
  BlaschkeForm form;
  auto collect = [&](const UniPoly& p, bool numerator_side) {
    if (p.degree() < 1) return;
    for (auto& r : roots_off_circle(p, precision_bits, max_precision_bits)) {
      if (strictly_inside(r.location)) form.factors.push_back({std::move(r.location), r.multiplicity, numerator_side});
    }
  };
  collect(q.num(), true);
  collect(q.den(), false);
  std::stable_sort(form.factors.begin(), form.factors.end(),
                   [](const BlaschkeFactor& a, const BlaschkeFactor& b) { return a.inside && !b.inside; });

  const mpfr_prec_t prec = precision_bits;
  form.unimodular_constant = to_ball(GaussianRational(1), prec);
  const ComplexBall one = to_ball(GaussianRational(1), prec);
  const ComplexBall product_at_one = blaschke_eval(form, one);
  form.unimodular_constant = to_ball(rf_eval(q, GaussianRational(1)), prec) / product_at_one;

  for (const auto& s : unimodular_samples(8)) {
    ComplexBall value = blaschke_eval(form, to_ball(s, prec));
    if (!value.contains(rf_eval(q, s)))
      throw Error(ErrorKind::InternalDisagreement, "Blaschke reconstruction does not enclose " + to_string(q));
  }
  return form;
}

ComplexBall blaschke_eval(const BlaschkeForm& form, const ComplexBall& s) {
  const ComplexBall one = to_ball(GaussianRational(1), s.precision());
  ComplexBall num = form.unimodular_constant, den = one;
  for (const auto& f : form.factors) {
    ComplexBall factor = (s - f.zero) / (one - f.zero.conj() * s);
    for (int m = 0; m < f.multiplicity; ++m) {
      if (f.inside) {
        num = num * factor;
      } else {
        den = den * factor;
      }
    }
  }
  return num / den;
}

RatFun make_blaschke(const GaussianRational& zeta, const std::vector<std::pair<GaussianRational, int>>& zeros) {
  UniPoly num = UniPoly::constant(zeta), den = UniPoly::constant(1);
  for (const auto& [a, m] : zeros) {
    for (int k = 0; k < m; ++k) {
      num *= UniPoly({-a, 1});
      den *= UniPoly({1, -gr_conj(a)});
    }
  }
  return rf_make(num, den);
}

std::vector<GaussianRational> unimodular_samples(std::size_t count) {
  std::vector<GaussianRational> out = {GaussianRational(1), GaussianRational::i(), GaussianRational(-1),
                                       -GaussianRational::i()};
  for (auto [a, b, c] : {std::tuple<long, long, long>{3, 4, 5}, {4, 3, 5}, {5, 12, 13}, {12, 5, 13}}) {
    for (auto [sa, sb] : {std::pair<long, long>{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}) {
      out.emplace_back(BigRational(sa * a, c), BigRational(sb * b, c));
    }
  }
  if (count < out.size()) out.resize(count);
  return out;
}

}  // namespace unimod
