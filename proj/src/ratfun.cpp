#include "unimod/ratfun.hpp"

#include <algorithm>

#include "unimod/error.hpp"

namespace unimod {

namespace {

// sum_k a_k c^k e^(d-k)
UniPoly homogeneous_substitute(const UniPoly& a, int d, const UniPoly& c, const UniPoly& e) {
  std::vector<UniPoly> c_pow{UniPoly::constant(1)}, e_pow{UniPoly::constant(1)};
  for (int k = 1; k <= d; ++k) {
    c_pow.push_back(c_pow.back() * c);
    e_pow.push_back(e_pow.back() * e);
  }
  UniPoly out;
  for (int k = 0; k <= a.degree(); ++k) {
    if (a[k].is_zero()) continue;
    out += a[k] * (c_pow[static_cast<std::size_t>(k)] * e_pow[static_cast<std::size_t>(d - k)]);
  }
  return out;
}

}  // namespace

RatFun::RatFun(const UniPoly& p) : num_(p), den_(UniPoly::constant(1)) {}

RatFun::RatFun(const GaussianRational& c) : num_(UniPoly::constant(c)), den_(UniPoly::constant(1)) {}

GaussianRational RatFun::constant_value() const { return num_.is_zero() ? GaussianRational() : num_[0] / den_[0]; }

RatFun rf_make(const UniPoly& num, const UniPoly& den) {
  if (den.is_zero()) throw Error(ErrorKind::ZeroDenominator, "rational function with zero denominator");
  RatFun out;
  if (num.is_zero()) return out;
  UniPoly g = uni_gcd(num, den);
  UniPoly n = exact_div(num, g), d = exact_div(den, g);
  const GaussianRational scale = GaussianRational(1) / d.leading();
  out.num_ = n * scale;
  out.den_ = d * scale;
  return out;
}

RatFun rf_make_coprime(const UniPoly& num, const UniPoly& den) {
  if (den.is_zero()) throw Error(ErrorKind::ZeroDenominator, "rational function with zero denominator");
  RatFun out;
  if (num.is_zero()) return out;
  const GaussianRational scale = GaussianRational(1) / den.leading();
  out.num_ = num * scale;
  out.den_ = den * scale;
  return out;
}

int rf_degree(const RatFun& p) { return std::max(std::max(p.num().degree(), p.den().degree()), 0); }

RatFun operator+(const RatFun& a, const RatFun& b) {
  return rf_make(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
}

RatFun operator-(const RatFun& a, const RatFun& b) {
  return rf_make(a.num() * b.den() - b.num() * a.den(), a.den() * b.den());
}

RatFun operator*(const RatFun& a, const RatFun& b) { return rf_make(a.num() * b.num(), a.den() * b.den()); }

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by the zero rational function");
  return rf_make(a.num() * b.den(), a.den() * b.num());
}

RatFun rf_compose(const RatFun& p, const RatFun& q) {
  const int d = rf_degree(p);
  // Coprime forms of equal degree evaluated at a coprime pair stay coprime,
  // so only the scaling is left to normalize.
  return rf_make_coprime(homogeneous_substitute(p.num(), d, q.num(), q.den()),
                         homogeneous_substitute(p.den(), d, q.num(), q.den()));
}

RatFun cayley_map() {
  const GaussianRational i = GaussianRational::i();
  return rf_make(UniPoly({i, i}), UniPoly({1, -1}));
}

RatFun inverse_cayley_map() {
  const GaussianRational i = GaussianRational::i();
  return rf_make(UniPoly({-i, 1}), UniPoly({i, 1}));
}

RatFun cayley_conjugate(const RatFun& q) {
  return rf_compose(cayley_map(), rf_compose(q, inverse_cayley_map()));
}

RatFun cayley_unconjugate(const RatFun& r) {
  return rf_compose(inverse_cayley_map(), rf_compose(r, cayley_map()));
}

bool rf_is_real_up_to_reduction(const RatFun& r) { return r.num().is_real() && r.den().is_real(); }

RatFun conj_ratfun(const RatFun& p) { return rf_make(conj_poly(p.num()), conj_poly(p.den())); }

GaussianRational rf_eval(const RatFun& p, const GaussianRational& z) {
  GaussianRational d = p.den().eval(z);
  if (d.is_zero()) throw Error(ErrorKind::PoleInBall, "evaluation at a pole");
  return p.num().eval(z) / d;
}

ComplexBall rf_eval_ball(const RatFun& p, const ComplexBall& z) {
  ComplexBall d = p.den().eval(z);
  if (d.contains_zero()) throw Error(ErrorKind::PoleInBall, "denominator enclosure contains zero");
  ComplexBall n = p.num().eval(z);
  if (p.den().is_constant() && p.den()[0].is_one()) return n;
  return n / d;
}

std::string to_string(const RatFun& p, char var) {
  if (p.is_polynomial()) return to_string(p.num(), var);
  return "(" + to_string(p.num(), var) + ")/(" + to_string(p.den(), var) + ")";
}

}  // namespace unimod
