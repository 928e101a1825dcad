#include "unimod/uni_poly.hpp"

#include <algorithm>
#include <cmath>

#include "unimod/error.hpp"

namespace unimod {

namespace {

const GaussianRational& zero_coefficient() {
  static const GaussianRational zero;
  return zero;
}

// Gaussian integers as (re, im) pairs, used for content removal only.
struct GaussInt {
  mpz_class re;
  mpz_class im;
  bool is_zero() const { return re == 0 && im == 0; }
};

mpz_class round_div(const mpz_class& x, const mpz_class& d) {
  // nearest integer to x/d, d > 0
  mpz_class num = 2 * x + d;
  mpz_class den = 2 * d;
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

GaussInt gauss_rem(const GaussInt& a, const GaussInt& b) {
  mpz_class n = b.re * b.re + b.im * b.im;
  mpz_class qr = round_div(a.re * b.re + a.im * b.im, n);
  mpz_class qi = round_div(a.im * b.re - a.re * b.im, n);
  return {a.re - (qr * b.re - qi * b.im), a.im - (qr * b.im + qi * b.re)};
}

GaussInt gauss_gcd(GaussInt a, GaussInt b) {
  while (!b.is_zero()) {
    GaussInt r = gauss_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

UniPoly::UniPoly(std::vector<GaussianRational> coefficients) : coefficients_(std::move(coefficients)) { trim(); }

UniPoly::UniPoly(std::initializer_list<GaussianRational> coefficients) : coefficients_(coefficients) { trim(); }

UniPoly UniPoly::constant(const GaussianRational& c) { return UniPoly(std::vector<GaussianRational>{c}); }

UniPoly UniPoly::monomial(const GaussianRational& c, int degree) {
  std::vector<GaussianRational> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs.back() = c;
  return UniPoly(std::move(coeffs));
}

UniPoly UniPoly::identity() { return monomial(GaussianRational(1), 1); }

void UniPoly::trim() {
  while (!coefficients_.empty() && coefficients_.back().is_zero()) coefficients_.pop_back();
}

bool UniPoly::is_real() const {
  return std::all_of(coefficients_.begin(), coefficients_.end(), [](const auto& c) { return c.is_real(); });
}

const GaussianRational& UniPoly::operator[](int k) const {
  if (k < 0 || k > degree()) return zero_coefficient();
  return coefficients_[static_cast<std::size_t>(k)];
}

GaussianRational UniPoly::eval(const GaussianRational& z) const {
  GaussianRational acc;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc *= z;
    acc += *it;
  }
  return acc;
}

ComplexBall UniPoly::eval(const ComplexBall& z) const {
  const mpfr_prec_t prec = z.precision();
  ComplexBall acc(prec);
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = acc * z + to_ball(*it, prec);
  }
  return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coefficients_.size() > coefficients_.size()) coefficients_.resize(o.coefficients_.size());
  for (std::size_t k = 0; k < o.coefficients_.size(); ++k) coefficients_[k] += o.coefficients_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coefficients_.size() > coefficients_.size()) coefficients_.resize(o.coefficients_.size());
  for (std::size_t k = 0; k < o.coefficients_.size(); ++k) coefficients_[k] -= o.coefficients_[k];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussianRational> out(a.coefficients_.size() + b.coefficients_.size() - 1);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    if (a.coefficients_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) out[i + j] += a.coefficients_[i] * b.coefficients_[j];
  }
  return UniPoly(std::move(out));
}

UniPoly& UniPoly::operator*=(const UniPoly& o) { return *this = *this * o; }

UniPoly& UniPoly::operator*=(const GaussianRational& c) {
  for (auto& coeff : coefficients_) coeff *= c;
  trim();
  return *this;
}

UniPoly UniPoly::operator-() const {
  UniPoly out = *this;
  for (auto& c : out.coefficients_) c = -c;
  return out;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly(), a};
  std::vector<GaussianRational> rem = a.coefficients();
  std::vector<GaussianRational> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const GaussianRational inv_lead = GaussianRational(1) / b.leading();
  const int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    const GaussianRational& top = rem[static_cast<std::size_t>(k)];
    if (top.is_zero()) continue;
    GaussianRational q = top * inv_lead;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= q * b[j];
    quot[static_cast<std::size_t>(k - db)] = std::move(q);
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(ErrorKind::NotAFactor, "inexact polynomial division");
  return q;
}

bool divides(const UniPoly& d, const UniPoly& p) {
  if (d.is_zero()) return p.is_zero();
  return divmod(p, d).second.is_zero();
}

UniPoly derivative(const UniPoly& p) {
  if (p.degree() < 1) return {};
  std::vector<GaussianRational> out(static_cast<std::size_t>(p.degree()));
  for (int k = 1; k <= p.degree(); ++k) out[static_cast<std::size_t>(k - 1)] = p[k] * GaussianRational(k);
  return UniPoly(std::move(out));
}

UniPoly monic(const UniPoly& p) {
  if (p.is_zero() || p.is_monic()) return p;
  return p * (GaussianRational(1) / p.leading());
}

UniPoly pow(const UniPoly& p, unsigned e) {
  UniPoly result = UniPoly::constant(1);
  UniPoly base = p;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

UniPoly reverse(const UniPoly& p, int d) {
  std::vector<GaussianRational> out(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= p.degree(); ++k) out[static_cast<std::size_t>(d - k)] = p[k];
  return UniPoly(std::move(out));
}

UniPoly scale_argument(const UniPoly& p, const GaussianRational& c) {
  std::vector<GaussianRational> out = p.coefficients();
  GaussianRational factor(1);
  for (auto& coeff : out) {
    coeff *= factor;
    factor *= c;
  }
  return UniPoly(std::move(out));
}

UniPoly conj_poly(const UniPoly& p) {
  std::vector<GaussianRational> out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) out.push_back(gr_conj(c));
  return UniPoly(std::move(out));
}

UniPoly compose_uni(const UniPoly& p, const UniPoly& q) {
  UniPoly acc;
  for (int k = p.degree(); k >= 0; --k) acc = acc * q + UniPoly::constant(p[k]);
  return acc;
}

UniPoly primitive_part(const UniPoly& p) {
  if (p.is_zero()) return p;
  mpz_class denominators = 1;
  for (const auto& c : p.coefficients()) {
    mpz_lcm(denominators.get_mpz_t(), denominators.get_mpz_t(), c.re().get_den_mpz_t());
    mpz_lcm(denominators.get_mpz_t(), denominators.get_mpz_t(), c.im().get_den_mpz_t());
  }
  std::vector<GaussInt> ints;
  ints.reserve(p.coefficients().size());
  GaussInt content{0, 0};
  for (const auto& c : p.coefficients()) {
    BigRational re = c.re() * denominators;
    BigRational im = c.im() * denominators;
    ints.push_back({re.get_num(), im.get_num()});
    if (!ints.back().is_zero()) content = gauss_gcd(content, ints.back());
  }
  GaussianRational g(BigRational(content.re), BigRational(content.im));
  // Pick the associate that makes the leading coefficient lie in the right
  // half-plane sector re > 0, im >= 0.
  GaussianRational lead = GaussianRational(BigRational(ints.back().re), BigRational(ints.back().im)) / g;
  GaussianRational unit(1);
  for (int turn = 0; turn < 4; ++turn) {
    GaussianRational rotated = lead * unit;
    if (sgn(rotated.re()) > 0 && sgn(rotated.im()) >= 0) break;
    unit *= GaussianRational::i();
  }
  GaussianRational scale = GaussianRational(BigRational(denominators)) * unit / g;
  return p * scale;
}

UniPoly uni_gcd(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() && q.is_zero()) throw Error(ErrorKind::BothZero, "gcd of two zero polynomials");
  if (p.is_zero()) return monic(q);
  if (q.is_zero()) return monic(p);
  UniPoly a = primitive_part(p);
  UniPoly b = primitive_part(q);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).second;
    a = std::move(b);
    b = r.is_zero() ? UniPoly() : primitive_part(r);
  }
  return monic(a);
}

UniPoly uni_lcm(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  return monic(exact_div(p * q, uni_gcd(p, q)));
}

std::vector<SquarefreeFactor> squarefree_decomposition(const UniPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "squarefree decomposition of zero");
  std::vector<SquarefreeFactor> out;
  if (p.is_constant()) return out;
  const UniPoly f = monic(p);
  const UniPoly df = derivative(f);
  UniPoly a0 = uni_gcd(f, df);
  UniPoly b = exact_div(f, a0);
  UniPoly c = exact_div(df, a0);
  UniPoly d = c - derivative(b);
  for (int mult = 1; !b.is_constant(); ++mult) {
    UniPoly a = uni_gcd(b, d);
    if (!a.is_constant()) out.push_back({a, mult});
    b = exact_div(b, a);
    c = exact_div(d, a);
    d = c - derivative(b);
  }
  return out;
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "squarefree part of zero");
  if (p.is_constant()) return UniPoly::constant(1);
  return monic(exact_div(p, uni_gcd(p, derivative(p))));
}

double cauchy_root_bound(const UniPoly& p) {
  if (p.degree() < 1) return 1.0;
  const double lead = std::sqrt(gr_norm(p.leading()).get_d());
  double worst = 0.0;
  for (int k = 0; k < p.degree(); ++k) {
    worst = std::max(worst, std::sqrt(gr_norm(p[k]).get_d()) / lead);
  }
  return (1.0 + worst) * (1.0 + 1e-9);
}

namespace detail {

void append_term(std::string& out, const GaussianRational& c, const std::string& monomial) {
  if (c.is_zero()) return;
  bool negative = false;
  std::string body;
  if (c.is_real() || sgn(c.re()) == 0) {
    const bool imaginary = !c.is_real();
    BigRational magnitude = imaginary ? c.im() : c.re();
    if (sgn(magnitude) < 0) {
      negative = true;
      magnitude = -magnitude;
    }
    if (imaginary) {
      body = magnitude == 1 ? "i" : magnitude.get_str() + "*i";
    } else if (magnitude != 1 || monomial.empty()) {
      body = magnitude.get_str();
    }
  } else {
    body = "(" + to_string(c) + ")";
  }
  if (!monomial.empty()) body = body.empty() ? monomial : body + "*" + monomial;
  if (negative) {
    out += "-";
  } else if (!out.empty()) {
    out += "+";
  }
  out += body;
}

}  // namespace detail

std::string to_string(const UniPoly& p, char var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    std::string monomial;
    if (k == 1) monomial = std::string(1, var);
    if (k > 1) monomial = std::string(1, var) + "^" + std::to_string(k);
    detail::append_term(out, p[k], monomial);
  }
  return out;
}

}  // namespace unimod
