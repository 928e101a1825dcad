#include "unimod/arith.hpp"

#include <algorithm>
#include <cctype>
#include <utility>
#include <vector>

#include "unimod/error.hpp"

namespace unimod {

// ---------------------------------------------------------------------------
// GaussianRational

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  BigRational re = re_ * o.re_ - im_ * o.im_;
  BigRational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  BigRational n = o.re_ * o.re_ + o.im_ * o.im_;
  if (sgn(n) == 0) throw Error(ErrorKind::DivisionByZero, "division of Gaussian rational by zero");
  BigRational re = (re_ * o.re_ + im_ * o.im_) / n;
  BigRational im = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational gr_arith(const GaussianRational& a, const GaussianRational& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  return {};
}

GaussianRational gr_conj(const GaussianRational& a) { return {a.re(), BigRational(-a.im())}; }

BigRational gr_norm(const GaussianRational& a) { return a.re() * a.re() + a.im() * a.im(); }

GaussianRational gr_pow(const GaussianRational& a, long e) {
  GaussianRational base = a;
  if (e < 0) {
    base = GaussianRational(1) / a;
    e = -e;
  }
  GaussianRational result(1);
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

namespace {

bool rational_sqrt(const BigRational& q, BigRational& root) {
  if (sgn(q) < 0) return false;
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  root = BigRational(rn, rd);
  root.canonicalize();
  return true;
}

}  // namespace

bool gr_sqrt(const GaussianRational& a, GaussianRational& root) {
  BigRational modulus;
  if (!rational_sqrt(gr_norm(a), modulus)) return false;
  BigRational u, v;
  if (!rational_sqrt((a.re() + modulus) / 2, u)) return false;
  if (sgn(u) != 0) {
    v = a.im() / (2 * u);
  } else if (!rational_sqrt((modulus - a.re()) / 2, v)) {
    return false;
  }
  root = GaussianRational(u, v);
  return root * root == a;
}

std::string to_string(const BigRational& q) { return q.get_str(); }

std::string to_string(const GaussianRational& a) {
  const bool has_re = sgn(a.re()) != 0;
  const bool has_im = sgn(a.im()) != 0;
  if (!has_im) return a.re().get_str();
  std::string out;
  if (has_re) out = a.re().get_str();
  BigRational im = a.im();
  if (sgn(im) < 0) {
    out += "-";
    im = -im;
  } else if (has_re) {
    out += "+";
  }
  if (im == 1) {
    out += "i";
  } else {
    out += im.get_str() + "*i";
  }
  return out;
}

namespace {

class GaussianScanner {
 public:
  explicit GaussianScanner(std::string_view text) : text_(text) {}

  GaussianRational parse() {
    GaussianRational total;
    skip_ws();
    if (pos_ >= text_.size()) fail("empty number");
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ >= text_.size()) break;
      int sign = 1;
      if (text_[pos_] == '+' || text_[pos_] == '-') {
        sign = text_[pos_] == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      total += parse_term() * GaussianRational(sign);
      first = false;
    }
    return total;
  }

 private:
  GaussianRational parse_term() {
    if (pos_ < text_.size() && text_[pos_] == 'i') {
      ++pos_;
      return GaussianRational::i();
    }
    BigRational value = parse_rational();
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '*') {
      ++pos_;
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != 'i') fail("expected 'i'");
      ++pos_;
      return {BigRational(0), value};
    }
    return GaussianRational(value);
  }

  BigRational parse_rational() {
    mpz_class num = parse_integer();
    skip_ws();
    mpz_class den = 1;
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      skip_ws();
      den = parse_integer();
      if (den == 0) fail("zero denominator");
    }
    BigRational q(num, den);
    q.canonicalize();
    return q;
  }

  mpz_class parse_integer() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(ErrorKind::ParseError, pos_, what); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GaussianRational parse_gaussian(std::string_view text) { return GaussianScanner(text).parse(); }

// ---------------------------------------------------------------------------
// Float

Float::Float(mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_zero(value_, 1);
}

Float::Float(double v, mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_d(value_, v, MPFR_RNDN);
}

Float::Float(const Float& o) {
  mpfr_init2(value_, o.precision());
  mpfr_set(value_, o.value_, MPFR_RNDN);
}

Float::Float(Float&& o) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, o.value_);
}

Float& Float::operator=(const Float& o) {
  if (this != &o) {
    mpfr_set_prec(value_, o.precision());
    mpfr_set(value_, o.value_, MPFR_RNDN);
  }
  return *this;
}

Float& Float::operator=(Float&& o) noexcept {
  mpfr_swap(value_, o.value_);
  return *this;
}

Float::~Float() { mpfr_clear(value_); }

BigRational Float::to_rational() const {
  BigRational q;
  mpfr_get_q(q.get_mpq_t(), value_);
  return q;
}

std::string Float::to_string(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, value_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

// ---------------------------------------------------------------------------
// ComplexBall

namespace {

Float radius_zero() { return Float(kRadiusPrecision); }

// Adds one ulp of `y` to `err` when the operation producing y was inexact.
void add_rounding_error(Float& err, const Float& y, int ternary) {
  if (ternary == 0 || mpfr_zero_p(y.get())) return;
  Float ulp(kRadiusPrecision);
  mpfr_set_ui_2exp(ulp.get(), 1, mpfr_get_exp(y.get()) - y.precision(), MPFR_RNDU);
  mpfr_add(err.get(), err.get(), ulp.get(), MPFR_RNDU);
}

Float abs_upper(const Float& re, const Float& im) {
  Float r(std::max(re.precision(), kRadiusPrecision));
  mpfr_hypot(r.get(), re.get(), im.get(), MPFR_RNDU);
  return r;
}

Float abs_lower(const Float& re, const Float& im) {
  Float r(std::max(re.precision(), kRadiusPrecision));
  mpfr_hypot(r.get(), re.get(), im.get(), MPFR_RNDD);
  return r;
}

BigRational center_distance_sq(const ComplexBall& a, const ComplexBall& b) {
  BigRational dr = a.re().to_rational() - b.re().to_rational();
  BigRational di = a.im().to_rational() - b.im().to_rational();
  return dr * dr + di * di;
}

}  // namespace

ComplexBall::ComplexBall(mpfr_prec_t prec) : re_(prec), im_(prec), rad_(kRadiusPrecision) {}

ComplexBall::ComplexBall(Float re, Float im, Float radius)
    : re_(std::move(re)), im_(std::move(im)), rad_(kRadiusPrecision) {
  mpfr_set(rad_.get(), radius.get(), MPFR_RNDU);
}

ComplexBall ComplexBall::point(double re, double im, mpfr_prec_t prec) {
  return ComplexBall(Float(re, prec), Float(im, prec), radius_zero());
}

Float ComplexBall::mag() const {
  Float r = abs_upper(re_, im_);
  mpfr_add(r.get(), r.get(), rad_.get(), MPFR_RNDU);
  return r;
}

Float ComplexBall::mig() const {
  Float r = abs_lower(re_, im_);
  mpfr_sub(r.get(), r.get(), rad_.get(), MPFR_RNDD);
  if (mpfr_sgn(r.get()) < 0) mpfr_set_zero(r.get(), 1);
  return r;
}

bool ComplexBall::contains_zero() const {
  Float lower = abs_lower(re_, im_);
  return mpfr_cmp(lower.get(), rad_.get()) <= 0;
}

bool ComplexBall::contains(const GaussianRational& a) const {
  BigRational dr = re_.to_rational() - a.re();
  BigRational di = im_.to_rational() - a.im();
  BigRational r = rad_.to_rational();
  return dr * dr + di * di <= r * r;
}

bool ComplexBall::contains(const ComplexBall& inner) const {
  BigRational slack = rad_.to_rational() - inner.rad_.to_rational();
  if (sgn(slack) < 0) return false;
  return center_distance_sq(*this, inner) <= slack * slack;
}

bool ComplexBall::overlaps(const ComplexBall& other) const {
  BigRational reach = rad_.to_rational() + other.rad_.to_rational();
  return center_distance_sq(*this, other) <= reach * reach;
}

ComplexBall ComplexBall::real_part() const { return ComplexBall(re_, Float(precision()), rad_); }

ComplexBall ComplexBall::conj() const {
  Float im = im_;
  mpfr_neg(im.get(), im.get(), MPFR_RNDN);
  return ComplexBall(re_, std::move(im), rad_);
}

ComplexBall ComplexBall::with_radius_added(const Float& extra) const {
  Float r = rad_;
  mpfr_add(r.get(), r.get(), extra.get(), MPFR_RNDU);
  return ComplexBall(re_, im_, std::move(r));
}

ComplexBall ComplexBall::operator-() const {
  Float re = re_;
  Float im = im_;
  mpfr_neg(re.get(), re.get(), MPFR_RNDN);
  mpfr_neg(im.get(), im.get(), MPFR_RNDN);
  return ComplexBall(std::move(re), std::move(im), rad_);
}

namespace {

ComplexBall add_or_sub(const ComplexBall& a, const ComplexBall& b, bool subtract) {
  const mpfr_prec_t prec = std::max(a.precision(), b.precision());
  Float re(prec), im(prec), rad(kRadiusPrecision);
  int tr = subtract ? mpfr_sub(re.get(), a.re().get(), b.re().get(), MPFR_RNDN)
                    : mpfr_add(re.get(), a.re().get(), b.re().get(), MPFR_RNDN);
  int ti = subtract ? mpfr_sub(im.get(), a.im().get(), b.im().get(), MPFR_RNDN)
                    : mpfr_add(im.get(), a.im().get(), b.im().get(), MPFR_RNDN);
  mpfr_add(rad.get(), a.radius().get(), b.radius().get(), MPFR_RNDU);
  add_rounding_error(rad, re, tr);
  add_rounding_error(rad, im, ti);
  return ComplexBall(std::move(re), std::move(im), std::move(rad));
}

}  // namespace

ComplexBall operator+(const ComplexBall& a, const ComplexBall& b) { return add_or_sub(a, b, false); }
ComplexBall operator-(const ComplexBall& a, const ComplexBall& b) { return add_or_sub(a, b, true); }

ComplexBall operator*(const ComplexBall& a, const ComplexBall& b) {
  const mpfr_prec_t prec = std::max(a.precision(), b.precision());
  Float re(prec), im(prec), rad(kRadiusPrecision);
  int tr = mpfr_fmms(re.get(), a.re().get(), b.re().get(), a.im().get(), b.im().get(), MPFR_RNDN);
  int ti = mpfr_fmma(im.get(), a.re().get(), b.im().get(), a.im().get(), b.re().get(), MPFR_RNDN);

  // |a|rb + |b|ra + ra rb
  Float abs_a = abs_upper(a.re(), a.im());
  Float abs_b = abs_upper(b.re(), b.im());
  Float t(kRadiusPrecision);
  mpfr_mul(rad.get(), abs_a.get(), b.radius().get(), MPFR_RNDU);
  mpfr_mul(t.get(), abs_b.get(), a.radius().get(), MPFR_RNDU);
  mpfr_add(rad.get(), rad.get(), t.get(), MPFR_RNDU);
  mpfr_mul(t.get(), a.radius().get(), b.radius().get(), MPFR_RNDU);
  mpfr_add(rad.get(), rad.get(), t.get(), MPFR_RNDU);
  add_rounding_error(rad, re, tr);
  add_rounding_error(rad, im, ti);
  return ComplexBall(std::move(re), std::move(im), std::move(rad));
}

ComplexBall inverse(const ComplexBall& b) {
  const mpfr_prec_t prec = b.precision();
  Float lower = abs_lower(b.re(), b.im());
  if (mpfr_cmp(lower.get(), b.radius().get()) <= 0) {
    throw Error(ErrorKind::DivisionByZero, "ball inverse: denominator contains zero");
  }
  // Approximate 1/c, then bound |1/z - approx| for every z in the ball by
  // |1 - approx*c| / |c| + r / ((|c| - r) |c|).
  Float n(prec), re(prec), im(prec);
  mpfr_sqr(n.get(), b.re().get(), MPFR_RNDN);
  mpfr_fma(n.get(), b.im().get(), b.im().get(), n.get(), MPFR_RNDN);
  mpfr_div(re.get(), b.re().get(), n.get(), MPFR_RNDN);
  mpfr_div(im.get(), b.im().get(), n.get(), MPFR_RNDN);
  mpfr_neg(im.get(), im.get(), MPFR_RNDN);
  ComplexBall approx(re, im, radius_zero());
  ComplexBall center(b.re(), b.im(), radius_zero());
  ComplexBall one(Float(1.0, prec), Float(prec), radius_zero());
  ComplexBall residual = one - approx * center;

  Float err = residual.mag();
  mpfr_div(err.get(), err.get(), lower.get(), MPFR_RNDU);
  if (!b.radius().is_zero()) {
    Float gap(kRadiusPrecision), t(kRadiusPrecision);
    mpfr_sub(gap.get(), lower.get(), b.radius().get(), MPFR_RNDD);
    mpfr_mul(gap.get(), gap.get(), lower.get(), MPFR_RNDD);
    mpfr_div(t.get(), b.radius().get(), gap.get(), MPFR_RNDU);
    mpfr_add(err.get(), err.get(), t.get(), MPFR_RNDU);
  }
  return ComplexBall(std::move(re), std::move(im), std::move(err));
}

ComplexBall operator/(const ComplexBall& a, const ComplexBall& b) { return a * inverse(b); }

ComplexBall to_ball(const GaussianRational& a, mpfr_prec_t precision_bits) {
  Float re(precision_bits), im(precision_bits), rad(kRadiusPrecision);
  mpfr_set_q(re.get(), a.re().get_mpq_t(), MPFR_RNDN);
  mpfr_set_q(im.get(), a.im().get_mpq_t(), MPFR_RNDN);
  // Exact rounding error, then rounded up to the radius precision.
  BigRational err = abs(a.re() - re.to_rational()) + abs(a.im() - im.to_rational());
  mpfr_set_q(rad.get(), err.get_mpq_t(), MPFR_RNDU);
  return ComplexBall(std::move(re), std::move(im), std::move(rad));
}

double unit_deviation(const ComplexBall& z) {
  Float hi = z.mag();
  Float lo = z.mig();
  Float over(kRadiusPrecision), under(kRadiusPrecision);
  mpfr_sub_ui(over.get(), hi.get(), 1, MPFR_RNDU);
  mpfr_ui_sub(under.get(), 1, lo.get(), MPFR_RNDU);
  return std::max(mpfr_get_d(over.get(), MPFR_RNDU), mpfr_get_d(under.get(), MPFR_RNDU));
}

}  // namespace unimod
