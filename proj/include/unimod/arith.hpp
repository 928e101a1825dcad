#ifndef UNIMOD_ARITH_HPP
#define UNIMOD_ARITH_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

namespace unimod {

/// Arbitrary-precision rational; gmpxx keeps results canonical.
using BigRational = mpq_class;
using BigInteger = mpz_class;

/// Exact element re + im*i of Q(i).
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long v) : re_(v), im_(0) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(BigRational re) : re_(std::move(re)), im_(0) {}  // NOLINT
  GaussianRational(BigRational re, BigRational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational i() { return {BigRational(0), BigRational(1)}; }

  const BigRational& re() const { return re_; }
  const BigRational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {BigRational(-re_), BigRational(-im_)}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  BigRational re_{0};
  BigRational im_{0};
};

enum class ArithOp { add, sub, mul, div };

/// Exact field operation; DivisionByZero when dividing by 0.
GaussianRational gr_arith(const GaussianRational& a, const GaussianRational& b, ArithOp op);
GaussianRational gr_conj(const GaussianRational& a);
/// a * conj(a); equals 1 exactly for unimodular a.
BigRational gr_norm(const GaussianRational& a);
/// Integer power; negative exponents invert (DivisionByZero on 0).
GaussianRational gr_pow(const GaussianRational& a, long e);

/// Square root in Q(i) if one exists (principal branch: re > 0, or re = 0 and im >= 0).
bool gr_sqrt(const GaussianRational& a, GaussianRational& root);

/// Textual form `a/b+c/d*i`; parse accepts the print output and common variants
/// (`-2`, `i`, `-i`, `4/5*i`, `3/5 - 4/5*i`).
std::string to_string(const GaussianRational& a);
GaussianRational parse_gaussian(std::string_view text);
std::string to_string(const BigRational& q);

// ---------------------------------------------------------------------------
// Floating point with explicit precision.

/// Owning wrapper around mpfr_t.
class Float {
 public:
  explicit Float(mpfr_prec_t prec = 53);
  Float(double v, mpfr_prec_t prec);
  Float(const Float& o);
  Float(Float&& o) noexcept;
  Float& operator=(const Float& o);
  Float& operator=(Float&& o) noexcept;
  ~Float();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  /// Exact conversion (finite values only).
  BigRational to_rational() const;
  std::string to_string(int digits = 20) const;

 private:
  mpfr_t value_;
};

/// Precision used for radii; radii are always rounded upward.
inline constexpr mpfr_prec_t kRadiusPrecision = 64;

/// Complex disc {center + t : |t| <= radius}. Arithmetic is rigorous: the exact
/// result of the operation on any members lies in the returned ball.
class ComplexBall {
 public:
  explicit ComplexBall(mpfr_prec_t prec = 128);
  ComplexBall(Float re, Float im, Float radius);

  static ComplexBall point(double re, double im, mpfr_prec_t prec);

  const Float& re() const { return re_; }
  const Float& im() const { return im_; }
  const Float& radius() const { return rad_; }
  mpfr_prec_t precision() const { return re_.precision(); }

  bool is_exact() const { return rad_.is_zero(); }
  /// Upper bound of max |z| over the ball.
  Float mag() const;
  /// Lower bound of min |z| over the ball (0 if the ball contains 0).
  Float mig() const;
  bool contains_zero() const;
  bool contains(const GaussianRational& a) const;
  /// True when `inner` lies inside this ball (sufficient test).
  bool contains(const ComplexBall& inner) const;
  bool overlaps(const ComplexBall& other) const;
  /// Ball enclosing the real part (imaginary center 0, same radius).
  ComplexBall real_part() const;
  ComplexBall conj() const;
  ComplexBall with_radius_added(const Float& extra) const;
  ComplexBall operator-() const;

  double center_re() const { return re_.to_double(); }
  double center_im() const { return im_.to_double(); }
  double radius_double() const { return mpfr_get_d(rad_.get(), MPFR_RNDU); }

 private:
  Float re_;
  Float im_;
  Float rad_;
};

ComplexBall operator+(const ComplexBall& a, const ComplexBall& b);
ComplexBall operator-(const ComplexBall& a, const ComplexBall& b);
ComplexBall operator*(const ComplexBall& a, const ComplexBall& b);
/// Throws Error(DivisionByZero) when b contains 0.
ComplexBall operator/(const ComplexBall& a, const ComplexBall& b);
ComplexBall inverse(const ComplexBall& b);

/// Smallest ball (at `precision_bits`) containing the exact value.
ComplexBall to_ball(const GaussianRational& a, mpfr_prec_t precision_bits);

/// Upper bound of | |z| - 1 | over the ball.
double unit_deviation(const ComplexBall& z);

}  // namespace unimod

#endif  // UNIMOD_ARITH_HPP
