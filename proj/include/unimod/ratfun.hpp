#ifndef UNIMOD_RATFUN_HPP
#define UNIMOD_RATFUN_HPP

#include <string>

#include "unimod/uni_poly.hpp"

namespace unimod {

/// Rational function num/den over Q(i) in canonical form: coprime, monic
/// denominator, zero represented as 0/1.
class RatFun {
 public:
  RatFun() : den_(UniPoly::constant(1)) {}
  /// Polynomial p viewed as p/1.
  RatFun(const UniPoly& p);  // NOLINT(google-explicit-constructor)
  RatFun(const GaussianRational& c);  // NOLINT(google-explicit-constructor)

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }
  /// Value of a constant function (zero if the function is zero).
  GaussianRational constant_value() const;

  friend bool operator==(const RatFun& a, const RatFun& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  friend RatFun rf_make(const UniPoly& num, const UniPoly& den);
  friend RatFun rf_make_coprime(const UniPoly& num, const UniPoly& den);

 private:
  UniPoly num_;
  UniPoly den_;
};

/// Reduces num/den to canonical form. ZeroDenominator for den = 0.
RatFun rf_make(const UniPoly& num, const UniPoly& den);

/// Normalizes the scaling only; the caller guarantees gcd(num, den) = 1.
RatFun rf_make_coprime(const UniPoly& num, const UniPoly& den);

/// max(deg num, deg den); 0 for constants.
int rf_degree(const RatFun& p);

RatFun operator+(const RatFun& a, const RatFun& b);
RatFun operator-(const RatFun& a, const RatFun& b);
RatFun operator*(const RatFun& a, const RatFun& b);
/// DivisionByZero for b = 0.
RatFun operator/(const RatFun& a, const RatFun& b);

/// P(Q(z)) by homogeneous substitution: with d = rf_degree(P),
/// num_P^h(num_Q, den_Q) / den_P^h(num_Q, den_Q).
RatFun rf_compose(const RatFun& p, const RatFun& q);

/// T(z) = i(1+z)/(1-z) and its inverse T^-1(x) = (x-i)/(x+i).
RatFun cayley_map();
RatFun inverse_cayley_map();

/// R = T o Q o T^-1. Q must not be the constant 1 (T has a pole there).
RatFun cayley_conjugate(const RatFun& q);
/// Inverse operation: T^-1 o R o T.
RatFun cayley_unconjugate(const RatFun& r);

/// True iff all coefficients of the canonical num and den are real.
bool rf_is_real_up_to_reduction(const RatFun& r);

/// Coefficient-wise conjugation.
RatFun conj_ratfun(const RatFun& p);

/// Exact value; PoleInBall when den vanishes at z.
GaussianRational rf_eval(const RatFun& p, const GaussianRational& z);
/// Enclosure of P over the ball; PoleInBall when the denominator enclosure
/// contains zero.
ComplexBall rf_eval_ball(const RatFun& p, const ComplexBall& z);

/// `p` for polynomials, `(num)/(den)` otherwise.
std::string to_string(const RatFun& p, char var = 'z');

}  // namespace unimod

#endif  // UNIMOD_RATFUN_HPP
