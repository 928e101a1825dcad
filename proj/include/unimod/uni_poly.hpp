#ifndef UNIMOD_UNI_POLY_HPP
#define UNIMOD_UNI_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "unimod/arith.hpp"

namespace unimod {

/// Degree reported for the zero polynomial.
inline constexpr int kZeroDegree = -1;

/// Dense univariate polynomial over Q(i); coefficients_[k] multiplies z^k and
/// the leading coefficient is nonzero (the zero polynomial is empty).
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<GaussianRational> coefficients);
  UniPoly(std::initializer_list<GaussianRational> coefficients);

  static UniPoly constant(const GaussianRational& c);
  static UniPoly monomial(const GaussianRational& c, int degree);
  /// The polynomial z.
  static UniPoly identity();

  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }
  bool is_constant() const { return coefficients_.size() <= 1; }
  bool is_monic() const { return !is_zero() && leading().is_one(); }
  bool is_real() const;

  const std::vector<GaussianRational>& coefficients() const { return coefficients_; }
  /// Coefficient of z^k (zero outside the stored range).
  const GaussianRational& operator[](int k) const;
  const GaussianRational& leading() const { return coefficients_.back(); }

  GaussianRational eval(const GaussianRational& z) const;
  ComplexBall eval(const ComplexBall& z) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const GaussianRational& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const GaussianRational& c) { return a *= c; }
  friend UniPoly operator*(const GaussianRational& c, UniPoly a) { return a *= c; }
  UniPoly operator-() const;

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coefficients_ == b.coefficients_; }

 private:
  void trim();

  std::vector<GaussianRational> coefficients_;
};

/// Quotient and remainder over the field Q(i). DivisionByZero for b = 0.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// a / b when the division is exact; NotAFactor otherwise.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);
bool divides(const UniPoly& d, const UniPoly& p);

UniPoly derivative(const UniPoly& p);
UniPoly monic(const UniPoly& p);
UniPoly pow(const UniPoly& p, unsigned e);
/// z^d * p(1/z); requires d >= deg p.
UniPoly reverse(const UniPoly& p, int d);
/// p with z replaced by c*z.
UniPoly scale_argument(const UniPoly& p, const GaussianRational& c);

/// Coefficient-wise conjugation.
UniPoly conj_poly(const UniPoly& p);

/// p(q(z)).
UniPoly compose_uni(const UniPoly& p, const UniPoly& q);

/// Monic gcd by a primitive remainder sequence over Z[i] (content removed at
/// every step). BothZero when p = q = 0.
UniPoly uni_gcd(const UniPoly& p, const UniPoly& q);
/// Monic lcm; zero if either input is zero.
UniPoly uni_lcm(const UniPoly& p, const UniPoly& q);

/// Rescales p to Gaussian-integer coefficients with unit Z[i]-content.
UniPoly primitive_part(const UniPoly& p);

struct SquarefreeFactor {
  UniPoly factor;
  int multiplicity;
};

/// Yun decomposition, increasing multiplicity; factors monic and pairwise coprime.
/// ZeroPolynomial for p = 0.
std::vector<SquarefreeFactor> squarefree_decomposition(const UniPoly& p);
/// Monic product of the distinct irreducible factors.
UniPoly squarefree_part(const UniPoly& p);

/// Cauchy bound 1 + max |a_k / a_n| (as double, rounded up generously).
double cauchy_root_bound(const UniPoly& p);

/// Human/parser friendly rendering, e.g. `z^2+z+1`, `(1+i)*z-1/2`.
std::string to_string(const UniPoly& p, char var = 'z');

namespace detail {
/// Appends a signed term `coef*monomial` in the canonical print style.
void append_term(std::string& out, const GaussianRational& c, const std::string& monomial);
}  // namespace detail

}  // namespace unimod

#endif  // UNIMOD_UNI_POLY_HPP
