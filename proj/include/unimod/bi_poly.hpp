#ifndef UNIMOD_BI_POLY_HPP
#define UNIMOD_BI_POLY_HPP

#include <string>
#include <vector>

#include "unimod/uni_poly.hpp"

namespace unimod {

/// Variables of a bivariate polynomial, e.g. {'z','w'} or {'x','y'}.
struct VarPair {
  char first = 'x';
  char second = 'y';
  friend bool operator==(const VarPair&, const VarPair&) = default;
};

enum class Var { first, second };

/// Dense polynomial over Q(i) in two variables u (first) and v (second),
/// stored as rows: rows_[b](u) is the coefficient of v^b. Trailing zero rows
/// are trimmed and every row is itself trimmed.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(VarPair vars) : vars_(vars) {}
  BiPoly(std::vector<UniPoly> rows, VarPair vars);

  static BiPoly constant(const GaussianRational& c, VarPair vars);
  /// c * u^a * v^b.
  static BiPoly monomial(const GaussianRational& c, int a, int b, VarPair vars);
  /// Polynomial depending only on the first variable.
  static BiPoly from_first(const UniPoly& p, VarPair vars);
  /// Polynomial depending only on the second variable.
  static BiPoly from_second(const UniPoly& p, VarPair vars);

  const VarPair& vars() const { return vars_; }
  void set_vars(VarPair vars) { vars_ = vars; }
  const std::vector<UniPoly>& rows() const { return rows_; }
  /// Coefficient of the second variable to the power b, as a polynomial in the first.
  const UniPoly& row(int b) const;
  const GaussianRational& coeff(int a, int b) const;

  bool is_zero() const { return rows_.empty(); }
  bool is_constant() const { return rows_.size() <= 1 && (rows_.empty() || rows_[0].is_constant()); }
  int degree_first() const;
  int degree_second() const { return static_cast<int>(rows_.size()) - 1; }
  int degree(Var v) const { return v == Var::first ? degree_first() : degree_second(); }
  int total_degree() const;
  /// Coefficient of the largest monomial in lex order (second variable major).
  const GaussianRational& lex_leading() const;

  GaussianRational eval(const GaussianRational& u, const GaussianRational& v) const;
  ComplexBall eval(const ComplexBall& u, const ComplexBall& v) const;
  /// Specialize the second variable: result is a polynomial in the first.
  UniPoly eval_second(const GaussianRational& v) const;
  /// Specialize the first variable: result is a polynomial in the second.
  UniPoly eval_first(const GaussianRational& u) const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const GaussianRational& c);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const GaussianRational& c) { return a *= c; }
  BiPoly operator-() const;

  /// Structural equality of coefficients (variable names ignored).
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.rows_ == b.rows_; }

 private:
  void trim();

  std::vector<UniPoly> rows_;
  VarPair vars_{};
};

BiPoly pow(const BiPoly& p, unsigned e);
/// Exchanges the roles of the two variables (names are kept in place).
BiPoly swap_vars(const BiPoly& p);
BiPoly derivative(const BiPoly& p, Var v);
BiPoly conj_poly(const BiPoly& p);
/// conj_poly followed by swap_vars: the involution sigma.
BiPoly swap_conj(const BiPoly& p);

/// a / b when exact, NotAFactor otherwise. DivisionByZero for b = 0.
BiPoly exact_div(const BiPoly& a, const BiPoly& b);
bool divides(const BiPoly& d, const BiPoly& p);

/// Divides by the lex-leading coefficient.
BiPoly normalize_lex(const BiPoly& p);
/// Scales by a positive rational so that coefficients become Gaussian integers
/// with coprime integer parts; sigma-invariance is preserved.
BiPoly normalize_positive(const BiPoly& p);
/// gcd of the coefficient rows (a monic polynomial in the first variable).
UniPoly content_second(const BiPoly& p);

/// Exact gcd, normalized with lex-leading coefficient 1. BothZero when both vanish.
BiPoly bi_gcd(const BiPoly& p, const BiPoly& q);

/// Sylvester-matrix resultant eliminating `eliminate`; rows of p come first.
/// DegreeZero when either input is constant in the eliminated variable.
UniPoly bi_resultant(const BiPoly& p, const BiPoly& q, Var eliminate);

/// Resultant with respect to t of two polynomials whose t-coefficients are
/// polynomials in x (for p) and y (for q); result lives in Q(i)[x, y].
BiPoly mixed_resultant(const std::vector<UniPoly>& p_coeffs_in_x, const std::vector<UniPoly>& q_coeffs_in_y,
                       VarPair vars);

/// F(u, v) with u and v substituted by rational functions num_u/den_u and
/// num_v/den_v, cleared by den_u^{deg_u F} den_v^{deg_v F}.
BiPoly substitute_cleared(const BiPoly& f, const UniPoly& num_u, const UniPoly& den_u, const UniPoly& num_v,
                          const UniPoly& den_v);

/// Text rendering such as `z^2*w^2-1` using the stored variable names.
std::string to_string(const BiPoly& p);

}  // namespace unimod

#endif  // UNIMOD_BI_POLY_HPP
