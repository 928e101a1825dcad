#include "unimod/bi_poly.hpp"

#include <algorithm>
#include <utility>

#include "unimod/error.hpp"

namespace unimod {

namespace {

const UniPoly& zero_row() {
  static const UniPoly zero;
  return zero;
}

// Fraction-free Gaussian elimination (Bareiss). Every division is exact in
// the coefficient ring, so only `exact_div` is required of Ring.
template <class Ring>
Ring bareiss_determinant(std::vector<std::vector<Ring>> m, const Ring& one) {
  const std::size_t n = m.size();
  if (n == 0) return one;
  bool negate = false;
  Ring previous = one;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && m[pivot][k].is_zero()) ++pivot;
      if (pivot == n) return Ring();
      std::swap(m[k], m[pivot]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Ring t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = exact_div(t, previous);
      }
      m[i][k] = Ring();
    }
    previous = m[k][k];
  }
  Ring det = m[n - 1][n - 1];
  return negate ? -det : det;
}

// Sylvester matrix of p = sum p[k] t^k and q = sum q[k] t^k, p rows first.
template <class Ring>
std::vector<std::vector<Ring>> sylvester(const std::vector<Ring>& p, const std::vector<Ring>& q) {
  const int m = static_cast<int>(p.size()) - 1;
  const int n = static_cast<int>(q.size()) - 1;
  const auto size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<Ring>> s(size, std::vector<Ring>(size));
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k <= m; ++k) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + m - k)] = p[static_cast<std::size_t>(k)];
  }
  for (int r = 0; r < m; ++r) {
    for (int k = 0; k <= n; ++k) {
      s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + n - k)] = q[static_cast<std::size_t>(k)];
    }
  }
  return s;
}

// Pseudo-remainder in the second variable.
BiPoly pseudo_remainder(BiPoly a, const BiPoly& b) {
  const int db = b.degree_second();
  const BiPoly lead = BiPoly::from_first(b.row(db), b.vars());
  while (!a.is_zero() && a.degree_second() >= db) {
    const int shift = a.degree_second() - db;
    BiPoly term = BiPoly::from_first(a.row(a.degree_second()), a.vars()) *
                  BiPoly::monomial(GaussianRational(1), 0, shift, a.vars());
    a = lead * a - term * b;
  }
  return a;
}

BiPoly primitive_second(const BiPoly& p) {
  if (p.is_zero()) return p;
  UniPoly content = content_second(p);
  std::vector<UniPoly> rows;
  rows.reserve(p.rows().size());
  for (const auto& r : p.rows()) rows.push_back(exact_div(r, content));
  return normalize_lex(BiPoly(std::move(rows), p.vars()));
}

}  // namespace

BiPoly::BiPoly(std::vector<UniPoly> rows, VarPair vars) : rows_(std::move(rows)), vars_(vars) { trim(); }

BiPoly BiPoly::constant(const GaussianRational& c, VarPair vars) {
  return BiPoly({UniPoly::constant(c)}, vars);
}

BiPoly BiPoly::monomial(const GaussianRational& c, int a, int b, VarPair vars) {
  std::vector<UniPoly> rows(static_cast<std::size_t>(b) + 1);
  rows.back() = UniPoly::monomial(c, a);
  return BiPoly(std::move(rows), vars);
}

BiPoly BiPoly::from_first(const UniPoly& p, VarPair vars) { return BiPoly({p}, vars); }

BiPoly BiPoly::from_second(const UniPoly& p, VarPair vars) {
  std::vector<UniPoly> rows;
  rows.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) rows.push_back(UniPoly::constant(c));
  return BiPoly(std::move(rows), vars);
}

void BiPoly::trim() {
  while (!rows_.empty() && rows_.back().is_zero()) rows_.pop_back();
}

const UniPoly& BiPoly::row(int b) const {
  if (b < 0 || b > degree_second()) return zero_row();
  return rows_[static_cast<std::size_t>(b)];
}

const GaussianRational& BiPoly::coeff(int a, int b) const { return row(b)[a]; }

int BiPoly::degree_first() const {
  int d = kZeroDegree;
  for (const auto& r : rows_) d = std::max(d, r.degree());
  return d;
}

int BiPoly::total_degree() const {
  int d = kZeroDegree;
  for (int b = 0; b <= degree_second(); ++b) {
    if (!rows_[static_cast<std::size_t>(b)].is_zero()) d = std::max(d, b + rows_[static_cast<std::size_t>(b)].degree());
  }
  return d;
}

const GaussianRational& BiPoly::lex_leading() const {
  if (rows_.empty()) return zero_row()[0];
  return rows_.back().leading();
}

GaussianRational BiPoly::eval(const GaussianRational& u, const GaussianRational& v) const {
  GaussianRational acc;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    acc *= v;
    acc += it->eval(u);
  }
  return acc;
}

ComplexBall BiPoly::eval(const ComplexBall& u, const ComplexBall& v) const {
  ComplexBall acc(std::max(u.precision(), v.precision()));
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) acc = acc * v + it->eval(u);
  return acc;
}

UniPoly BiPoly::eval_second(const GaussianRational& v) const {
  UniPoly acc;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) acc = acc * UniPoly::constant(v) + *it;
  return acc;
}

UniPoly BiPoly::eval_first(const GaussianRational& u) const {
  std::vector<GaussianRational> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r.eval(u));
  return UniPoly(std::move(out));
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  if (o.rows_.size() > rows_.size()) rows_.resize(o.rows_.size());
  for (std::size_t b = 0; b < o.rows_.size(); ++b) rows_[b] += o.rows_[b];
  trim();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  if (o.rows_.size() > rows_.size()) rows_.resize(o.rows_.size());
  for (std::size_t b = 0; b < o.rows_.size(); ++b) rows_[b] -= o.rows_[b];
  trim();
  return *this;
}

BiPoly& BiPoly::operator*=(const GaussianRational& c) {
  for (auto& r : rows_) r *= c;
  trim();
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return BiPoly(a.vars());
  std::vector<UniPoly> rows(a.rows_.size() + b.rows_.size() - 1);
  for (std::size_t i = 0; i < a.rows_.size(); ++i) {
    if (a.rows_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.rows_.size(); ++j) rows[i + j] += a.rows_[i] * b.rows_[j];
  }
  return BiPoly(std::move(rows), a.vars());
}

BiPoly BiPoly::operator-() const {
  BiPoly out = *this;
  for (auto& r : out.rows_) r = -r;
  return out;
}

BiPoly pow(const BiPoly& p, unsigned e) {
  BiPoly result = BiPoly::constant(1, p.vars());
  BiPoly base = p;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

BiPoly swap_vars(const BiPoly& p) {
  const int du = p.degree_first();
  std::vector<UniPoly> rows;
  rows.reserve(static_cast<std::size_t>(std::max(du + 1, 0)));
  for (int a = 0; a <= du; ++a) {
    std::vector<GaussianRational> row;
    row.reserve(p.rows().size());
    for (int b = 0; b <= p.degree_second(); ++b) row.push_back(p.coeff(a, b));
    rows.emplace_back(std::move(row));
  }
  return BiPoly(std::move(rows), p.vars());
}

BiPoly derivative(const BiPoly& p, Var v) {
  if (v == Var::first) {
    std::vector<UniPoly> rows;
    rows.reserve(p.rows().size());
    for (const auto& r : p.rows()) rows.push_back(derivative(r));
    return BiPoly(std::move(rows), p.vars());
  }
  std::vector<UniPoly> rows;
  for (int b = 1; b <= p.degree_second(); ++b) rows.push_back(p.row(b) * GaussianRational(b));
  return BiPoly(std::move(rows), p.vars());
}

BiPoly conj_poly(const BiPoly& p) {
  std::vector<UniPoly> rows;
  rows.reserve(p.rows().size());
  for (const auto& r : p.rows()) rows.push_back(conj_poly(r));
  return BiPoly(std::move(rows), p.vars());
}

BiPoly swap_conj(const BiPoly& p) { return swap_vars(conj_poly(p)); }

BiPoly exact_div(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "bivariate division by zero");
  BiPoly rem = a;
  const int db = b.degree_second();
  const UniPoly& lead = b.row(db);
  std::vector<UniPoly> quot(static_cast<std::size_t>(std::max(a.degree_second() - db + 1, 0)));
  while (!rem.is_zero()) {
    const int shift = rem.degree_second() - db;
    if (shift < 0) throw Error(ErrorKind::NotAFactor, "inexact bivariate division");
    UniPoly q = exact_div(rem.row(rem.degree_second()), lead);
    rem -= BiPoly::from_first(q, a.vars()) * BiPoly::monomial(GaussianRational(1), 0, shift, a.vars()) * b;
    quot[static_cast<std::size_t>(shift)] += q;
  }
  return BiPoly(std::move(quot), a.vars());
}

bool divides(const BiPoly& d, const BiPoly& p) {
  try {
    exact_div(p, d);
    return true;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotAFactor) return false;
    throw;
  }
}

BiPoly normalize_lex(const BiPoly& p) {
  if (p.is_zero() || p.lex_leading().is_one()) return p;
  return p * (GaussianRational(1) / p.lex_leading());
}

BiPoly normalize_positive(const BiPoly& p) {
  if (p.is_zero()) return p;
  mpz_class denominators = 1;
  for (const auto& r : p.rows()) {
    for (const auto& c : r.coefficients()) {
      mpz_lcm(denominators.get_mpz_t(), denominators.get_mpz_t(), c.re().get_den_mpz_t());
      mpz_lcm(denominators.get_mpz_t(), denominators.get_mpz_t(), c.im().get_den_mpz_t());
    }
  }
  mpz_class content = 0;
  for (const auto& r : p.rows()) {
    for (const auto& c : r.coefficients()) {
      BigRational re = c.re() * denominators;
      BigRational im = c.im() * denominators;
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), re.get_num_mpz_t());
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), im.get_num_mpz_t());
    }
  }
  BigRational scale(denominators, content);
  scale.canonicalize();
  return p * GaussianRational(scale);
}

UniPoly content_second(const BiPoly& p) {
  if (p.is_zero()) return {};
  UniPoly g;
  for (const auto& r : p.rows()) {
    if (r.is_zero()) continue;
    g = g.is_zero() ? monic(r) : uni_gcd(g, r);
    if (g.is_constant()) break;
  }
  return g;
}

BiPoly bi_gcd(const BiPoly& p, const BiPoly& q) {
  if (p.is_zero() && q.is_zero()) throw Error(ErrorKind::BothZero, "gcd of two zero polynomials");
  const VarPair vars = p.is_zero() ? q.vars() : p.vars();
  if (p.is_zero()) return normalize_lex(q);
  if (q.is_zero()) return normalize_lex(p);
  const UniPoly content = uni_gcd(content_second(p), content_second(q));
  BiPoly a = primitive_second(p);
  BiPoly b = primitive_second(q);
  if (a.degree_second() < b.degree_second()) std::swap(a, b);
  while (!b.is_zero() && b.degree_second() > 0) {
    BiPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = primitive_second(r);
  }
  // b nonzero of degree 0 in the second variable means the primitive parts are coprime.
  BiPoly g = b.is_zero() ? a : BiPoly::constant(1, vars);
  g = BiPoly::from_first(content, vars) * g;
  g.set_vars(vars);
  return normalize_lex(g);
}

UniPoly bi_resultant(const BiPoly& p, const BiPoly& q, Var eliminate) {
  if (eliminate == Var::first) return bi_resultant(swap_vars(p), swap_vars(q), Var::second);
  if (p.degree_second() < 1 || q.degree_second() < 1) {
    throw Error(ErrorKind::DegreeZero, "resultant needs positive degree in the eliminated variable");
  }
  auto matrix = sylvester(p.rows(), q.rows());
  return bareiss_determinant(std::move(matrix), UniPoly::constant(1));
}

BiPoly mixed_resultant(const std::vector<UniPoly>& p_coeffs_in_x, const std::vector<UniPoly>& q_coeffs_in_y,
                       VarPair vars) {
  if (p_coeffs_in_x.size() < 2 || q_coeffs_in_y.size() < 2) {
    throw Error(ErrorKind::DegreeZero, "resultant needs positive degree in the eliminated variable");
  }
  std::vector<BiPoly> p, q;
  for (const auto& c : p_coeffs_in_x) p.push_back(BiPoly::from_first(c, vars));
  for (const auto& c : q_coeffs_in_y) q.push_back(BiPoly::from_second(c, vars));
  auto matrix = sylvester(p, q);
  BiPoly det = bareiss_determinant(std::move(matrix), BiPoly::constant(1, vars));
  det.set_vars(vars);
  return det;
}

BiPoly substitute_cleared(const BiPoly& f, const UniPoly& num_u, const UniPoly& den_u, const UniPoly& num_v,
                          const UniPoly& den_v) {
  const int du = f.degree_first();
  const int dv = f.degree_second();
  BiPoly out(f.vars());
  if (f.is_zero()) return out;
  std::vector<UniPoly> u_terms, v_terms;
  for (int a = 0; a <= du; ++a) u_terms.push_back(pow(num_u, static_cast<unsigned>(a)) * pow(den_u, static_cast<unsigned>(du - a)));
  for (int b = 0; b <= dv; ++b) v_terms.push_back(pow(num_v, static_cast<unsigned>(b)) * pow(den_v, static_cast<unsigned>(dv - b)));
  for (int b = 0; b <= dv; ++b) {
    UniPoly row_u;
    for (int a = 0; a <= f.row(b).degree(); ++a) {
      if (!f.coeff(a, b).is_zero()) row_u += u_terms[static_cast<std::size_t>(a)] * f.coeff(a, b);
    }
    if (row_u.is_zero()) continue;
    out += BiPoly::from_first(row_u, f.vars()) * BiPoly::from_second(v_terms[static_cast<std::size_t>(b)], f.vars());
  }
  return out;
}

std::string to_string(const BiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const char u = p.vars().first;
  const char v = p.vars().second;
  // Terms by descending total degree, then descending power of u.
  for (int total = p.total_degree(); total >= 0; --total) {
    for (int a = total; a >= 0; --a) {
      const int b = total - a;
      const GaussianRational& c = p.coeff(a, b);
      if (c.is_zero()) continue;
      std::string monomial;
      auto append_power = [&monomial](char var, int e) {
        if (e == 0) return;
        if (!monomial.empty()) monomial += "*";
        monomial += var;
        if (e > 1) monomial += "^" + std::to_string(e);
      };
      append_power(u, a);
      append_power(v, b);
      detail::append_term(out, c, monomial);
    }
  }
  return out;
}

}  // namespace unimod
