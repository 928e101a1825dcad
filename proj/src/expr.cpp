#include "unimod/expr.hpp"

#include <cctype>
#include <optional>
#include <string>

#include "unimod/error.hpp"

namespace unimod {

namespace {

constexpr unsigned long kMaxExponent = 4096;

bool is_transcendental_name(std::string_view name) {
  for (std::string_view known : {"pi", "e", "sqrt", "exp", "log", "ln", "sin", "cos", "tan", "inf", "nan"}) {
    if (name == known) return true;
  }
  return false;
}

// Recursive descent over the raw text; `Algebra` supplies the value type.
template <class Algebra>
class Parser {
 public:
  using Value = typename Algebra::Value;

  Parser(std::string_view text, const Algebra& algebra) : text_(text), alg_(algebra) {}

  Value parse() {
    Value v = expr();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what, ErrorKind kind = ErrorKind::ParseError) const {
    throw ParseError(kind, pos_, what);
  }
  [[noreturn]] void fail_at(std::size_t at, const std::string& what, ErrorKind kind) const {
    throw ParseError(kind, at, what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Value expr() {
    bool negate = accept('-');
    Value v = term();
    if (negate) v = alg_.neg(v);
    while (true) {
      if (accept('+')) {
        v = alg_.add(v, term());
      } else if (accept('-')) {
        v = alg_.sub(v, term());
      } else {
        return v;
      }
    }
  }

  Value term() {
    Value v = factor();
    while (true) {
      skip_space();
      const std::size_t at = pos_;
      if (accept('*')) {
        v = alg_.mul(v, factor());
      } else if (accept('/')) {
        v = alg_.div(v, factor(), at);
      } else {
        return v;
      }
    }
  }

  Value factor() {
    Value v = base();
    if (accept('^')) {
      skip_space();
      const std::size_t at = pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("expected a non-negative integer exponent");
      unsigned long e = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        e = e * 10 + static_cast<unsigned long>(text_[pos_] - '0');
        if (e > kMaxExponent) fail_at(at, "exponent too large", ErrorKind::ParseError);
        ++pos_;
      }
      v = alg_.pow(v, static_cast<unsigned>(e));
    }
    return v;
  }

  Value base() {
    skip_space();
    if (pos_ >= text_.size()) fail("expected an operand");
    const char c = text_[pos_];
    const std::size_t start = pos_;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E'))
        fail_at(start, "decimal literals are not Gaussian rationals", ErrorKind::NonGaussianCoefficient);
      BigInteger n(std::string(text_.substr(start, pos_ - start)));
      return alg_.constant(GaussianRational(BigRational(n)));
    }
    if (c == '.') fail("decimal literals are not Gaussian rationals", ErrorKind::NonGaussianCoefficient);
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      if (name == "i") return alg_.constant(GaussianRational::i());
      if (name.size() == 1) {
        if (auto v = alg_.variable(name[0])) return *v;
        fail_at(start, "unknown variable '" + std::string(name) + "'", ErrorKind::WrongVariable);
      }
      if (is_transcendental_name(name))
        fail_at(start, "'" + std::string(name) + "' is not a Gaussian rational", ErrorKind::NonGaussianCoefficient);
      fail_at(start, "unknown identifier '" + std::string(name) + "'", ErrorKind::WrongVariable);
    }
    if (accept('(')) {
      Value v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const Algebra& alg_;
  std::size_t pos_ = 0;
};

struct RatFunAlgebra {
  using Value = RatFun;
  char var;

  Value constant(const GaussianRational& c) const { return RatFun(c); }
  std::optional<Value> variable(char name) const {
    if (name != var) return std::nullopt;
    return RatFun(UniPoly::identity());
  }
  Value neg(const Value& a) const { return a * RatFun(GaussianRational(-1)); }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value div(const Value& a, const Value& b, std::size_t at) const {
    if (b.is_zero()) throw ParseError(ErrorKind::ParseError, at, "division by zero");
    return a / b;
  }
  Value pow(const Value& a, unsigned e) const {
    return rf_make(unimod::pow(a.num(), e), unimod::pow(a.den(), e));
  }
};

struct BiPolyAlgebra {
  using Value = BiPoly;
  VarPair vars;

  Value constant(const GaussianRational& c) const { return BiPoly::constant(c, vars); }
  std::optional<Value> variable(char name) const {
    if (name == vars.first) return BiPoly::monomial(1, 1, 0, vars);
    if (name == vars.second) return BiPoly::monomial(1, 0, 1, vars);
    return std::nullopt;
  }
  Value neg(const Value& a) const { return -a; }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value div(const Value& a, const Value& b, std::size_t at) const {
    if (!b.is_constant()) throw ParseError(ErrorKind::ParseError, at, "division by a non-constant polynomial");
    if (b.is_zero()) throw ParseError(ErrorKind::ParseError, at, "division by zero");
    return a * (GaussianRational(1) / b.coeff(0, 0));
  }
  Value pow(const Value& a, unsigned e) const { return unimod::pow(a, e); }
};

}  // namespace

RatFun parse_ratfun(std::string_view text, char var) {
  RatFunAlgebra alg{var};
  return Parser<RatFunAlgebra>(text, alg).parse();
}

UniPoly parse_polynomial(std::string_view text, char var) {
  RatFun r = parse_ratfun(text, var);
  if (!r.is_polynomial()) throw ParseError(ErrorKind::ParseError, 0, "expected a polynomial");
  return r.num();
}

BiPoly parse_bipoly(std::string_view text, VarPair vars) {
  BiPolyAlgebra alg{vars};
  BiPoly p = Parser<BiPolyAlgebra>(text, alg).parse();
  p.set_vars(vars);
  return p;
}

}  // namespace unimod
