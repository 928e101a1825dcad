#ifndef UNIMOD_EXPR_HPP
#define UNIMOD_EXPR_HPP

#include <string_view>

#include "unimod/bi_poly.hpp"
#include "unimod/ratfun.hpp"

namespace unimod {

/// Parses an expression in one variable (grammar in GRAMMAR.md) and lowers
/// it exactly to a RatFun. Errors are ParseError with kind ParseError,
/// NonGaussianCoefficient or WrongVariable and the byte offset.
RatFun parse_ratfun(std::string_view text, char var = 'z');

/// As parse_ratfun, but the result must be a polynomial.
UniPoly parse_polynomial(std::string_view text, char var = 'z');

/// Polynomial in two variables; division is allowed by nonzero constants only.
BiPoly parse_bipoly(std::string_view text, VarPair vars = {'x', 'y'});

}  // namespace unimod

#endif  // UNIMOD_EXPR_HPP
