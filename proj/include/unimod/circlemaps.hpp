#ifndef UNIMOD_CIRCLEMAPS_HPP
#define UNIMOD_CIRCLEMAPS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "unimod/ratfun.hpp"
#include "unimod/roots.hpp"

namespace unimod {

struct BlaschkeFactor {
  ComplexBall zero;
  int multiplicity = 1;
  /// True for a factor of B1 (numerator side), false for B2.
  bool inside = true;
};

/// Q = zeta * B1 / B2 with B1, B2 finite Blaschke products.
struct BlaschkeForm {
  ComplexBall unimodular_constant;
  std::vector<BlaschkeFactor> factors;
};

/// Q*(z) = conj(Q(1/conj z)), the reflection of Q across the unit circle.
RatFun circle_reflection(const RatFun& q);

/// Exact test Q * Q* = 1, cross-checked against reality of the Cayley
/// conjugate. Constants: true iff the norm is 1. InternalDisagreement if the
/// two criteria differ.
bool is_circle_preserving(const RatFun& q);

/// Circle preserving, no pole at infinity beyond the numerator degree, and all
/// zeros of the numerator strictly inside the unit disc (Schur-Cohn, checked
/// against certified roots).
bool is_finite_blaschke(const RatFun& q);

/// Number of zeros of p in the open unit disc by Cohn's reduction; nullopt
/// when a reduction step is singular (for instance a zero on the circle).
std::optional<int> schur_cohn_inside_count(const UniPoly& p);
/// Schur-Cohn count with a certified-roots fallback for singular reductions;
/// nullopt only if a zero cannot be separated from the circle.
std::optional<int> count_inside_disc(const UniPoly& p);
/// True iff every zero of p lies in the open unit disc (exact).
bool schur_cohn_all_inside(const UniPoly& p);

/// Splits a circle-preserving Q into zeta * B1 / B2. NotCirclePreserving for
/// other inputs; CertificationFailed if a zero cannot be separated from the
/// circle at the precision cap.
BlaschkeForm blaschke_quotient_split(const RatFun& q, mpfr_prec_t precision_bits = kDefaultPrecision,
                                     mpfr_prec_t max_precision_bits = kDefaultMaxPrecision);

/// Ball value of zeta * B1(s) / B2(s).
ComplexBall blaschke_eval(const BlaschkeForm& form, const ComplexBall& s);

/// zeta * prod ((z - a)/(1 - conj(a) z))^m as an exact rational function.
RatFun make_blaschke(const GaussianRational& zeta, const std::vector<std::pair<GaussianRational, int>>& zeros);

/// Exact points on the unit circle used for sampling: 1, i, -1, -i, then
/// (+-3 +- 4i)/5, (+-4 +- 3i)/5, (+-5 +- 12i)/13. count <= 20.
std::vector<GaussianRational> unimodular_samples(std::size_t count);

}  // namespace unimod

#endif  // UNIMOD_CIRCLEMAPS_HPP
