#ifndef UNIMOD_ROOTS_HPP
#define UNIMOD_ROOTS_HPP

#include <optional>
#include <vector>

#include "unimod/bi_poly.hpp"
#include "unimod/uni_poly.hpp"

namespace unimod {

inline constexpr mpfr_prec_t kDefaultPrecision = 128;
inline constexpr mpfr_prec_t kDefaultMaxPrecision = 4096;

/// A root cluster of a univariate polynomial. When `certified`, the ball holds
/// exactly `multiplicity` roots counted with multiplicity.
struct RootBall {
  ComplexBall location;
  int multiplicity = 1;
  bool certified = false;
};

/// All complex roots of p. Each squarefree factor is solved by Aberth-Ehrlich
/// iteration from scaled, rotated roots of unity; its approximations are then
/// certified with Gerschgorin discs of the Weierstrass companion matrix. The
/// working precision doubles from `precision_bits` up to `max_precision_bits`
/// until all discs are pairwise disjoint; CertificationFailed after that.
/// Output is sorted by (re, im, radius) of the centers.
std::vector<RootBall> certified_roots(const UniPoly& p, mpfr_prec_t precision_bits = kDefaultPrecision,
                                      mpfr_prec_t max_precision_bits = kDefaultMaxPrecision);

/// Complex box (pair of discs) for two-variable Newton certification.
struct Box2 {
  ComplexBall u;
  ComplexBall v;
};

/// One Krawczyk step for the square system f1 = f2 = 0 over X. Returns K(X)
/// when K(X) lies strictly inside X; then X holds exactly one zero and it lies
/// in the returned box.
std::optional<Box2> krawczyk2(const BiPoly& f1, const BiPoly& f2, const Box2& x);

/// Orders balls by center real part, then imaginary part, then radius.
bool ball_less(const ComplexBall& a, const ComplexBall& b);

/// Best rational approximation with denominator at most `max_den` whose error
/// is below `tolerance`, if any (continued fractions).
std::optional<BigRational> rational_reconstruct(const Float& value, const BigRational& tolerance,
                                                const mpz_class& max_den);
/// Gaussian-rational guess for the ball center (both parts reconstructed).
std::optional<GaussianRational> gaussian_reconstruct(const ComplexBall& ball, const BigRational& tolerance,
                                                     const mpz_class& max_den);

}  // namespace unimod

#endif  // UNIMOD_ROOTS_HPP
