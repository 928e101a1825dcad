#ifndef UNIMOD_SYSTEM_HPP
#define UNIMOD_SYSTEM_HPP

#include <optional>
#include <vector>

#include "unimod/realcurve.hpp"
#include "unimod/roots.hpp"

namespace unimod {

/// Numerical budget shared by the solvers.
struct SolverConfig {
  mpfr_prec_t precision_bits = kDefaultPrecision;
  mpfr_prec_t max_precision_bits = kDefaultMaxPrecision;
  /// Witness residual limit and filtering tolerance.
  double tolerance = 1e-12;
  SearchConfig search;
};

/// A box that passed the Krawczyk test: `outer` holds exactly one zero and
/// it lies in `inner`.
struct CertifiedBox {
  Box2 outer;
  Box2 inner;
};

/// Balls enclosing the `keep` coordinate of every finite common zero of f1
/// and f2, which must have no common factor. Uses the resultant eliminating
/// the other variable; an input free of that variable contributes its own
/// roots instead. Empty when either input is a nonzero constant.
std::vector<RootBall> projection_candidates(const BiPoly& f1, const BiPoly& f2, Var keep, mpfr_prec_t precision_bits,
                                            mpfr_prec_t max_precision_bits);

/// Runs krawczyk2 on `box` with both radii inflated to a ladder of widths.
/// The same radius is used for u and v, so a box symmetric under some
/// involution of the system stays symmetric.
std::optional<CertifiedBox> certify_box(const BiPoly& f1, const BiPoly& f2, const Box2& box);

/// Exact Gaussian-rational guess for a ball center, reconstructed at a
/// tolerance derived from the ball precision.
std::optional<GaussianRational> guess_exact(const ComplexBall& ball);

}  // namespace unimod

#endif  // UNIMOD_SYSTEM_HPP
