#ifndef UNIMOD_LEVELSOLVER_HPP
#define UNIMOD_LEVELSOLVER_HPP

#include <optional>
#include <string>
#include <vector>

#include "unimod/ratfun.hpp"
#include "unimod/system.hpp"

namespace unimod {

/// A(z) conj(A)(w) - B(z) conj(B)(w) for P = A/B in variables (z, w), scaled
/// by a positive rational to coprime Gaussian-integer coefficients. On w =
/// conj(z) it vanishes exactly where |P(z)| = 1.
struct LevelPoly {
  BiPoly poly;
  RatFun source;
};

/// ConstantInput for constant P.
LevelPoly level_poly(const RatFun& p);

struct CertifiedPoint {
  ComplexBall z;
  /// Enclosures of L1 and L2 at (z, conj z).
  ComplexBall residual1;
  ComplexBall residual2;
  /// Krawczyk test passed on a conjugation-symmetric box.
  bool newton_certified = false;
  /// z is an exact Gaussian rational solution; the ball is its rounding.
  bool exact = false;
};

/// Q_i o W = P_i, and mobius maps the unit circle onto the circline carrying
/// W's image of the shared trace; residual bounds ||Q_i(mobius(s))| - 1| over
/// sample points s of the circle.
struct DegeneracyWitness {
  RatFun W;
  RatFun Q1;
  RatFun Q2;
  RatFun mobius;
  double residual = 0.0;
};

enum class SolveStatus { FINITE, DEGENERATE };

struct SolutionReport {
  SolveStatus status = SolveStatus::FINITE;
  std::vector<CertifiedPoint> points;
  long bound = 0;
  /// sigma-invariant common factor of the level polynomials (DEGENERATE).
  std::optional<BiPoly> shared_component;
  std::optional<DegeneracyWitness> witness;
  /// Why the witness is missing, when it is.
  std::string witness_error;
  /// Certified points on the shared trace (DEGENERATE).
  std::vector<ComplexBall> trace_points;
};

/// Certified simple points z = x + iy of the real trace of a sigma-invariant G.
std::vector<ComplexBall> trace_points(const BiPoly& g, const SearchConfig& search, std::size_t max_points,
                                      mpfr_prec_t precision_bits);

/// Decides whether {z : |P1(z)| = |P2(z)| = 1} is finite and encloses it.
/// ConstantInput when both inputs are constant; BoundViolation when more than
/// count_bound points survive.
SolutionReport solve_unimodular_pair(const RatFun& p1, const RatFun& p2, const SolverConfig& config = {});

/// Builds the factorization witness from three points of the shared trace.
/// WitnessFitFailed when the fit is impossible or the residual exceeds the
/// configured tolerance.
DegeneracyWitness explain_degenerate(const RatFun& p1, const RatFun& p2, const BiPoly& shared_component,
                                     const std::vector<ComplexBall>& solved_points, const SolverConfig& config = {});

/// (deg P1 + deg P2)^2.
long count_bound(const RatFun& p1, const RatFun& p2);

}  // namespace unimod

#endif  // UNIMOD_LEVELSOLVER_HPP
