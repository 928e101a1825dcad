#ifndef UNIMOD_CURVELAB_HPP
#define UNIMOD_CURVELAB_HPP

#include <optional>
#include <string>
#include <vector>

#include "unimod/ratfun.hpp"
#include "unimod/realcurve.hpp"
#include "unimod/system.hpp"

namespace unimod {

/// Plane curve F(x, y) = 0. Irreducibility is the caller's claim and is only
/// recorded.
struct PlaneCurve {
  BiPoly F;
  int degree = 0;
  bool assumed_irreducible = true;
};

/// Normalizes F to lex-leading coefficient 1. ZeroPolynomial for F = 0.
PlaneCurve make_curve(const BiPoly& F, bool assumed_irreducible = true);

/// Raw t-resultant of A1(t) - x B1(t) and A2(t) - y B2(t). A constant
/// coordinate gives the line x = c (or y = c). ImagePoint when both are constant.
BiPoly implicit_resultant(const RatFun& p1, const RatFun& p2);

/// Implicit equation of the image curve with the power of an improper
/// parametrization extracted.
PlaneCurve implicitize(const RatFun& p1, const RatFun& p2);

struct RealityResult {
  bool is_real_up_to_scalar = false;
  /// conj(F) = c F.
  std::optional<GaussianRational> c;
  /// Unimodular with lambda^2 = c, when it exists in Q(i).
  std::optional<GaussianRational> lambda;
  /// A scalar s with s F real, always available when the test succeeds.
  std::optional<GaussianRational> real_scale;
  std::string note;
};

RealityResult conj_reality_test(const BiPoly& F);

/// Numerator of G(T(x), T(y)) with T(z) = i(1+z)/(1-z), normalized.
BiPoly cayley_substitute(const BiPoly& G);
/// Numerator of G(zeta T^-1(x), zeta T^-1(y)) with T^-1(x) = (x-i)/(x+i),
/// normalized. For zeta = 1 or -1, real points of the result correspond to
/// unimodular points of G other than those with a coordinate equal to zeta.
BiPoly inverse_cayley_substitute(const BiPoly& G, int zeta = 1);

/// conj(F)(1/x, 1/y) cleared by x^deg_x y^deg_y.
BiPoly circle_reflect(const BiPoly& F);

enum class CurveVerdict { FINITE_BOUNDED, INFINITE_UNIMODULAR };

struct CurvePoint {
  ComplexBall x;
  ComplexBall y;
  bool newton_certified = false;
  bool exact = false;
};

/// Certified simple real point in a Cayley chart and its image on the curve.
struct ChartPoint {
  int zeta = 1;
  SimpleRealPoint real_point;
  ComplexBall x;
  ComplexBall y;
};

struct CurveReport {
  CurveVerdict verdict = CurveVerdict::FINITE_BOUNDED;
  int bound = 0;
  /// Reality of the inverse Cayley image in the chart zeta = 1.
  RealityResult reality;
  BiPoly cayley;
  std::optional<ChartPoint> simple_point;
  std::vector<CurvePoint> points;
  bool assumed_irreducible = true;
};

/// Decides whether the curve has infinitely many unimodular points and,
/// when not, encloses all of them. SharedComponentUnresolved when F and its
/// circle reflection share a component without a certified real point.
CurveReport analyze_unimodular(const PlaneCurve& c, const SolverConfig& config = {});

/// (d-1)(d-2)/2 for d >= 1.
long max_singular_points(int d);

/// Generator W of Q(i)(P1, P2), normalized with monic numerator and, for
/// polynomials, no constant term. BothConstant when both inputs are constant.
RatFun luroth_generator(const RatFun& p1, const RatFun& p2);

/// Q with Q o W = P exactly. NotAFactor when none exists.
RatFun left_compose_factor(const RatFun& p, const RatFun& w);

}  // namespace unimod

#endif  // UNIMOD_CURVELAB_HPP
