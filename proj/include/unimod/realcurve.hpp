#ifndef UNIMOD_REALCURVE_HPP
#define UNIMOD_REALCURVE_HPP

#include <vector>

#include "unimod/bi_poly.hpp"

namespace unimod {

/// Budget for the simple-real-point search; levelsolver and curvelab share it.
struct SearchConfig {
  int grid = 64;
  /// Bisection stops once intervals are narrower than 2^-refine_bits.
  int refine_bits = 100;
};

/// A certified simple real point of g: on the axis-parallel line through the
/// exact coordinate, g changes sign across [lo, hi] and the partial
/// derivative along the line has no zero there, so the box holds exactly one
/// zero and the gradient does not vanish at it.
struct SimpleRealPoint {
  BigRational x_lo, x_hi;
  BigRational y_lo, y_hi;

  BigRational x_mid() const { return (x_lo + x_hi) / 2; }
  BigRational y_mid() const { return (y_lo + y_hi) / 2; }
};

/// g(x + iy, x - iy) for G in (z, w); coefficients are real when G is
/// sigma-invariant. Result variables are (x, y).
BiPoly realify(const BiPoly& g);

/// True iff every coefficient has zero imaginary part.
bool has_real_coefficients(const BiPoly& p);

/// Product of the distinct factors of p, p / gcd(p, p_x, p_y).
BiPoly squarefree_part(const BiPoly& p);

/// Half-width of the search square: 1 + larger Cauchy bound of g(x, 0) and
/// g(0, y), clipped to [2, 64].
BigRational search_radius(const BiPoly& g);

/// Scans horizontal then vertical grid lines of [-R, R]^2 for sign changes of
/// the real polynomial g and certifies up to `max_points` simple real points
/// on distinct lines. g must have real coefficients.
std::vector<SimpleRealPoint> find_simple_real_points(const BiPoly& g, const SearchConfig& config,
                                                     std::size_t max_points = 1);

/// Ball around the point, centred at the box midpoint.
ComplexBall to_ball(const SimpleRealPoint& p, mpfr_prec_t precision_bits);

}  // namespace unimod

#endif  // UNIMOD_REALCURVE_HPP
