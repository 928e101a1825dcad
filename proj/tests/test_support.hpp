#ifndef UNIMOD_TEST_SUPPORT_HPP
#define UNIMOD_TEST_SUPPORT_HPP

#include <random>
#include <vector>

#include "unimod/arith.hpp"
#include "unimod/ratfun.hpp"
#include "unimod/uni_poly.hpp"

namespace unimod::testing {

inline GaussianRational gq(long re_num, long re_den = 1, long im_num = 0, long im_den = 1) {
  BigRational re(re_num, re_den), im(im_num, im_den);
  re.canonicalize();
  im.canonicalize();
  return {re, im};
}

inline GaussianRational random_gaussian(std::mt19937& rng, int height = 5, int max_den = 4) {
  std::uniform_int_distribution<int> num(-height, height), den(1, max_den);
  BigRational re(num(rng), den(rng)), im(num(rng), den(rng));
  re.canonicalize();
  im.canonicalize();
  return {re, im};
}

inline GaussianRational random_gaussian_integer(std::mt19937& rng, int height) {
  std::uniform_int_distribution<int> num(-height, height);
  return {BigRational(num(rng)), BigRational(num(rng))};
}

inline UniPoly random_poly(std::mt19937& rng, int degree, int height = 5, int max_den = 4) {
  std::vector<GaussianRational> c;
  for (int k = 0; k <= degree; ++k) c.push_back(random_gaussian(rng, height, max_den));
  while (c.back().is_zero()) c.back() = random_gaussian(rng, height, max_den);
  return UniPoly(std::move(c));
}

/// Random rational function of exact degree `degree`; polynomial when `den_degree` is 0.
inline RatFun random_ratfun(std::mt19937& rng, int degree, int den_degree, int height = 3, int max_den = 2) {
  while (true) {
    RatFun r = rf_make(random_poly(rng, degree, height, max_den), random_poly(rng, den_degree, height, max_den));
    if (rf_degree(r) == degree) return r;
  }
}

}  // namespace unimod::testing

#endif
