#include "doctest.h"
#include "test_support.hpp"
#include "unimod/error.hpp"
#include "unimod/expr.hpp"
#include "unimod/ratfun.hpp"

using namespace unimod;
using unimod::testing::gq;

namespace {

const GaussianRational I = GaussianRational::i();

UniPoly z() { return UniPoly::identity(); }

RatFun random_ratfun(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  UniPoly num = unimod::testing::random_poly(rng, deg(rng), 3, 2);
  UniPoly den = unimod::testing::random_poly(rng, deg(rng), 3, 2);
  return rf_make(num, den);
}

}  // namespace

TEST_CASE("rf_make examples") {
  RatFun a = rf_make(UniPoly({-1, 0, 1}), UniPoly({-1, 1}));
  CHECK(a.num() == UniPoly({1, 1}));
  CHECK(a.den() == UniPoly::constant(1));
  RatFun b = rf_make(UniPoly({0, 2}), UniPoly::constant(2));
  CHECK(b == RatFun(z()));
  RatFun c = rf_make(z(), UniPoly({I, I}));
  CHECK(c.num() == UniPoly({0, -I}));
  CHECK(c.den() == UniPoly({1, 1}));
  CHECK(rf_make(UniPoly(), UniPoly({3, 1})) == RatFun());
  CHECK(RatFun().den() == UniPoly::constant(1));
  CHECK_THROWS_AS(rf_make(z(), UniPoly()), Error);
}

TEST_CASE("rf_degree examples") {
  CHECK(rf_degree(rf_make(UniPoly({1, 0, 0, 1}), UniPoly({-2, 1}))) == 3);
  CHECK(rf_degree(rf_make(UniPoly::constant(1), UniPoly({0, 0, 1}))) == 2);
  CHECK(rf_degree(RatFun(GaussianRational(5))) == 0);
  CHECK(rf_degree(RatFun()) == 0);
}

TEST_CASE("rf_compose examples") {
  RatFun z2(UniPoly({0, 0, 1}));
  RatFun mob = rf_make(UniPoly({1, 1}), UniPoly({-1, 1}));
  CHECK(rf_compose(z2, mob) == rf_make(UniPoly({1, 2, 1}), UniPoly({1, -2, 1})));
  RatFun factor = rf_make(UniPoly({gq(-1, 2), 1}), UniPoly({1, gq(-1, 2)}));
  CHECK(rf_compose(factor, z2) == rf_make(UniPoly({gq(-1, 2), 0, 1}), UniPoly({1, 0, gq(-1, 2)})));
  CHECK(rf_compose(RatFun(z()), mob) == mob);
  CHECK(rf_compose(RatFun(GaussianRational(7)), mob) == RatFun(GaussianRational(7)));
  CHECK(rf_compose(mob, RatFun(GaussianRational(3))) == RatFun(GaussianRational(2)));
}

TEST_CASE("rf_compose is associative and multiplies degrees") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    RatFun a = random_ratfun(rng, 2), b = random_ratfun(rng, 2), c = random_ratfun(rng, 2);
    CHECK(rf_compose(rf_compose(a, b), c) == rf_compose(a, rf_compose(b, c)));
    if (rf_degree(a) > 0 && rf_degree(b) > 0) CHECK(rf_degree(rf_compose(a, b)) == rf_degree(a) * rf_degree(b));
    // Pointwise agreement away from poles.
    GaussianRational p = unimod::testing::random_gaussian(rng, 7, 5);
    try {
      GaussianRational inner = rf_eval(b, p);
      CHECK(rf_eval(rf_compose(a, b), p) == rf_eval(a, inner));
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::PoleInBall);
    }
  }
}

TEST_CASE("cayley_conjugate examples") {
  CHECK(cayley_conjugate(RatFun(z())) == RatFun(z()));
  CHECK(cayley_conjugate(rf_make(UniPoly::constant(1), z())) == RatFun(UniPoly({0, -1})));
  CHECK(cayley_conjugate(RatFun(I)) == RatFun(GaussianRational(-1)));
  CHECK(rf_compose(cayley_map(), inverse_cayley_map()) == RatFun(z()));
  CHECK_THROWS_AS(cayley_conjugate(RatFun(GaussianRational(1))), Error);
}

TEST_CASE("cayley_conjugate is a homomorphism with an exact inverse") {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    RatFun a = random_ratfun(rng, 2), b = random_ratfun(rng, 2);
    if (rf_degree(a) == 0 || rf_degree(b) == 0) continue;
    CHECK(cayley_conjugate(rf_compose(a, b)) == rf_compose(cayley_conjugate(a), cayley_conjugate(b)));
    CHECK(cayley_unconjugate(cayley_conjugate(a)) == a);
    CHECK(rf_degree(cayley_conjugate(a)) == rf_degree(a));
  }
}

TEST_CASE("rf_is_real_up_to_reduction examples") {
  CHECK(rf_is_real_up_to_reduction(rf_make(UniPoly({1, 0, 1}), UniPoly({3, 1}))));
  CHECK_FALSE(rf_is_real_up_to_reduction(RatFun(UniPoly({0, I}))));
  CHECK(rf_is_real_up_to_reduction(rf_make(UniPoly({0, gq(1, 1, 1)}), UniPoly::constant(gq(1, 1, 1)))));
}

TEST_CASE("rf_eval_ball examples") {
  ComplexBall v = rf_eval_ball(RatFun(UniPoly({0, 0, 1})), to_ball(gq(1, 1, 1), 128));
  CHECK(v.is_exact());
  CHECK(v.contains(gq(0, 1, 2)));
  ComplexBall near_zero(Float(128), Float(128), Float(0.1, 64));
  CHECK_THROWS_AS(rf_eval_ball(rf_make(UniPoly::constant(1), z()), near_zero), Error);
  ComplexBall w = rf_eval_ball(RatFun(UniPoly({2, 1})), to_ball(GaussianRational(-1), 128));
  CHECK(w.is_exact());
  CHECK(w.contains(GaussianRational(1)));
}

TEST_CASE("rf_eval_ball encloses exact values") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    RatFun f = random_ratfun(rng, 3);
    GaussianRational p = unimod::testing::random_gaussian(rng, 9, 7);
    if (f.den().eval(p).is_zero()) continue;
    CHECK(rf_eval_ball(f, to_ball(p, 80)).contains(rf_eval(f, p)));
  }
}

TEST_CASE("parse examples") {
  RatFun r = parse_ratfun("(z^2 - 1/2) / (1 - 1/2*z^2)");
  CHECK(r == rf_make(UniPoly({gq(-1, 2), 0, 1}), UniPoly({1, 0, gq(-1, 2)})));
  CHECK(parse_ratfun("3/5 + 4/5*i") == RatFun(gq(3, 5, 4, 5)));
  try {
    parse_ratfun("z + + 1");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 4);
    CHECK(e.kind() == ErrorKind::ParseError);
  }
  CHECK(parse_ratfun("-z^2") == RatFun(UniPoly({0, 0, -1})));
  CHECK(parse_ratfun("(-(z+1))^2") == RatFun(UniPoly({1, 2, 1})));
  CHECK(parse_ratfun("i^2") == RatFun(GaussianRational(-1)));
  CHECK(parse_polynomial("z^6 - 1") == UniPoly({-1, 0, 0, 0, 0, 0, 1}));
  CHECK(parse_bipoly("x*y - 1") == BiPoly::monomial(1, 1, 1, {'x', 'y'}) - BiPoly::constant(1, {'x', 'y'}));
}

TEST_CASE("parse errors carry kind and offset") {
  auto kind_of = [](auto&& fn) {
    try {
      fn();
    } catch (const ParseError& e) {
      return std::make_pair(e.kind(), e.offset());
    }
    return std::make_pair(ErrorKind::DivisionByZero, std::size_t{999});
  };
  CHECK(kind_of([] { parse_ratfun("x + 1"); }) == std::make_pair(ErrorKind::WrongVariable, std::size_t{0}));
  CHECK(kind_of([] { parse_ratfun("z + 0.5"); }) == std::make_pair(ErrorKind::NonGaussianCoefficient, std::size_t{4}));
  CHECK(kind_of([] { parse_ratfun("2*pi*z"); }) == std::make_pair(ErrorKind::NonGaussianCoefficient, std::size_t{2}));
  CHECK(kind_of([] { parse_ratfun("z^-1"); }).first == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_ratfun("(z+1"); }).first == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_ratfun("1/(z-z)"); }).first == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_ratfun(""); }).first == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_polynomial("1/z"); }).first == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_bipoly("x/y"); }).first == ErrorKind::ParseError);
  CHECK(kind_of([] { parse_bipoly("x*z"); }) == std::make_pair(ErrorKind::WrongVariable, std::size_t{2}));
}

TEST_CASE("print then parse round trips") {
  std::mt19937 rng(59);
  for (int trial = 0; trial < 100; ++trial) {
    RatFun f = random_ratfun(rng, 4);
    CHECK(parse_ratfun(to_string(f)) == f);
  }
  for (const char* text : {"z", "z^2+z+1", "(z-1/2)/(-1/2*z+1)", "i*z", "(3/5+4/5*i)*z^3", "1/z", "7"}) {
    RatFun f = parse_ratfun(text);
    CHECK(parse_ratfun(to_string(f)) == f);
  }
  CHECK(to_string(parse_ratfun("1/z")) == "(1)/(z)");
}
