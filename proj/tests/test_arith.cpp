#include "doctest.h"
#include "test_support.hpp"
#include "unimod/arith.hpp"
#include "unimod/error.hpp"

using namespace unimod;
using unimod::testing::gq;

TEST_CASE("gr_arith examples") {
  CHECK(gr_arith(gq(1, 1, 1), gq(1, 1, -1), ArithOp::mul) == GaussianRational(2));
  const auto u = gq(3, 5, 4, 5);
  CHECK(gr_arith(u, u, ArithOp::div) == GaussianRational(1));
  CHECK(gr_arith(gq(1, 1, 2), gq(3, 1, -2), ArithOp::add) == GaussianRational(4));
  CHECK(gr_arith(gq(1, 1, 2), gq(1, 1, 2), ArithOp::sub).is_zero());
}

TEST_CASE("division by zero is reported") {
  CHECK_THROWS_AS(gr_arith(gq(1), GaussianRational(), ArithOp::div), Error);
  try {
    gr_arith(gq(1), GaussianRational(), ArithOp::div);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DivisionByZero);
  }
}

TEST_CASE("gr_conj and gr_norm") {
  CHECK(gr_conj(gq(3, 5, 4, 5)) == gq(3, 5, -4, 5));
  CHECK(gr_conj(gq(7)) == gq(7));
  CHECK(gr_conj(GaussianRational::i()) == -GaussianRational::i());
  CHECK(gr_norm(gq(3, 5, 4, 5)) == 1);
  CHECK(gr_norm(gq(1, 1, 1)) == 2);
  CHECK(gr_norm(GaussianRational()) == 0);
}

TEST_CASE("field axioms and norm multiplicativity on random triples") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    auto a = unimod::testing::random_gaussian(rng);
    auto b = unimod::testing::random_gaussian(rng);
    auto c = unimod::testing::random_gaussian(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(gr_conj(gr_conj(a)) == a);
    CHECK(gr_norm(a * b) == gr_norm(a) * gr_norm(b));
    if (!a.is_zero()) CHECK(a * (GaussianRational(1) / a) == GaussianRational(1));
  }
}

TEST_CASE("gr_sqrt finds unimodular square roots") {
  GaussianRational r;
  REQUIRE(gr_sqrt(GaussianRational(-1), r));
  CHECK(r == GaussianRational::i());
  REQUIRE(gr_sqrt(gq(-7, 25, 24, 25), r));  // ((3+4i)/5)^2
  CHECK(r == gq(3, 5, 4, 5));
  CHECK_FALSE(gr_sqrt(GaussianRational::i(), r));
  CHECK_FALSE(gr_sqrt(GaussianRational(2), r));
}

TEST_CASE("text form round trips") {
  for (const char* text : {"3/5+4/5*i", "-2", "i", "-i", "4/5*i", "3/5-4/5*i", "0", "1+i"}) {
    CHECK(to_string(parse_gaussian(text)) == text);
  }
  CHECK(parse_gaussian(" 3/5 + 4/5*i ") == gq(3, 5, 4, 5));
  CHECK(parse_gaussian("-i") == -GaussianRational::i());
  CHECK_THROWS_AS(parse_gaussian("3/0"), ParseError);
  CHECK_THROWS_AS(parse_gaussian("3 4"), ParseError);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = unimod::testing::random_gaussian(rng, 40, 30);
    CHECK(parse_gaussian(to_string(a)) == a);
  }
}

TEST_CASE("to_ball examples") {
  auto third = to_ball(gq(1, 3), 64);
  CHECK(third.contains(gq(1, 3)));
  CHECK(third.radius_double() <= std::ldexp(1.0, -63) * (4.0 / 3.0));
  CHECK(to_ball(GaussianRational(), 17).is_exact());
  auto i_ball = to_ball(GaussianRational::i(), 128);
  CHECK(i_ball.is_exact());
  CHECK(i_ball.center_re() == 0.0);
  CHECK(i_ball.center_im() == 1.0);
}

TEST_CASE("to_ball containment and monotone radius") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = unimod::testing::random_gaussian(rng, 1000, 997);
    for (mpfr_prec_t p : {2, 8, 53, 64, 200}) {
      auto ball = to_ball(a, p);
      CHECK(ball.contains(a));
      auto finer = to_ball(a, 2 * p);
      CHECK(finer.contains(a));
      CHECK(mpfr_cmp(finer.radius().get(), ball.radius().get()) <= 0);
      const double bound = std::ldexp(1.0, 1 - static_cast<int>(p)) * (1.0 + std::sqrt(gr_norm(a).get_d()));
      CHECK(ball.radius_double() <= bound);
    }
  }
}

TEST_CASE("ball arithmetic encloses exact results") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    auto a = unimod::testing::random_gaussian(rng, 50, 7);
    auto b = unimod::testing::random_gaussian(rng, 50, 7);
    if (b.is_zero()) continue;
    const mpfr_prec_t p = 24 + trial % 80;
    auto ba = to_ball(a, p), bb = to_ball(b, p);
    CHECK((ba + bb).contains(a + b));
    CHECK((ba - bb).contains(a - b));
    CHECK((ba * bb).contains(a * b));
    CHECK((ba / bb).contains(a / b));
  }
}

TEST_CASE("ball inverse refuses balls around zero") {
  ComplexBall around_zero(Float(0.01, 64), Float(64), Float(0.1, 64));
  CHECK(around_zero.contains_zero());
  CHECK_THROWS_AS(inverse(around_zero), Error);
}
