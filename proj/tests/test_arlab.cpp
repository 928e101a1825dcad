#include "doctest.h"
#include "test_support.hpp"
#include "unimod/arlab.hpp"
#include "unimod/error.hpp"
#include "unimod/expr.hpp"
#include "unimod/ratfun.hpp"

using namespace unimod;
using unimod::testing::gq;

namespace {

UniPoly up(const char* text) { return parse_polynomial(text); }

ErrorKind error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InternalDisagreement;
}

// Schoolbook remainder sequence on coefficient vectors, made monic at the end.
UniPoly euclid_oracle(std::vector<GaussianRational> a, std::vector<GaussianRational> b) {
  auto trim = [](std::vector<GaussianRational>& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    while (a.size() >= b.size() && !a.empty()) {
      const GaussianRational f = a.back() / b.back();
      const std::size_t shift = a.size() - b.size();
      for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] = a[shift + k] - f * b[k];
      trim(a);
    }
    std::swap(a, b);
  }
  const GaussianRational lead = a.back();
  for (auto& c : a) c = c / lead;
  return UniPoly(a);
}

UniPoly power_minus_one(const UniPoly& p, int k) { return pow(p, static_cast<unsigned>(k)) - UniPoly::constant(1); }

RatFun rf_power(const UniPoly& p, long m) {
  RatFun base = m >= 0 ? RatFun(p) : RatFun(GaussianRational(1)) / RatFun(p);
  RatFun out(GaussianRational(1));
  for (long k = 0; k < std::labs(m); ++k) out = out * base;
  return out;
}

}  // namespace

TEST_CASE("gcd_power_shift examples") {
  // Common roots of z^k = (z+1)^k = 1 are the primitive cube roots of unity,
  // and they qualify exactly when 6 divides k.
  for (int k = 1; k <= 12; ++k) {
    const UniPoly g = gcd_power_shift(up("z"), up("z + 1"), k);
    CHECK(g == (k % 6 == 0 ? up("z^2 + z + 1") : up("1")));
  }
  for (int k = 1; k <= 5; ++k) {
    CHECK(gcd_power_shift(up("z^2"), up("z^4"), k) == power_minus_one(up("z^2"), k));
  }
  CHECK(error_of([] { gcd_power_shift(up("3"), up("z"), 2); }) == ErrorKind::ConstantInput);
}

TEST_CASE("gcd_power_shift matches a schoolbook Euclid oracle") {
  std::mt19937 rng(3);
  const std::vector<GaussianRational> units{gq(1), gq(-1), gq(0, 1, 1, 1), gq(0, 1, -1, 1)};
  for (int trial = 0; trial < 20; ++trial) {
    const UniPoly p1 = pow(up("z"), 1 + trial % 3) * units[static_cast<std::size_t>(trial % 4)];
    const UniPoly p2 = pow(up("z + 1"), 1 + (trial / 3) % 3);
    const int k = 1 + trial % 12;
    CHECK(gcd_power_shift(p1, p2, k) == euclid_oracle(power_minus_one(p1, k).coefficients(),
                                                      power_minus_one(p2, k).coefficients()));
  }
}

TEST_CASE("ar_accumulate examples") {
  ARReport r = ar_accumulate(up("z"), up("z + 1"), 12);
  REQUIRE(r.table.size() == 12);
  for (const auto& row : r.table) CHECK(row.gcd == (row.k == 6 || row.k == 12 ? up("z^2 + z + 1") : up("1")));
  CHECK(r.stabilized_F == up("z^2 + z + 1"));
  CHECK(r.stabilized_at == 6);
  CHECK(r.consistency);

  r = ar_accumulate(up("z"), up("z + 3"), 12);
  for (const auto& row : r.table) CHECK(row.gcd == up("1"));
  CHECK(r.stabilized_F == up("1"));
  CHECK(r.consistency);

  r = ar_accumulate(up("z^2"), up("(z + 1)^2"), 12);
  CHECK(divides(up("z^2 + z + 1"), r.stabilized_F));
  CHECK(r.stabilized_at == 3);
  CHECK(r.consistency);

  CHECK(error_of([] { ar_accumulate(up("z"), up("z + 1"), 6); }) == ErrorKind::HorizonTooSmall);
  CHECK(error_of([] { ar_accumulate(up("z^2"), up("z^3"), 6); }) == ErrorKind::DependentInputs);
}

TEST_CASE("every gcd divides the stabilized divisor and its roots are unimodular for both maps") {
  const std::vector<GaussianRational> units{gq(1), gq(-1), gq(0, 1, 1, 1), gq(0, 1, -1, 1)};
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      const UniPoly p1 = pow(up("z"), a) * units[static_cast<std::size_t>((a + b) % 4)];
      const UniPoly p2 = pow(up("z + 1"), b);
      const ARReport r = ar_accumulate(p1, p2, 24);
      for (int k = 1; k <= 20; ++k) CHECK(divides(gcd_power_shift(p1, p2, k), r.stabilized_F));
      CHECK(r.consistency);
      if (r.stabilized_F.is_constant()) continue;
      for (const auto& root : certified_roots(r.stabilized_F)) {
        CHECK(unit_deviation(p1.eval(root.location)) < 1e-20);
        CHECK(unit_deviation(p2.eval(root.location)) < 1e-20);
      }
    }
  }
}

TEST_CASE("multiplicity_profile examples and the multiplicity bound") {
  CHECK(multiplicity_profile(up("(z - 1)^3")) == std::map<int, int>{{3, 1}});
  CHECK(multiplicity_profile(up("z^2 - 1")) == std::map<int, int>{{1, 2}});
  CHECK(multiplicity_profile(up("(z^2 - 2*z + 1)*(z + 2)")) == std::map<int, int>{{1, 1}, {2, 1}});
  CHECK(error_of([] { multiplicity_profile(UniPoly()); }) == ErrorKind::ZeroPolynomial);

  std::mt19937 rng(19);
  for (int trial = 0; trial < 30; ++trial) {
    const UniPoly p = unimod::testing::random_poly(rng, 1 + trial % 4, 2, 2);
    const int k = 1 + trial % 10;
    for (const auto& [m, d] : multiplicity_profile(power_minus_one(p, k))) CHECK(m <= p.degree());
  }
  // Equality in the bound: P = z^2 - 2z has P - (-1) = (z - 1)^2.
  CHECK(multiplicity_profile(power_minus_one(up("z^2 - 2*z"), 2)).count(2) == 1);
}

TEST_CASE("mult_independence examples") {
  DependenceCertificate c = mult_independence(up("z^2"), up("z^3"));
  CHECK(c.kind == DependenceKind::DEPENDENT);
  CHECK(c.m1 == 3);
  CHECK(c.m2 == -2);
  CHECK(mult_independence(up("z"), up("z + 1")).kind == DependenceKind::INDEPENDENT);
  c = mult_independence(up("2*z"), up("2*z"));
  CHECK(c.kind == DependenceKind::DEPENDENT);
  CHECK(c.m1 == 1);
  CHECK(c.m2 == -1);
  // (iz)^4 z^-4 = 1 is the smallest relation.
  c = mult_independence(up("i*z"), up("z"));
  CHECK(c.kind == DependenceKind::DEPENDENT);
  CHECK(c.m1 == 4);
  CHECK(c.m2 == -4);
  CHECK(mult_independence(up("2*z"), up("z")).kind == DependenceKind::INDEPENDENT);
  c = mult_independence(up("i"), up("z"));
  CHECK(c.kind == DependenceKind::DEPENDENT);
  CHECK(c.m1 == 4);
  CHECK(c.m2 == 0);
  c = mult_independence(up("2"), up("4"));
  CHECK(c.kind == DependenceKind::DEPENDENT);
  CHECK(c.m1 == 2);
  CHECK(c.m2 == -1);
  CHECK(mult_independence(up("2"), up("3")).kind == DependenceKind::INCONCLUSIVE);
  CHECK(error_of([] { mult_independence(UniPoly(), up("z")); }) == ErrorKind::ZeroInput);
}

TEST_CASE("dependence certificates expand to 1") {
  std::mt19937 rng(23);
  const std::vector<GaussianRational> units{gq(1), gq(-1), gq(0, 1, 1, 1), gq(0, 1, -1, 1)};
  for (int trial = 0; trial < 20; ++trial) {
    const UniPoly q = unimod::testing::random_poly(rng, 1 + trial % 2, 3, 1);
    const int a = 1 + trial % 3, b = 1 + (trial / 3) % 3;
    const GaussianRational c = units[static_cast<std::size_t>(trial % 4)];
    // (c q^a)^b and q^(ab) differ by a root of unity.
    const UniPoly p1 = pow(q, static_cast<unsigned>(a)) * c, p2 = pow(q, static_cast<unsigned>(b));
    const DependenceCertificate cert = mult_independence(p1, p2);
    REQUIRE(cert.kind == DependenceKind::DEPENDENT);
    CHECK(rf_power(p1, cert.m1) * rf_power(p2, cert.m2) == RatFun(GaussianRational(1)));
  }
}

TEST_CASE("coprime basis reconstructs its inputs") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    const UniPoly f = unimod::testing::random_poly(rng, 1, 3, 1), g = unimod::testing::random_poly(rng, 2, 3, 1);
    const UniPoly p1 = f * f * g, p2 = g * unimod::testing::random_poly(rng, 1, 3, 1);
    const CoprimeBasis cb = coprime_basis({p1, p2});
    for (std::size_t i = 0; i < cb.basis.size(); ++i) {
      for (std::size_t j = i + 1; j < cb.basis.size(); ++j) CHECK(uni_gcd(cb.basis[i], cb.basis[j]).is_constant());
    }
    const std::vector<UniPoly> inputs{p1, p2};
    for (std::size_t k = 0; k < 2; ++k) {
      UniPoly prod = UniPoly::constant(cb.constants[k]);
      for (std::size_t j = 0; j < cb.basis.size(); ++j) prod = prod * pow(cb.basis[j], static_cast<unsigned>(cb.exponents[k][j]));
      CHECK(prod == inputs[k]);
    }
  }
}
