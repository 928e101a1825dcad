#include "unimod/report.hpp"

#include <cmath>

namespace unimod {

namespace {

using nlohmann::json;

BigRational pow10(long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(e)));
  return e >= 0 ? BigRational(p) : BigRational(mpz_class(1), p);
}

// Scientific decimal text for v and its exact value.
std::string decimal_text(const Float& v, int digits, BigRational& value) {
  if (v.is_zero()) {
    value = 0;
    return "0";
  }
  mpfr_exp_t exp = 0;
  char* raw = mpfr_get_str(nullptr, &exp, 10, static_cast<std::size_t>(digits), v.get(), MPFR_RNDN);
  std::string mant(raw);
  mpfr_free_str(raw);
  const bool negative = mant[0] == '-';
  if (negative) mant.erase(0, 1);
  const mpz_class m(mant);
  value = BigRational(m) * pow10(static_cast<long>(exp) - static_cast<long>(mant.size()));
  if (negative) value = -value;
  std::string out = negative ? "-" : "";
  out += mant.substr(0, 1);
  if (mant.size() > 1) out += "." + mant.substr(1);
  out += "e" + std::to_string(static_cast<long>(exp) - 1);
  return out;
}

double round_up(const BigRational& q) {
  Float f(53);
  mpfr_set_q(f.get(), q.get_mpq_t(), MPFR_RNDU);
  return f.to_double();
}

json opt_string(const std::optional<GaussianRational>& v) { return v ? json(to_string(*v)) : json(nullptr); }

json ratfun_json(const RatFun& r) { return to_string(r); }

}  // namespace

json ball_json(const ComplexBall& b) {
  const BigRational re = b.re().to_rational(), im = b.im().to_rational(), rad = b.radius().to_rational();
  const double re_d = b.re().to_double(), im_d = b.im().to_double();
  const BigRational err = abs(re - BigRational(re_d)) + abs(im - BigRational(im_d));
  const int digits = static_cast<int>(std::ceil(static_cast<double>(b.precision()) * 0.30103)) + 2;
  BigRational re_q, im_q;
  const std::string re_text = decimal_text(b.re(), digits, re_q), im_text = decimal_text(b.im(), digits, im_q);
  const BigRational text_err = abs(re - re_q) + abs(im - im_q);
  return json{{"re", re_d},
              {"im", im_d},
              {"radius", round_up(rad + err)},
              {"precise", {{"re", re_text}, {"im", im_text}, {"radius", round_up(rad + text_err)}}}};
}

const char* to_string(SolveStatus s) { return s == SolveStatus::FINITE ? "FINITE" : "DEGENERATE"; }

const char* to_string(CurveVerdict v) {
  return v == CurveVerdict::FINITE_BOUNDED ? "FINITE_BOUNDED" : "INFINITE_UNIMODULAR";
}

const char* to_string(DependenceKind k) {
  switch (k) {
    case DependenceKind::INDEPENDENT:
      return "INDEPENDENT";
    case DependenceKind::DEPENDENT:
      return "DEPENDENT";
    case DependenceKind::INCONCLUSIVE:
      return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

json to_json(const DegeneracyWitness& w) {
  return json{{"W", ratfun_json(w.W)},
              {"Q1", ratfun_json(w.Q1)},
              {"Q2", ratfun_json(w.Q2)},
              {"mobius", ratfun_json(w.mobius)},
              {"residual", w.residual}};
}

json to_json(const SolutionReport& r) {
  json points = json::array(), residuals = json::array(), trace = json::array();
  for (const auto& p : r.points) {
    json pj = ball_json(p.z);
    pj["newton_certified"] = p.newton_certified;
    pj["exact"] = p.exact;
    pj["residuals"] = json::array({ball_json(p.residual1), ball_json(p.residual2)});
    points.push_back(pj);
    residuals.push_back(json::array({p.residual1.mag().to_double(), p.residual2.mag().to_double()}));
  }
  for (const auto& t : r.trace_points) trace.push_back(ball_json(t));
  return json{{"status", to_string(r.status)},
              {"bound", r.bound},
              {"points", points},
              {"residuals", residuals},
              {"shared_component", r.shared_component ? json(to_string(*r.shared_component)) : json(nullptr)},
              {"witness", r.witness ? to_json(*r.witness) : json(nullptr)},
              {"witness_error", r.witness_error.empty() ? json(nullptr) : json(r.witness_error)},
              {"trace_points", trace}};
}

json to_json(const RealityResult& r) {
  return json{{"is_real_up_to_scalar", r.is_real_up_to_scalar},
              {"c", opt_string(r.c)},
              {"lambda", opt_string(r.lambda)},
              {"real_scale", opt_string(r.real_scale)},
              {"note", r.note.empty() ? json(nullptr) : json(r.note)}};
}

json to_json(const CurveReport& r) {
  json points = json::array();
  for (const auto& p : r.points) {
    points.push_back(json{{"x", ball_json(p.x)},
                          {"y", ball_json(p.y)},
                          {"newton_certified", p.newton_certified},
                          {"exact", p.exact}});
  }
  json simple = nullptr;
  if (r.simple_point) {
    const auto& sp = *r.simple_point;
    simple = json{{"zeta", sp.zeta},
                  {"s_interval", {to_string(sp.real_point.x_lo), to_string(sp.real_point.x_hi)}},
                  {"t_interval", {to_string(sp.real_point.y_lo), to_string(sp.real_point.y_hi)}},
                  {"x", ball_json(sp.x)},
                  {"y", ball_json(sp.y)}};
  }
  return json{{"verdict", to_string(r.verdict)},
              {"bound", r.bound},
              {"reality", to_json(r.reality)},
              {"cayley", to_string(r.cayley)},
              {"simple_point", simple},
              {"points", points},
              {"assumed_irreducible", r.assumed_irreducible}};
}

json to_json(const ARReport& r) {
  json table = json::array();
  for (const auto& row : r.table) table.push_back(json{{"k", row.k}, {"gcd", to_string(row.gcd)}});
  return json{{"table", table},
              {"stabilized_F", to_string(r.stabilized_F)},
              {"stabilized_at", r.stabilized_at ? json(*r.stabilized_at) : json(nullptr)},
              {"consistency", r.consistency}};
}

json to_json(const DependenceCertificate& c) {
  json out{{"kind", to_string(c.kind)}};
  if (c.kind == DependenceKind::DEPENDENT) {
    out["m1"] = c.m1;
    out["m2"] = c.m2;
  }
  return out;
}

json to_json(const BlaschkeForm& f) {
  json factors = json::array();
  for (const auto& fac : f.factors) {
    factors.push_back(json{{"zero", ball_json(fac.zero)}, {"multiplicity", fac.multiplicity}, {"inside", fac.inside}});
  }
  return json{{"unimodular_constant", ball_json(f.unimodular_constant)}, {"factors", factors}};
}

json error_json(ErrorKind kind, const std::string& message) {
  return json{{"error", to_string(kind)}, {"message", message}};
}

}  // namespace unimod
