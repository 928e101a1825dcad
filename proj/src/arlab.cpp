#include "unimod/arlab.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "unimod/error.hpp"
#include "unimod/levelsolver.hpp"

namespace unimod {

namespace {

// Order of a root of unity in Q(i) (1, 2 or 4), or 0.
long root_of_unity_order(const GaussianRational& c) {
  for (long k : {1L, 2L, 4L}) {
    if (gr_pow(c, k) == GaussianRational(1)) return k;
  }
  return 0;
}

// Relation with the sign convention m1 > 0, or m1 = 0 < m2.
DependenceCertificate dependent(long m1, long m2) {
  if (m1 < 0 || (m1 == 0 && m2 < 0)) {
    m1 = -m1;
    m2 = -m2;
  }
  return {DependenceKind::DEPENDENT, m1, m2};
}

bool consistent_with_solver(const UniPoly& p1, const UniPoly& p2, const UniPoly& f, const SolverConfig& config) {
  if (f.is_constant()) return true;
  const SolutionReport r = solve_unimodular_pair(RatFun(p1), RatFun(p2), config);
  if (r.status != SolveStatus::FINITE) return false;
  const mpfr_prec_t prec = std::min(config.precision_bits * 4, config.max_precision_bits);
  for (const auto& root : certified_roots(f, prec, config.max_precision_bits)) {
    bool inside = false;
    for (const auto& p : r.points) inside = inside || p.z.contains(root.location);
    if (!inside) return false;
  }
  return true;
}

}  // namespace

UniPoly gcd_power_shift(const UniPoly& p1, const UniPoly& p2, int k) {
  if (p1.is_constant() || p2.is_constant()) throw Error(ErrorKind::ConstantInput, "power gcd needs nonconstant inputs");
  if (k < 1) throw Error(ErrorKind::DegreeZero, "exponent must be positive");
  const UniPoly one = UniPoly::constant(1);
  return uni_gcd(pow(p1, static_cast<unsigned>(k)) - one, pow(p2, static_cast<unsigned>(k)) - one);
}

ARReport ar_accumulate(const UniPoly& p1, const UniPoly& p2, int max_k, const SolverConfig& config) {
  if (max_k < 1) throw Error(ErrorKind::DegreeZero, "horizon must be positive");
  if (mult_independence(p1, p2).kind != DependenceKind::INDEPENDENT) {
    throw Error(ErrorKind::DependentInputs, "inputs are not certified multiplicatively independent");
  }
  ARReport report;
  UniPoly running = UniPoly::constant(1);
  int last_change = 1;
  for (int k = 1; k <= max_k; ++k) {
    UniPoly g = gcd_power_shift(p1, p2, k);
    const UniPoly next = g.is_constant() ? running : squarefree_part(uni_lcm(running, g));
    if (!(next == running)) {
      last_change = k;
      running = next;
    }
    report.table.push_back({k, std::move(g)});
  }
  if (last_change == max_k && max_k > 1) {
    throw Error(ErrorKind::HorizonTooSmall, "common divisor still grows at k = " + std::to_string(max_k));
  }
  report.stabilized_F = running;
  report.stabilized_at = last_change;
  report.consistency = consistent_with_solver(p1, p2, running, config);
  return report;
}

CoprimeBasis coprime_basis(const std::vector<UniPoly>& polys) {
  CoprimeBasis out;
  std::vector<UniPoly> basis;
  for (const auto& p : polys) {
    if (p.is_zero()) throw Error(ErrorKind::ZeroInput, "zero polynomial");
    if (!p.is_constant()) basis.push_back(monic(p));
  }
  // Split any two elements with a common factor g into a/g, b/g, g.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < basis.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < basis.size() && !changed; ++j) {
        const UniPoly g = uni_gcd(basis[i], basis[j]);
        if (g.is_constant()) continue;
        const UniPoly a = exact_div(basis[i], g), b = exact_div(basis[j], g);
        basis.erase(basis.begin() + static_cast<long>(j));
        basis.erase(basis.begin() + static_cast<long>(i));
        for (const UniPoly* q : {&a, &b, &g}) {
          if (!q->is_constant()) basis.push_back(monic(*q));
        }
        changed = true;
      }
    }
  }
  out.basis = basis;
  for (const auto& p : polys) {
    UniPoly rest = p;
    std::vector<long> e(basis.size(), 0);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      while (!rest.is_constant() && divides(basis[j], rest)) {
        rest = exact_div(rest, basis[j]);
        ++e[j];
      }
    }
    if (!rest.is_constant()) throw Error(ErrorKind::InternalDisagreement, "input not covered by its coprime basis");
    out.exponents.push_back(std::move(e));
    out.constants.push_back(rest[0]);
  }
  return out;
}

DependenceCertificate mult_independence(const UniPoly& p1, const UniPoly& p2) {
  const CoprimeBasis cb = coprime_basis({p1, p2});
  const auto& e1 = cb.exponents[0];
  const auto& e2 = cb.exponents[1];
  const GaussianRational c1 = cb.constants[0], c2 = cb.constants[1];
  const bool z1 = std::all_of(e1.begin(), e1.end(), [](long v) { return v == 0; });
  const bool z2 = std::all_of(e2.begin(), e2.end(), [](long v) { return v == 0; });
  if (z1 && z2) {
    // Bounded search by height max(|m1|, |m2|) for c1^m1 c2^m2 = 1.
    for (long h = 1; h <= 64; ++h) {
      for (long m1 = 0; m1 <= h; ++m1) {
        for (long m2 = -h; m2 <= h; ++m2) {
          if (std::max(m1, std::labs(m2)) != h || (m1 == 0 && m2 <= 0)) continue;
          if (gr_pow(c1, m1) * gr_pow(c2, m2) == GaussianRational(1)) return dependent(m1, m2);
        }
      }
    }
    return {DependenceKind::INCONCLUSIVE, 0, 0};
  }
  if (z1 || z2) {
    const long order = root_of_unity_order(z1 ? c1 : c2);
    if (order == 0) return {};
    return z1 ? dependent(order, 0) : dependent(0, order);
  }
  // Both exponent vectors nonzero: a relation needs them to be parallel.
  std::size_t pivot = 0;
  while (e1[pivot] == 0) ++pivot;
  const long a = e1[pivot], b = e2[pivot];
  for (std::size_t j = 0; j < e1.size(); ++j) {
    if (e1[j] * b != e2[j] * a) return {};
  }
  if (b == 0) return {};
  const long g = std::gcd(std::labs(a), std::labs(b));
  const long m1 = b / g, m2 = -a / g;
  // Multiples of (m1, m2) are relations iff the constant part is a root of unity.
  const long order = root_of_unity_order(gr_pow(c1, m1) * gr_pow(c2, m2));
  if (order == 0) return {};
  return dependent(m1 * order, m2 * order);
}

std::map<int, int> multiplicity_profile(const UniPoly& p) {
  std::map<int, int> out;
  for (const auto& f : squarefree_decomposition(p)) {
    if (f.factor.is_constant()) continue;
    out[f.multiplicity] += f.factor.degree();
  }
  return out;
}

}  // namespace unimod
