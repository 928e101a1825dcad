#ifndef UNIMOD_ARLAB_HPP
#define UNIMOD_ARLAB_HPP

#include <map>
#include <optional>
#include <vector>

#include "unimod/system.hpp"
#include "unimod/uni_poly.hpp"

namespace unimod {

/// Monic gcd(P1^k - 1, P2^k - 1). ConstantInput for constant P_i, DegreeZero for k < 1.
UniPoly gcd_power_shift(const UniPoly& p1, const UniPoly& p2, int k);

struct ARRow {
  int k = 0;
  UniPoly gcd;
};

struct ARReport {
  std::vector<ARRow> table;
  /// Squarefree lcm of all gcd_k, monic.
  UniPoly stabilized_F;
  /// Last k at which the running lcm changed (1 if it never did).
  std::optional<int> stabilized_at;
  /// Every root of stabilized_F lies in a solution ball of the level solver.
  bool consistency = false;
};

/// Table of gcd_k for k = 1..K. DependentInputs unless the inputs are
/// certified independent; HorizonTooSmall when the lcm still grows at k = K.
ARReport ar_accumulate(const UniPoly& p1, const UniPoly& p2, int max_k, const SolverConfig& config = {});

enum class DependenceKind { INDEPENDENT, DEPENDENT, INCONCLUSIVE };

/// DEPENDENT: P1^m1 P2^m2 = 1 with (m1, m2) primitive, m1 > 0 or m1 = 0 < m2.
/// INCONCLUSIVE only for two constants without a relation of height <= 64.
struct DependenceCertificate {
  DependenceKind kind = DependenceKind::INDEPENDENT;
  long m1 = 0;
  long m2 = 0;
};

/// Pairwise coprime monic polynomials with p_i = constants[i] * prod basis[j]^exponents[i][j].
struct CoprimeBasis {
  std::vector<UniPoly> basis;
  std::vector<std::vector<long>> exponents;
  std::vector<GaussianRational> constants;
};

/// ZeroInput for a zero polynomial.
CoprimeBasis coprime_basis(const std::vector<UniPoly>& polys);

/// ZeroInput for a zero polynomial.
DependenceCertificate mult_independence(const UniPoly& p1, const UniPoly& p2);

/// Multiplicity -> total degree of the squarefree factors with that multiplicity.
std::map<int, int> multiplicity_profile(const UniPoly& p);

}  // namespace unimod

#endif  // UNIMOD_ARLAB_HPP
