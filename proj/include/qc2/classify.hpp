#ifndef QC2_CLASSIFY_HPP
#define QC2_CLASSIFY_HPP

#include <functional>
#include <optional>

#include "qc2/goursat.hpp"

namespace qc2 {

constexpr long long kDefaultEnumCap = 10'000'000;

/// Number of FH-submodules of (FH)^2: the product over components of
/// 4 + (q^{d_i} - 1) choices (Zero, Plane, the two lines, and one Graph per
/// unit slope). Saturates instead of overflowing.
long long qc_choice_product(const IdempotentBasisPtr& basis);

/// Every FH-submodule of (FH)^2 exactly once, as canonical Goursat data, in
/// a fixed deterministic order. Throws CapExceeded when the choice product
/// exceeds the cap.
void enumerate_qc(const IdempotentBasisPtr& basis, long long cap,
                  const std::function<void(const GoursatData&)>& fn);

/// Every self-dual 2-quasi-cyclic code exactly once: bar-free supports for
/// C1 and C2 covering the same bar-pairs, C12 the complement, and g filtered
/// from the units of C12 by g bar(g) = -e_C12.
void enumerate_self_dual(const IdempotentBasisPtr& basis, long long cap,
                         const std::function<void(const GoursatData&)>& fn);

/// Empirical verification of the six-way coincidence theorem at one (q, n).
struct ClassificationReport {
  long long p = 0;
  int m = 0;
  long long q = 0;
  int n = 0;
  bool char2 = false;  // predicate checked: dihedral (char 2) or consta-dihedral

  long long self_dual = 0;
  long long dihedral = 0;  // (consta-)dihedral among the self-dual codes
  long long double_circulant = 0;
  long long principal = 0;

  bool criteria[6] = {false, false, false, false, false, false};
  bool self_dual_exists = false;
  bool verdict = false;  // all required equivalences held

  std::optional<GoursatData> witness_self_dual;
  std::optional<GoursatData> witness_not_dihedral;
  std::optional<GoursatData> witness_not_double_circulant;
};

/// Evaluates criteria (1)-(6) of the applicable coincidence theorem:
/// (1), (2) by full enumeration of the self-dual codes, (3) by -1 in <q>,
/// (4), (5) over all 2^|E| supports, (6) by the arithmetic criterion.
/// (3)-(6) must always agree; (1), (2) must agree with them whenever
/// self-dual codes exist at all (in odd characteristic they exist iff
/// 4 | q - 1, and (1), (2) are vacuous otherwise). Any disagreement throws
/// EquivalenceViolation: the theorem is proven, so a violation is a bug
/// detector, never a log line.
ClassificationReport verify_theorem(const IdempotentBasisPtr& basis,
                                    long long cap = kDefaultEnumCap);

struct GridPoint {
  long long p;
  int m;
  int n;
};

/// Default sweep grid: q in {2, 4, 8, 3, 5, 9, 13}, n <= 15, gcd(n, q) = 1,
/// componentwise choice product within the cap.
std::vector<GridPoint> default_grid(long long cap = kDefaultEnumCap);

}  // namespace qc2

#endif
