#ifndef QC2_IDEMPOTENTS_HPP
#define QC2_IDEMPOTENTS_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "qc2/group_algebra.hpp"
#include "qc2/poly.hpp"

namespace qc2 {

/// Orbit of multiplication by q on Z_n.
struct CyclotomicCoset {
  int rep;                   // smallest member
  std::vector<int> members;  // sorted
};

/// Partition of {0, ..., n-1} into q-orbits, sorted by representative.
std::vector<CyclotomicCoset> cyclotomic_cosets(int n, long long q);

/// Multiplicative order of q mod n (1 when n = 1).
long long mul_order_mod(long long q, int n);

/// True iff ord_{Z_n^x}(q) is odd; equivalent to E' = {e_0}.
bool ord_is_odd(int n, long long q);

/// True iff some power of q is congruent to -1 mod n; equivalent to E'' empty.
bool minus_one_in_q_powers(int n, long long q);

/// Even-characteristic coincidence criterion: for all prime divisors p, p'
/// of n, v2(ord_{Z_p^x}(q)) = v2(ord_{Z_p'^x}(q)) >= 1. Requires q a 2-power
/// and n odd.
bool cond6_even(int n, long long q);

/// Odd-characteristic coincidence criterion. If 4 does not divide n: all odd
/// prime divisors p of n have equal v(p) >= 1. If 2^l || n with l >= 2:
/// q = -1 (mod 2^l) and every odd prime divisor p of n has v(p) = 1.
/// Requires q odd.
bool cond6_odd(int n, long long q);

class IdempotentBasis;
using IdempotentBasisPtr = std::shared_ptr<const IdempotentBasis>;

/// The complete set E = {e_0, ..., e_s} of primitive idempotents of FH,
/// with the irreducible factors of x^n - 1, cyclotomic cosets, component
/// dimensions and the bar permutation, all aligned index by index.
///
/// Canonical order: e_0 = (1/n) sum x^i first, the rest sorted by ascending
/// coefficient sequence. Factors are aligned so that e_i = 1 (mod f_i) and
/// e_i = 0 (mod f_j) for j != i.
///
/// Immutable after construction; all accessors are pure.
class IdempotentBasis : public std::enable_shared_from_this<IdempotentBasis> {
 public:
  static constexpr long long kSplitCap = 1LL << 24;

  static IdempotentBasisPtr compute(GroupAlgebraPtr alg);
  static IdempotentBasisPtr compute(FieldPtr field, int n);

  const GroupAlgebraPtr& algebra() const { return alg_; }
  const FieldPtr& field() const { return alg_->field(); }
  int n() const { return alg_->n(); }
  long long q() const { return alg_->q(); }
  int size() const { return static_cast<int>(idems_.size()); }  // s + 1

  const GroupAlgebraElement& idempotent(int i) const { return idems_[i]; }
  const Poly& factor(int i) const { return factors_[i]; }
  const CyclotomicCoset& coset(int i) const { return cosets_[i]; }
  int dim(int i) const { return static_cast<int>(cosets_[i].members.size()); }
  int bar_of(int i) const { return bar_perm_[i]; }
  const std::vector<int>& bar_permutation() const { return bar_perm_; }

  std::vector<int> bar_fixed() const;  // E' indices
  std::vector<int> bar_moved() const;  // E'' indices

  /// Sum of the idempotents selected by a support bitmask (e_C).
  GroupAlgebraElement sum_idempotents(uint64_t support) const;
  uint64_t full_mask() const { return size() == 64 ? ~0ULL : (1ULL << size()) - 1; }
  uint64_t bar_mask(uint64_t support) const;
  int support_dim(uint64_t support) const;

 private:
  explicit IdempotentBasis(GroupAlgebraPtr alg) : alg_(std::move(alg)) {}

  GroupAlgebraPtr alg_;
  std::vector<GroupAlgebraElement> idems_;
  std::vector<Poly> factors_;
  std::vector<CyclotomicCoset> cosets_;
  std::vector<int> bar_perm_;
};

/// The monic irreducible factors of x^n - 1 over the field, in the canonical
/// basis order (aligned with primitive idempotents).
std::vector<Poly> factor_xn_minus_one(const FieldPtr& field, int n);

}  // namespace qc2

#endif
