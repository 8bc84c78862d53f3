#ifndef QC2_CYCLIC_HPP
#define QC2_CYCLIC_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "qc2/idempotents.hpp"
#include "qc2/matrix.hpp"

namespace qc2 {

/// A cyclic code (ideal of FH) represented by its idempotent support: the
/// set E_C of primitive idempotents it does not annihilate. All lattice
/// operations are set operations on the support.
class CyclicCode {
 public:
  CyclicCode(IdempotentBasisPtr basis, uint64_t support);
  static CyclicCode from_support(IdempotentBasisPtr basis, const std::vector<int>& idx);
  static CyclicCode from_generator(IdempotentBasisPtr basis, const GroupAlgebraElement& g);

  const IdempotentBasisPtr& basis() const { return basis_; }
  uint64_t support() const { return support_; }
  std::vector<int> support_list() const;
  bool has(int i) const { return support_ >> i & 1; }
  bool is_zero() const { return support_ == 0; }
  int dim() const { return basis_->support_dim(support_); }

  /// e_C, the identity of the ring (C, e_C).
  GroupAlgebraElement identity_element() const { return basis_->sum_idempotents(support_); }

  CyclicCode sum(const CyclicCode& other) const;
  CyclicCode intersect(const CyclicCode& other) const;
  CyclicCode bar() const;
  CyclicCode dual() const;
  bool is_lcd() const;
  bool is_self_orthogonal() const;

  /// All units of the ring (C, e_C), i.e. every g in C with g e_i != 0 for
  /// each supported e_i, in a fixed deterministic order. For the zero code
  /// the unit group is {0}. Throws CapExceeded past the cap.
  std::vector<GroupAlgebraElement> units(long long cap = 1LL << 20) const;
  long long unit_count() const;

  /// Streaming form of units(); the enumeration order is identical.
  void for_each_unit(long long cap,
                     const std::function<void(const GroupAlgebraElement&)>& fn) const;

  /// Canonical (reduced row-echelon) dim x n generator matrix.
  Matrix generator_matrix() const;

  friend bool operator==(const CyclicCode& a, const CyclicCode& b) {
    return a.support_ == b.support_ && a.basis_->algebra()->same(*b.basis_->algebra());
  }

 private:
  void check_basis(const CyclicCode& other) const;
  IdempotentBasisPtr basis_;
  uint64_t support_;
};

}  // namespace qc2

#endif
