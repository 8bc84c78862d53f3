#include "qc2/cyclic.hpp"

#include <algorithm>
#include <set>

namespace qc2 {

CyclicCode::CyclicCode(IdempotentBasisPtr basis, uint64_t support)
    : basis_(std::move(basis)), support_(support) {
  if (support_ & ~basis_->full_mask())
    fail(ErrorKind::Parse, "support index out of range");
}

CyclicCode CyclicCode::from_support(IdempotentBasisPtr basis,
                                    const std::vector<int>& idx) {
  uint64_t mask = 0;
  for (int i : idx) {
    if (i < 0 || i >= basis->size())
      fail(ErrorKind::Parse, "support index out of range");
    mask |= 1ULL << i;
  }
  return {std::move(basis), mask};
}

CyclicCode CyclicCode::from_generator(IdempotentBasisPtr basis,
                                      const GroupAlgebraElement& g) {
  if (!g.algebra()->same(*basis->algebra()))
    fail(ErrorKind::BasisMismatch, "generator from a different algebra");
  uint64_t mask = 0;
  for (int i = 0; i < basis->size(); ++i)
    if (!(g * basis->idempotent(i)).is_zero()) mask |= 1ULL << i;
  return {std::move(basis), mask};
}

std::vector<int> CyclicCode::support_list() const {
  std::vector<int> out;
  for (int i = 0; i < basis_->size(); ++i)
    if (has(i)) out.push_back(i);
  return out;
}

void CyclicCode::check_basis(const CyclicCode& other) const {
  if (!basis_->algebra()->same(*other.basis_->algebra()))
    fail(ErrorKind::BasisMismatch, "codes over different idempotent bases");
}

CyclicCode CyclicCode::sum(const CyclicCode& other) const {
  check_basis(other);
  return {basis_, support_ | other.support_};
}

CyclicCode CyclicCode::intersect(const CyclicCode& other) const {
  check_basis(other);
  return {basis_, support_ & other.support_};
}

CyclicCode CyclicCode::bar() const { return {basis_, basis_->bar_mask(support_)}; }

CyclicCode CyclicCode::dual() const {
  return {basis_, basis_->full_mask() & ~basis_->bar_mask(support_)};
}

bool CyclicCode::is_lcd() const {
  // C meets C^perp trivially iff the support is bar-stable.
  return (support_ & ~basis_->bar_mask(support_)) == 0;
}

bool CyclicCode::is_self_orthogonal() const {
  return (support_ & basis_->bar_mask(support_)) == 0;
}

long long CyclicCode::unit_count() const {
  constexpr long long kSat = 4'000'000'000'000'000'000LL;
  long long count = 1;
  for (int i : support_list()) {
    long long comp = 1;
    for (int k = 0; k < basis_->dim(i); ++k) comp *= basis_->q();
    if (count > kSat / (comp - 1)) return kSat;  // saturate instead of overflowing
    count *= comp - 1;
  }
  return count;
}

void CyclicCode::for_each_unit(
    long long cap, const std::function<void(const GroupAlgebraElement&)>& fn) const {
  const auto& alg = basis_->algebra();
  std::vector<int> sup = support_list();
  if (sup.empty()) {
    fn(alg->zero());  // the zero ring's only unit is its identity, 0
    return;
  }
  long long q = basis_->q();
  // Component bases: x^v e_i for v = 0..d_i-1 span FH e_i.
  std::vector<std::vector<GroupAlgebraElement>> comp_basis;
  std::vector<long long> comp_count;
  long long total = 1;
  for (int i : sup) {
    int d = basis_->dim(i);
    std::vector<GroupAlgebraElement> vecs;
    GroupAlgebraElement cur = basis_->idempotent(i);
    GroupAlgebraElement x = alg->monomial(1);
    for (int v = 0; v < d; ++v) {
      vecs.push_back(cur);
      if (v + 1 < d) cur = x * cur;
    }
    long long cnt = 1;
    for (int v = 0; v < d; ++v) cnt *= q;
    --cnt;
    comp_basis.push_back(std::move(vecs));
    comp_count.push_back(cnt);
    if (total > cap / cnt + 1) fail(ErrorKind::CapExceeded, "unit enumeration too large");
    total *= cnt;
    if (total > cap) fail(ErrorKind::CapExceeded, "unit enumeration too large");
  }

  const Field& f = *basis_->field();
  int n = alg->n();
  size_t k = sup.size();
  std::vector<long long> val(k, 1);  // per-component index in [1, q^d - 1]
  std::vector<int> coeffs(n);
  while (true) {
    std::fill(coeffs.begin(), coeffs.end(), 0);
    for (size_t ci = 0; ci < k; ++ci) {
      long long t = val[ci];
      for (const auto& bv : comp_basis[ci]) {
        int digit = static_cast<int>(t % q);
        t /= q;
        if (digit == 0) continue;
        const auto& bc = bv.coeffs();
        for (int j = 0; j < n; ++j) coeffs[j] = f.add(coeffs[j], f.mul(digit, bc[j]));
      }
    }
    fn(alg->from_coeffs(coeffs));
    // Odometer, last component fastest.
    size_t ci = k;
    while (ci > 0) {
      --ci;
      if (val[ci] < comp_count[ci]) {
        ++val[ci];
        break;
      }
      val[ci] = 1;
      if (ci == 0) return;
    }
  }
}

std::vector<GroupAlgebraElement> CyclicCode::units(long long cap) const {
  std::vector<GroupAlgebraElement> out;
  for_each_unit(cap, [&](const GroupAlgebraElement& g) { out.push_back(g); });
  // Distinctness guard against representation collisions.
  std::set<std::vector<int>> seen;
  for (const auto& g : out)
    if (!seen.insert(g.coeffs()).second)
      fail(ErrorKind::Internal, "duplicate unit representation");
  return out;
}

Matrix CyclicCode::generator_matrix() const {
  const auto& alg = basis_->algebra();
  Matrix rows(basis_->field(), 0, alg->n());
  GroupAlgebraElement x = alg->monomial(1);
  for (int i : support_list()) {
    GroupAlgebraElement cur = basis_->idempotent(i);
    for (int v = 0; v < basis_->dim(i); ++v) {
      rows.append_row(cur.coeffs());
      if (v + 1 < basis_->dim(i)) cur = x * cur;
    }
  }
  Matrix b = rref_basis(rows);
  if (b.rows() != dim()) fail(ErrorKind::Internal, "generator matrix rank != dim");
  return b;
}

}  // namespace qc2
