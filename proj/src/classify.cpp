#include "qc2/classify.hpp"

#include <numeric>

namespace qc2 {

namespace {

long long component_size(const IdempotentBasisPtr& basis, int i) {
  long long s = 1;
  for (int k = 0; k < basis->dim(i); ++k) s *= basis->q();
  return s;
}

}  // namespace

long long qc_choice_product(const IdempotentBasisPtr& basis) {
  constexpr long long kSat = 4'000'000'000'000'000'000LL;
  long long prod = 1;
  for (int i = 0; i < basis->size(); ++i) {
    long long c = 3 + component_size(basis, i);
    if (prod > kSat / c) return kSat;
    prod *= c;
  }
  return prod;
}

void enumerate_qc(const IdempotentBasisPtr& basis, long long cap,
                  const std::function<void(const GoursatData&)>& fn) {
  if (qc_choice_product(basis) > cap)
    fail(ErrorKind::CapExceeded, "choice product exceeds enumeration cap");
  int s = basis->size();
  const auto& alg = basis->algebra();

  // Per-component unit lists (Graph slopes), in the cc_units order.
  std::vector<std::vector<GroupAlgebraElement>> slopes(s);
  std::vector<long long> choices(s);
  for (int i = 0; i < s; ++i) {
    CyclicCode comp(basis, 1ULL << i);
    comp.for_each_unit(cap, [&](const GroupAlgebraElement& u) { slopes[i].push_back(u); });
    choices[i] = 4 + static_cast<long long>(slopes[i].size());
  }

  // Choice digit per component: 0 Zero, 1 Plane, 2 Line10, 3 Line01,
  // 4+k Graph with slope #k. Component 0 is the most significant digit.
  std::vector<long long> digit(s, 0);
  const Field& f = *basis->field();
  int n = alg->n();
  while (true) {
    uint64_t m1 = 0, m2 = 0, m12 = 0;
    std::vector<int> gc(n, 0);
    for (int i = 0; i < s; ++i) {
      switch (digit[i]) {
        case 0: break;
        case 1: m1 |= 1ULL << i; m2 |= 1ULL << i; break;
        case 2: m1 |= 1ULL << i; break;
        case 3: m2 |= 1ULL << i; break;
        default: {
          m12 |= 1ULL << i;
          const auto& sc = slopes[i][digit[i] - 4].coeffs();
          for (int j = 0; j < n; ++j) gc[j] = f.add(gc[j], sc[j]);
        }
      }
    }
    fn(GoursatData::make_unchecked(CyclicCode(basis, m1), CyclicCode(basis, m2),
                                   CyclicCode(basis, m12), alg->from_coeffs(gc)));
    int i = s - 1;
    while (i >= 0 && digit[i] == choices[i] - 1) digit[i--] = 0;
    if (i < 0) break;
    ++digit[i];
  }
}

void enumerate_self_dual(const IdempotentBasisPtr& basis, long long cap,
                         const std::function<void(const GoursatData&)>& fn) {
  if (qc_choice_product(basis) > cap)
    fail(ErrorKind::CapExceeded, "choice product exceeds enumeration cap");
  int s = basis->size();
  uint64_t full = basis->full_mask();
  uint64_t moved = 0;
  for (int i : basis->bar_moved()) moved |= 1ULL << i;

  // Self-duality forces E_C12 = E - (E_C1 u bar E_C1) and C2 to cover the
  // same bar-pairs as C1, so it is enough to range over bar-free S1 in E''.
  for (uint64_t s1 = moved;; s1 = (s1 - 1) & moved) {
    uint64_t bar1 = basis->bar_mask(s1);
    if ((s1 & bar1) == 0) {
      uint64_t u = s1 | bar1;
      uint64_t s12 = full & ~u;
      CyclicCode c12(basis, s12);
      GroupAlgebraElement neg_e12 = -c12.identity_element();

      std::vector<GroupAlgebraElement> valid_g;
      c12.for_each_unit(cap, [&](const GroupAlgebraElement& g) {
        if (g * g.bar() == neg_e12) valid_g.push_back(g);
      });

      if (!valid_g.empty()) {
        // Every S2 obtained by picking one idempotent from each bar-pair
        // {i, bar(i)} with i in S1.
        std::vector<int> pair_lo;
        for (int i = 0; i < s; ++i)
          if (s1 >> i & 1) pair_lo.push_back(i);
        uint64_t picks = pair_lo.empty() ? 1 : 1ULL << pair_lo.size();
        for (uint64_t pk = 0; pk < picks; ++pk) {
          uint64_t s2 = 0;
          for (size_t t = 0; t < pair_lo.size(); ++t) {
            int i = pair_lo[t];
            s2 |= 1ULL << (pk >> t & 1 ? basis->bar_of(i) : i);
          }
          for (const auto& g : valid_g)
            fn(GoursatData::make_unchecked(CyclicCode(basis, s1), CyclicCode(basis, s2),
                                           c12, g));
        }
      }
    }
    if (s1 == 0) break;
  }
}

ClassificationReport verify_theorem(const IdempotentBasisPtr& basis, long long cap) {
  ClassificationReport rep;
  rep.p = basis->field()->p();
  rep.m = basis->field()->m();
  rep.q = basis->q();
  rep.n = basis->n();
  rep.char2 = rep.p == 2;

  bool all_dihedral = true, all_dc = true;
  enumerate_self_dual(basis, cap, [&](const GoursatData& d) {
    ++rep.self_dual;
    if (!rep.witness_self_dual) rep.witness_self_dual = d;
    bool dih = rep.char2 ? qc_is_dihedral(d) : qc_is_consta_dihedral(d);
    bool dc = qc_is_double_circulant(d);
    bool pri = qc_is_principal(d);
    if (dih) ++rep.dihedral; else if (!rep.witness_not_dihedral) rep.witness_not_dihedral = d;
    if (dc) ++rep.double_circulant; else if (!rep.witness_not_double_circulant) rep.witness_not_double_circulant = d;
    if (pri) ++rep.principal;
    all_dihedral &= dih;
    all_dc &= dc;
  });
  rep.self_dual_exists = rep.self_dual > 0;
  rep.criteria[0] = all_dihedral;
  rep.criteria[1] = all_dc;
  rep.criteria[2] = minus_one_in_q_powers(rep.n, rep.q);

  // (4), (5): over every support of a cyclic code.
  bool all_lcd = true, none_self_orth = true;
  if (basis->size() <= 20) {
    uint64_t full = basis->full_mask();
    for (uint64_t sup = full;; sup = (sup - 1) & full) {
      CyclicCode c(basis, sup);
      if (!c.is_lcd()) all_lcd = false;
      if (sup != 0 && c.is_self_orthogonal()) none_self_orth = false;
      if (sup == 0) break;
    }
  } else {
    bool shortcut = basis->bar_moved().empty();
    all_lcd = none_self_orth = shortcut;
  }
  rep.criteria[3] = all_lcd;
  rep.criteria[4] = none_self_orth;
  rep.criteria[5] = rep.char2 ? cond6_even(rep.n, rep.q) : cond6_odd(rep.n, rep.q);

  auto violation = [&](const std::string& what) {
    fail(ErrorKind::EquivalenceViolation,
         what + " at q = " + std::to_string(rep.q) + ", n = " + std::to_string(rep.n));
  };
  for (int k = 3; k <= 5; ++k)
    if (rep.criteria[k] != rep.criteria[2])
      violation("criterion (" + std::to_string(k + 1) + ") disagrees with (3)");
  if (rep.self_dual_exists) {
    if (rep.criteria[0] != rep.criteria[2]) violation("criterion (1) disagrees with (3)");
    if (rep.criteria[1] != rep.criteria[2]) violation("criterion (2) disagrees with (3)");
    if (rep.criteria[2] &&
        (rep.self_dual != rep.double_circulant || rep.self_dual != rep.dihedral))
      violation("criterion (3) holds but the three classes differ");
  }
  if (rep.double_circulant > rep.principal || rep.principal > rep.self_dual ||
      rep.dihedral > rep.self_dual)
    violation("count monotonicity broken");

  rep.verdict = true;
  return rep;
}

std::vector<GridPoint> default_grid(long long cap) {
  static constexpr struct { long long p; int m; } kFields[] = {
      {2, 1}, {2, 2}, {2, 3}, {3, 1}, {5, 1}, {3, 2}, {13, 1}};
  std::vector<GridPoint> out;
  for (const auto& [p, m] : kFields) {
    long long q = 1;
    for (int i = 0; i < m; ++i) q *= p;
    for (int n = 1; n <= 15; ++n) {
      if (std::gcd(static_cast<long long>(n), q) != 1) continue;
      // Admission uses coset sizes only, so no splitting-field work is done
      // for points the cap rejects.
      long long prod = 1;
      bool ok = true;
      for (const auto& cs : cyclotomic_cosets(n, q)) {
        long long size = 1;
        for (size_t k = 0; k < cs.members.size(); ++k) {
          size *= q;
          if (size > cap) break;
        }
        if (size > cap || prod > cap / (3 + size) + 1) {
          ok = false;
          break;
        }
        prod *= 3 + size;
        if (prod > cap) {
          ok = false;
          break;
        }
      }
      if (ok) out.push_back({p, m, n});
    }
  }
  return out;
}

}  // namespace qc2
