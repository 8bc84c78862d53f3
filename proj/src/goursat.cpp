#include "qc2/goursat.hpp"

namespace qc2 {

GoursatData GoursatData::make(CyclicCode c1, CyclicCode c2, CyclicCode c12,
                              const GroupAlgebraElement& g) {
  if (!c1.basis()->algebra()->same(*c2.basis()->algebra()) ||
      !c1.basis()->algebra()->same(*c12.basis()->algebra()))
    fail(ErrorKind::BasisMismatch, "Goursat parts over different bases");
  if ((c1.support() & c12.support()) || (c2.support() & c12.support()))
    fail(ErrorKind::OverlapViolation, "C1 and C2 must meet C12 trivially");
  if (!g.algebra()->same(*c1.basis()->algebra()))
    fail(ErrorKind::BasisMismatch, "g from a different algebra");
  GroupAlgebraElement gn = g * c12.identity_element();
  const auto& basis = c1.basis();
  for (int i : c12.support_list())
    if ((gn * basis->idempotent(i)).is_zero())
      fail(ErrorKind::NotUnit, "g vanishes on a supported component of C12");
  return {std::move(c1), std::move(c2), std::move(c12), std::move(gn)};
}

GoursatData GoursatData::make_unchecked(CyclicCode c1, CyclicCode c2, CyclicCode c12,
                                        GroupAlgebraElement g) {
  return {std::move(c1), std::move(c2), std::move(c12), std::move(g)};
}

int QuasiCyclicCode::dim() const {
  int d = 0;
  for (int i = 0; i < size(); ++i) {
    switch (comps_[i].tag) {
      case ComponentTag::Zero: break;
      case ComponentTag::Plane: d += 2 * basis_->dim(i); break;
      default: d += basis_->dim(i); break;
    }
  }
  return d;
}

bool operator==(const QuasiCyclicCode& a, const QuasiCyclicCode& b) {
  if (!a.basis_->algebra()->same(*b.basis_->algebra()) || a.size() != b.size())
    return false;
  for (int i = 0; i < a.size(); ++i) {
    if (a.comps_[i].tag != b.comps_[i].tag) return false;
    if (a.comps_[i].tag == ComponentTag::Graph &&
        !(a.comps_[i].slope == b.comps_[i].slope))
      return false;
  }
  return true;
}

QuasiCyclicCode qc_construct(const GoursatData& data) {
  const auto& basis = data.basis();
  std::vector<Component> comps;
  comps.reserve(basis->size());
  for (int i = 0; i < basis->size(); ++i) {
    bool in1 = data.c1.has(i), in2 = data.c2.has(i), in12 = data.c12.has(i);
    if (in12 && (in1 || in2))
      fail(ErrorKind::OverlapViolation, "C1 and C2 must meet C12 trivially");
    if (in12) {
      GroupAlgebraElement slope = data.g * basis->idempotent(i);
      if (slope.is_zero())
        fail(ErrorKind::NotUnit, "g vanishes on a supported component of C12");
      comps.push_back({ComponentTag::Graph, std::move(slope)});
    } else if (in1 && in2) {
      comps.push_back({ComponentTag::Plane, basis->algebra()->zero()});
    } else if (in1) {
      comps.push_back({ComponentTag::Line10, basis->algebra()->zero()});
    } else if (in2) {
      comps.push_back({ComponentTag::Line01, basis->algebra()->zero()});
    } else {
      comps.push_back({ComponentTag::Zero, basis->algebra()->zero()});
    }
  }
  return {basis, std::move(comps)};
}

GroupAlgebraElement component_inverse(const IdempotentBasisPtr& basis, int i,
                                      const GroupAlgebraElement& u) {
  // FH e_i is a field of size q^d with identity e_i, so u^{q^d - 2} inverts.
  long long size = 1;
  for (int k = 0; k < basis->dim(i); ++k) size *= basis->q();
  long long e = size - 2;
  GroupAlgebraElement acc = basis->idempotent(i);
  GroupAlgebraElement base = u;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

GoursatData qc_decompose(const IdempotentBasisPtr& basis,
                         const std::vector<GeneratorPair>& gens) {
  for (const auto& [a, b] : gens)
    if (!a.algebra()->same(*basis->algebra()) || !b.algebra()->same(*basis->algebra()))
      fail(ErrorKind::BasisMismatch, "generator from a different algebra");

  uint64_t m1 = 0, m2 = 0, m12 = 0;
  GroupAlgebraElement g = basis->algebra()->zero();
  for (int i = 0; i < basis->size(); ++i) {
    const GroupAlgebraElement& e = basis->idempotent(i);
    // Component pairs (a e, b e); their K_e-span is the component subspace.
    std::vector<GeneratorPair> comp;
    for (const auto& [a, b] : gens) {
      GeneratorPair p{a * e, b * e};
      if (!p.first.is_zero() || !p.second.is_zero()) comp.push_back(std::move(p));
    }
    if (comp.empty()) continue;  // Zero component
    const auto& [u, v] = comp.front();
    bool rank2 = false;
    for (size_t k = 1; k < comp.size() && !rank2; ++k) {
      // 2x2 determinant over the component field, computed inside FH.
      if (!(u * comp[k].second - v * comp[k].first).is_zero()) rank2 = true;
    }
    if (rank2) {
      m1 |= 1ULL << i;
      m2 |= 1ULL << i;
    } else if (v.is_zero()) {
      m1 |= 1ULL << i;
    } else if (u.is_zero()) {
      m2 |= 1ULL << i;
    } else {
      m12 |= 1ULL << i;
      g = g + v * component_inverse(basis, i, u);
    }
  }
  return GoursatData::make_unchecked(CyclicCode(basis, m1), CyclicCode(basis, m2),
                                     CyclicCode(basis, m12), std::move(g));
}

std::pair<GeneratorPair, GeneratorPair> qc_two_generators(const GoursatData& data) {
  GroupAlgebraElement e1 = data.c1.identity_element();
  GroupAlgebraElement e12 = data.c12.identity_element();
  GroupAlgebraElement e2 = data.c2.identity_element();
  return {{e1 + e12, e12 * data.g}, {data.basis()->algebra()->zero(), e2}};
}

bool qc_is_principal(const GoursatData& d) {
  return (d.c1.support() & d.c2.support()) == 0 &&
         (d.c1.support() & d.c12.support()) == 0 &&
         (d.c2.support() & d.c12.support()) == 0;
}

bool qc_is_double_circulant(const GoursatData& d) {
  const auto& basis = d.basis();
  return d.c2.is_zero() &&
         (d.c1.support() | d.c12.support()) == basis->full_mask();
}

bool qc_is_self_dual(const GoursatData& d) {
  const auto& basis = d.basis();
  int n = basis->n();
  // (2.1) dim C = n and dim C1 = dim C2.
  if (d.c1.dim() != d.c2.dim()) return false;
  if (d.c1.dim() + d.c2.dim() + d.c12.dim() != n) return false;
  // (2.2) <C1,C1> = <C2,C2> = <C1,C12> = <C2,C12> = 0 on supports.
  uint64_t bar1 = basis->bar_mask(d.c1.support());
  uint64_t bar2 = basis->bar_mask(d.c2.support());
  if (d.c1.support() & bar1) return false;
  if (d.c2.support() & bar2) return false;
  if (d.c12.support() & bar1) return false;
  if (d.c12.support() & bar2) return false;
  // (2.3) bar(C12) = C12 and g bar(g) = -e_C12.
  if (basis->bar_mask(d.c12.support()) != d.c12.support()) return false;
  return d.g * d.g.bar() == -d.c12.identity_element();
}

bool qc_is_dihedral(const GoursatData& d) {
  const auto& basis = d.basis();
  if (basis->bar_mask(d.c1.support()) != d.c2.support()) return false;
  if (basis->bar_mask(d.c12.support()) != d.c12.support()) return false;
  return d.g.bar() * d.g == d.c12.identity_element();
}

bool qc_is_consta_dihedral(const GoursatData& d) {
  const auto& basis = d.basis();
  if (basis->bar_mask(d.c1.support()) != d.c2.support()) return false;
  if (basis->bar_mask(d.c12.support()) != d.c12.support()) return false;
  return d.g.bar() * d.g == -d.c12.identity_element();
}

std::vector<int> pair_to_row(const GeneratorPair& p) {
  std::vector<int> row = p.first.coeffs();
  const auto& b = p.second.coeffs();
  row.insert(row.end(), b.begin(), b.end());
  return row;
}

Matrix qc_generator_matrix(const GoursatData& data) {
  const auto& alg = data.basis()->algebra();
  int n = alg->n();
  auto [g1, g2] = qc_two_generators(data);
  Matrix rows(alg->field(), 0, 2 * n);
  GroupAlgebraElement x = alg->monomial(1);
  for (const GeneratorPair* gp : {&g1, &g2}) {
    GroupAlgebraElement a = gp->first, b = gp->second;
    for (int k = 0; k < n; ++k) {
      rows.append_row(pair_to_row({a, b}));
      if (k + 1 < n) {
        a = x * a;
        b = x * b;
      }
    }
  }
  Matrix bas = rref_basis(rows);
  int expect = data.c1.dim() + data.c2.dim() + data.c12.dim();
  if (bas.rows() != expect)
    fail(ErrorKind::Internal, "generator matrix rank != dim C1 + dim C2 + dim C12");
  return bas;
}

Matrix qc_generator_matrix(const QuasiCyclicCode& code) {
  const auto& basis = code.basis();
  uint64_t m1 = 0, m2 = 0, m12 = 0;
  GroupAlgebraElement g = basis->algebra()->zero();
  for (int i = 0; i < code.size(); ++i) {
    switch (code.component(i).tag) {
      case ComponentTag::Zero: break;
      case ComponentTag::Plane: m1 |= 1ULL << i; m2 |= 1ULL << i; break;
      case ComponentTag::Line10: m1 |= 1ULL << i; break;
      case ComponentTag::Line01: m2 |= 1ULL << i; break;
      case ComponentTag::Graph:
        m12 |= 1ULL << i;
        g = g + code.component(i).slope;
        break;
    }
  }
  return qc_generator_matrix(GoursatData::make_unchecked(
      CyclicCode(basis, m1), CyclicCode(basis, m2), CyclicCode(basis, m12), g));
}

}  // namespace qc2
