#ifndef QC2_GOURSAT_HPP
#define QC2_GOURSAT_HPP

#include <utility>
#include <vector>

#include "qc2/cyclic.hpp"

namespace qc2 {

/// Normal form of a 2-quasi-cyclic code (an FH-submodule of FH x FH): three
/// ideals with C1 meeting C12 trivially and C2 meeting C12 trivially, plus a
/// unit g of the ring C12. The code is (C1 x C2) + {(c, c g) : c in C12}.
/// g is stored normalized inside C12 (g = g e_C12), making equality of data
/// plain coefficient equality.
struct GoursatData {
  CyclicCode c1, c2, c12;
  GroupAlgebraElement g;

  /// Validates the invariants: support disjointness (OverlapViolation) and
  /// g e_i != 0 on every supported component of C12 (NotUnit). Normalizes g.
  static GoursatData make(CyclicCode c1, CyclicCode c2, CyclicCode c12,
                          const GroupAlgebraElement& g);

  /// No validation; the caller guarantees the invariants (enumeration paths).
  static GoursatData make_unchecked(CyclicCode c1, CyclicCode c2, CyclicCode c12,
                                    GroupAlgebraElement g);

  const IdempotentBasisPtr& basis() const { return c1.basis(); }

  // The Goursat projections C~i = Ci + C12, derived rather than stored.
  CyclicCode c1_tilde() const { return c1.sum(c12); }
  CyclicCode c2_tilde() const { return c2.sum(c12); }

  friend bool operator==(const GoursatData& a, const GoursatData& b) {
    return a.c1 == b.c1 && a.c2 == b.c2 && a.c12 == b.c12 && a.g == b.g;
  }
};

/// Shape of one epsilon-component of a submodule of (FH e)^2 over the
/// component field K_e: the zero space, all of K_e^2, one of the two
/// coordinate lines, or the graph {(c, c s)} of a unit slope s.
enum class ComponentTag { Zero, Plane, Line10, Line01, Graph };

struct Component {
  ComponentTag tag;
  GroupAlgebraElement slope;  // in (FH e_i)^x when tag == Graph, else zero
};

/// A 2-quasi-cyclic code as its per-idempotent component table.
class QuasiCyclicCode {
 public:
  QuasiCyclicCode(IdempotentBasisPtr basis, std::vector<Component> comps)
      : basis_(std::move(basis)), comps_(std::move(comps)) {}

  const IdempotentBasisPtr& basis() const { return basis_; }
  const Component& component(int i) const { return comps_[i]; }
  int size() const { return static_cast<int>(comps_.size()); }
  int dim() const;

  friend bool operator==(const QuasiCyclicCode& a, const QuasiCyclicCode& b);

 private:
  IdempotentBasisPtr basis_;
  std::vector<Component> comps_;
};

using GeneratorPair = std::pair<GroupAlgebraElement, GroupAlgebraElement>;

/// Component table of the code described by the data: Plane where C1 and C2
/// overlap, lines where only one of them lives, Graph with slope g e_i on
/// the support of C12, Zero elsewhere.
QuasiCyclicCode qc_construct(const GoursatData& data);

/// Normal form of the FH-submodule spanned by the given generator pairs,
/// computed componentwise: the rank over each component field classifies
/// the component into one of the five shapes.
/// qc_construct(qc_decompose(gens)) spans exactly the same words as gens.
GoursatData qc_decompose(const IdempotentBasisPtr& basis,
                         const std::vector<GeneratorPair>& gens);

/// The two module generators ((e_C1 + e_C12, e_C12 g), (0, e_C2)); their
/// FH-span is the whole code.
std::pair<GeneratorPair, GeneratorPair> qc_two_generators(const GoursatData& data);

/// Generated by one element iff the three supports are pairwise disjoint
/// (no repeated composition factors).
bool qc_is_principal(const GoursatData& data);

/// Has a generator matrix (I | A) with A circulant iff C2 = 0 and
/// C1 + C12 = FH.
bool qc_is_double_circulant(const GoursatData& data);

/// Self-duality, evaluated symbolically on supports: dim C = n with
/// dim C1 = dim C2; the four orthogonality conditions; bar-stable C12 with
/// g bar(g) = -e_C12.
bool qc_is_self_dual(const GoursatData& data);

/// Left ideal of the dihedral group algebra iff bar(C1) = C2, bar-stable
/// C12, and bar(g) g = e_C12.
bool qc_is_dihedral(const GoursatData& data);

/// Left ideal of the twisted dihedral algebra (y~^2 = -1) iff bar(C1) = C2,
/// bar-stable C12, and bar(g) g = -e_C12. Coincides with qc_is_dihedral in
/// characteristic 2.
bool qc_is_consta_dihedral(const GoursatData& data);

/// Canonical (reduced row-echelon) dim x 2n generator matrix, built from the
/// cyclic shifts of the two generators.
Matrix qc_generator_matrix(const QuasiCyclicCode& code);
Matrix qc_generator_matrix(const GoursatData& data);

/// (a, b) as a length-2n word.
std::vector<int> pair_to_row(const GeneratorPair& p);

/// Inverse of u inside the component field FH e_i (u must be a unit there).
GroupAlgebraElement component_inverse(const IdempotentBasisPtr& basis, int i,
                                      const GroupAlgebraElement& u);

}  // namespace qc2

#endif
