#ifndef QC2_ORACLE_HPP
#define QC2_ORACLE_HPP

#include <optional>

#include "qc2/group_algebra.hpp"
#include "qc2/matrix.hpp"

namespace qc2 {

// Matrix-level ground truth for the algebraic predicates. Everything here
// works on words and generator matrices only; none of it touches Goursat
// data, so the two routes stay independent.

/// Word maps on F^{2n}: simultaneous right cyclic shift of both halves, the
/// dihedral action (a, b) -> (bar b, bar a), and the twisted action
/// (a, b) -> (-bar b, bar a), where bar reverses the nonconstant
/// coordinates of a half (index 0 fixed, index k -> n - k).
std::vector<int> shift_image(const Field& f, std::span<const int> row, int n);
std::vector<int> y_image(const Field& f, std::span<const int> row, int n);
std::vector<int> ytilde_image(const Field& f, std::span<const int> row, int n);

/// rank(G) = n and G G^T = 0.
bool oracle_self_dual(const Matrix& g, int n);

/// Row space invariant under the simultaneous right cyclic shift of both
/// halves (i.e. the word set is a 2-quasi-cyclic code).
bool oracle_shift_invariant(const Matrix& g, int n);

/// Row space invariant under (a, b) -> (bar b, bar a).
bool oracle_y_closed(const Matrix& g, int n);

/// Row space invariant under (a, b) -> (-bar b, bar a).
bool oracle_ytilde_closed(const Matrix& g, int n);

/// When rref(G) has rank n, identity left block and circulant right block A,
/// returns a(x) = first row of A; otherwise nullopt.
std::optional<GroupAlgebraElement> oracle_double_circulant(const Matrix& g, int n);

/// Minimum Hamming weight over all nonzero codewords, by exhaustive span
/// walk; 0 for the zero code. Throws CapExceeded when q^rank > cap.
int oracle_min_distance(const Matrix& g, long long cap = 1LL << 20);

}  // namespace qc2

#endif
