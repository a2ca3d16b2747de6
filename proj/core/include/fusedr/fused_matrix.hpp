#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "fusedr/hecke.hpp"

namespace fusedr {

/// Occupation pair indexing the fused basis: first in [0,k], second in [0,l].
struct FusedIndex {
  int first = 0;
  int second = 0;
  auto operator<=>(const FusedIndex&) const = default;
};

/// Index conventions (fixed by the reference 9x9 matrices together with
/// row-stochasticity and conservation; exported in serialization metadata):
///
///  * Local dimension is 2. Occupation counts track digit 0; basis
///    representatives place the counted digit in the leftmost positions of
///    each block.
///  * The sandwich P^(k,l) . W . P^(l,k) applies its rightmost factor
///    first, so inputs live in the image of P^(l,k) (blocks sized [l][k])
///    and outputs in the image of P^(k,l) (blocks sized [k][l]).
///  * An output pair is (block-1 count, block-2 count).
///  * An input pair is (k-block count, l-block count); for k != l the
///    k-sized input block is block 2. For k == l the input pair reads
///    (block-1 count, block-2 count), same as the output rule.
///  * Rows are inputs ("row = input"); rows and columns are flattened
///    lexicographically with the second coordinate fastest.
class FusedMatrix {
 public:
  explicit FusedMatrix(const BlockShape& shape);

  const BlockShape& shape() const { return shape_; }
  int side() const { return (shape_.k + 1) * (shape_.l + 1); }

  ExactScalar& at(FusedIndex in, FusedIndex out);
  const ExactScalar& at(FusedIndex in, FusedIndex out) const;

  /// Flattened rank of an index pair (second coordinate fastest).
  int rank(FusedIndex idx) const;
  FusedIndex index_at(int rank) const;

  ExactScalar row_sum(FusedIndex in) const;
  bool is_row_stochastic() const;
  /// Entries between indices with different totals are exactly zero.
  bool conserves_totals() const;

  bool operator==(const FusedMatrix& o) const { return shape_.k == o.shape_.k && shape_.l == o.shape_.l && data_ == o.data_; }

 private:
  BlockShape shape_;
  std::vector<ExactScalar> data_;
};

enum class BasisSide { Input, Output };

/// The symmetrized occupation basis: for each pair, the projector applied
/// to the representative that places the counted digit leftmost in each
/// block. Input-side vectors use P^(l,k), output-side P^(k,l). Requires
/// local dimension 2.
std::vector<std::pair<FusedIndex, SparseVector>> symmetrized_basis(const BlockShape& shape,
                                                                   const QParams& q,
                                                                   BasisSide side);

/// Expand `op` over the symmetrized bases by an exact linear solve within
/// each content sector. Throws DomainError with an exact residual witness
/// if an image leaves the output span (a convention bug upstream, not a
/// numerical issue). Requires local dimension 2.
FusedMatrix reduce_operator(const TensorOperator& op, const BlockShape& shape, const QParams& q);

/// Crossing factor
///   J_m(k'', l''; l''+d, k''-d) =
///     binom(k'', k''-d)_{q^2} (q^{2(m-l'')}; q^{-2})_d q^{2(m-l''-d)(k''-d)};
/// zero when d is outside [0, k''].
ExactScalar j_factor(int m, int kpp, int lpp, int delta, const QParams& q);

/// Closed-form entry of the fused R-matrix: the triple sum over (k'',l'',p)
/// of a_p^{(k,l)}(z) times two q-binomial splitting ratios times the
/// crossing factor. Zero when the conserved totals differ.
ExactScalar closed_form_entry(const BlockShape& shape, const ExactScalar& z, const QParams& q,
                              FusedIndex in, FusedIndex out);

/// The full matrix of closed_form_entry values; rows sum to exactly 1 for
/// admissible parameters.
FusedMatrix closed_form_matrix(const BlockShape& shape, const ExactScalar& z, const QParams& q);

}  // namespace fusedr
