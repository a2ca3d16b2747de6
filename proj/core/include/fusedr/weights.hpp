#pragma once

#include <utility>
#include <vector>

#include "fusedr/fused_matrix.hpp"

namespace fusedr {

/// Vertex transition kernel: each row of the fused R-matrix read as a
/// probability distribution over output pairs. Construction fails (does not
/// clamp) if any entry is negative, listing every offending entry exactly.
class WeightTable {
 public:
  WeightTable(const BlockShape& shape, ExactScalar q, ExactScalar z, const FusedMatrix& matrix);

  const BlockShape& shape() const { return shape_; }
  const ExactScalar& q() const { return q_; }
  const ExactScalar& z() const { return z_; }

  /// Nonzero transitions from `in`, in column order; probabilities are
  /// nonnegative and sum to exactly 1.
  const std::vector<std::pair<FusedIndex, ExactScalar>>& row(FusedIndex in) const;
  const FusedMatrix& matrix() const { return matrix_; }

 private:
  BlockShape shape_;
  ExactScalar q_;
  ExactScalar z_;
  FusedMatrix matrix_;
  std::vector<std::vector<std::pair<FusedIndex, ExactScalar>>> rows_;
};

/// Builds the table from closed_form_matrix(shape, z, q).
WeightTable weight_table(const BlockShape& shape, const QParams& q, const ExactScalar& z);

}  // namespace fusedr
