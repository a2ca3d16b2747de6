#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "fusedr/rational.hpp"

namespace fusedr {

using StateIndex = std::uint32_t;

/// n-fold tensor power of an N-dimensional local space. Basis states are
/// multi-indices encoded big-endian in base N: site 1 is the most
/// significant digit. The constructor rejects N^n > 2^31.
struct TensorSpace {
  int local_dim = 2;  // N
  int sites = 1;      // n
  StateIndex dimension = 2;

  TensorSpace(int N, int n);
  bool operator==(const TensorSpace& o) const {
    return local_dim == o.local_dim && sites == o.sites;
  }
};

std::vector<int> decode_state(StateIndex index, const TensorSpace& space);
StateIndex encode_state(const std::vector<int>& digits, const TensorSpace& space);

/// Digit multiset of a basis state (count of each digit value). Every
/// operator in this library maps a state into its content class.
std::vector<int> state_content(StateIndex index, const TensorSpace& space);

using SparseVector = std::map<StateIndex, ExactScalar>;

/// Sparse exact-rational linear operator on a TensorSpace.
///
/// Column-action convention: entry(row, col) is the coefficient of basis
/// vector `row` in the image of basis vector `col`. The matrix in the
/// opposite ("paper-row") orientation, where rows are inputs, is the
/// transpose; serialization emits that orientation. The stochastic
/// contract is that every column sums to exactly 1 (equivalently, the
/// transpose fixes the all-ones vector).
class TensorOperator {
 public:
  explicit TensorOperator(const TensorSpace& space) : space_(space) {}
  static TensorOperator identity(const TensorSpace& space);

  const TensorSpace& space() const { return space_; }

  void set_entry(StateIndex row, StateIndex col, const ExactScalar& value);
  void add_entry(StateIndex row, StateIndex col, const ExactScalar& value);
  ExactScalar entry(StateIndex row, StateIndex col) const;

  /// Columns in increasing column order; each column maps row -> value with
  /// no explicit zeros.
  const std::map<StateIndex, SparseVector>& columns() const { return cols_; }

  SparseVector apply(const SparseVector& vec) const;

  TensorOperator& operator+=(const TensorOperator& o);
  TensorOperator& operator-=(const TensorOperator& o);
  TensorOperator& scale(const ExactScalar& s);

  /// Exact sparse equality after zero-pruning.
  bool operator==(const TensorOperator& o) const;

  std::size_t entry_count() const;
  bool is_stochastic() const;
  bool conserves_content() const;

 private:
  TensorSpace space_;
  std::map<StateIndex, SparseVector> cols_;
};

/// Operator product: (A * B) applies B first, then A.
TensorOperator operator*(const TensorOperator& a, const TensorOperator& b);
TensorOperator operator+(TensorOperator a, const TensorOperator& b);
TensorOperator operator-(TensorOperator a, const TensorOperator& b);
TensorOperator operator*(const ExactScalar& s, TensorOperator a);

}  // namespace fusedr
