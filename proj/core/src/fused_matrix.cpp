#include "fusedr/fused_matrix.hpp"

#include <algorithm>
#include <string>

namespace fusedr {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

void require_two_level(const BlockShape& shape, const char* who) {
  require(shape.local_dim == 2, std::string(who) + ": fused reduction is defined for N = 2 only");
}

}  // namespace

FusedMatrix::FusedMatrix(const BlockShape& shape) : shape_(shape) {
  require_two_level(shape, "FusedMatrix");
  data_.assign(static_cast<std::size_t>(side()) * static_cast<std::size_t>(side()),
               ExactScalar(0));
}

int FusedMatrix::rank(FusedIndex idx) const {
  require(0 <= idx.first && idx.first <= shape_.k && 0 <= idx.second && idx.second <= shape_.l,
          "FusedIndex out of range for shape (" + std::to_string(shape_.k) + "," +
              std::to_string(shape_.l) + ")");
  return idx.first * (shape_.l + 1) + idx.second;
}

FusedIndex FusedMatrix::index_at(int r) const {
  return FusedIndex{r / (shape_.l + 1), r % (shape_.l + 1)};
}

ExactScalar& FusedMatrix::at(FusedIndex in, FusedIndex out) {
  return data_[static_cast<std::size_t>(rank(in)) * static_cast<std::size_t>(side()) +
               static_cast<std::size_t>(rank(out))];
}

const ExactScalar& FusedMatrix::at(FusedIndex in, FusedIndex out) const {
  return data_[static_cast<std::size_t>(rank(in)) * static_cast<std::size_t>(side()) +
               static_cast<std::size_t>(rank(out))];
}

ExactScalar FusedMatrix::row_sum(FusedIndex in) const {
  ExactScalar sum(0);
  for (int r = 0; r < side(); ++r) sum += at(in, index_at(r));
  return sum;
}

bool FusedMatrix::is_row_stochastic() const {
  for (int r = 0; r < side(); ++r) {
    if (row_sum(index_at(r)) != ExactScalar(1)) return false;
  }
  return true;
}

bool FusedMatrix::conserves_totals() const {
  for (int r = 0; r < side(); ++r) {
    for (int c = 0; c < side(); ++c) {
      const FusedIndex in = index_at(r);
      const FusedIndex out = index_at(c);
      if (in.first + in.second != out.first + out.second && !at(in, out).is_zero()) return false;
    }
  }
  return true;
}

namespace {

// Block sizes in site order for each side of the sandwich.
std::pair<int, int> side_blocks(const BlockShape& shape, BasisSide side) {
  if (side == BasisSide::Input) return {shape.l, shape.k};
  return {shape.k, shape.l};
}

// Counts per block (in site order) for an index pair, per the convention
// block in the header.
std::pair<int, int> block_counts(const BlockShape& shape, BasisSide side, FusedIndex idx) {
  if (side == BasisSide::Output || shape.k == shape.l) return {idx.first, idx.second};
  return {idx.second, idx.first};  // input, k != l: k-sized block is block 2
}

}  // namespace

std::vector<std::pair<FusedIndex, SparseVector>> symmetrized_basis(const BlockShape& shape,
                                                                   const QParams& q,
                                                                   BasisSide side) {
  require_two_level(shape, "symmetrized_basis");
  const TensorSpace space(2, shape.sites());
  const TensorOperator proj =
      projector(shape, side == BasisSide::Input ? ProjectorOrientation::LK : ProjectorOrientation::KL,
                space, q);
  const auto [size1, size2] = side_blocks(shape, side);
  std::vector<std::pair<FusedIndex, SparseVector>> basis;
  for (int a = 0; a <= shape.k; ++a) {
    for (int b = 0; b <= shape.l; ++b) {
      const FusedIndex idx{a, b};
      const auto [count1, count2] = block_counts(shape, side, idx);
      std::vector<int> digits;
      digits.insert(digits.end(), static_cast<std::size_t>(count1), 0);
      digits.insert(digits.end(), static_cast<std::size_t>(size1 - count1), 1);
      digits.insert(digits.end(), static_cast<std::size_t>(count2), 0);
      digits.insert(digits.end(), static_cast<std::size_t>(size2 - count2), 1);
      SparseVector unit;
      unit[encode_state(digits, space)] = ExactScalar(1);
      basis.emplace_back(idx, proj.apply(unit));
    }
  }
  return basis;
}

namespace {

// Exact Gaussian elimination for the (overdetermined, consistent) expansion
// of `target` over `columns`. Throws with the first nonzero residual on
// inconsistency.
std::vector<ExactScalar> solve_exact(const std::vector<const SparseVector*>& columns,
                                     const SparseVector& target) {
  std::vector<StateIndex> rows;
  for (const auto* col : columns) {
    for (const auto& [r, v] : *col) rows.push_back(r);
  }
  for (const auto& [r, v] : target) rows.push_back(r);
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

  const std::size_t m = rows.size();
  const std::size_t n = columns.size();
  std::vector<std::vector<ExactScalar>> a(m, std::vector<ExactScalar>(n, ExactScalar(0)));
  std::vector<ExactScalar> b(m, ExactScalar(0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t jcol = 0; jcol < n; ++jcol) {
      auto it = columns[jcol]->find(rows[i]);
      if (it != columns[jcol]->end()) a[i][jcol] = it->second;
    }
    auto it = target.find(rows[i]);
    if (it != target.end()) b[i] = it->second;
  }

  std::vector<std::pair<std::size_t, std::size_t>> pivots;
  std::size_t next_row = 0;
  for (std::size_t c = 0; c < n && next_row < m; ++c) {
    std::size_t pivot = m;
    for (std::size_t r = next_row; r < m; ++r) {
      if (!a[r][c].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot == m) continue;
    std::swap(a[next_row], a[pivot]);
    std::swap(b[next_row], b[pivot]);
    const ExactScalar inv = ExactScalar(1) / a[next_row][c];
    for (auto& x : a[next_row]) x *= inv;
    b[next_row] *= inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == next_row || a[r][c].is_zero()) continue;
      const ExactScalar f = a[r][c];
      for (std::size_t cc = 0; cc < n; ++cc) a[r][cc] -= f * a[next_row][cc];
      b[r] -= f * b[next_row];
    }
    pivots.emplace_back(next_row, c);
    ++next_row;
  }

  std::vector<ExactScalar> x(n, ExactScalar(0));
  for (const auto& [r, c] : pivots) x[c] = b[r];
  for (std::size_t r = 0; r < m; ++r) {
    ExactScalar acc(0);
    for (std::size_t c = 0; c < n; ++c) acc += a[r][c] * x[c];
    if (acc != b[r]) {
      throw DomainError("reduce_operator: image leaves the symmetrized span, residual " +
                        (b[r] - acc).str() + " at ambient state " + std::to_string(rows[r]));
    }
  }
  return x;
}

}  // namespace

FusedMatrix reduce_operator(const TensorOperator& op, const BlockShape& shape, const QParams& q) {
  require_two_level(shape, "reduce_operator");
  require(op.space().sites == shape.sites() && op.space().local_dim == 2,
          "reduce_operator: operator space must be (C^2)^{k+l}");
  const auto inputs = symmetrized_basis(shape, q, BasisSide::Input);
  const auto outputs = symmetrized_basis(shape, q, BasisSide::Output);
  FusedMatrix out(shape);
  for (const auto& [in_idx, in_vec] : inputs) {
    const SparseVector image = op.apply(in_vec);
    const int total = in_idx.first + in_idx.second;
    std::vector<FusedIndex> out_indices;
    std::vector<const SparseVector*> out_columns;
    for (const auto& [out_idx, out_vec] : outputs) {
      if (out_idx.first + out_idx.second == total) {
        out_indices.push_back(out_idx);
        out_columns.push_back(&out_vec);
      }
    }
    const std::vector<ExactScalar> coeffs = solve_exact(out_columns, image);
    for (std::size_t j = 0; j < out_indices.size(); ++j) {
      out.at(in_idx, out_indices[j]) = coeffs[j];
    }
  }
  return out;
}

ExactScalar j_factor(int m, int kpp, int lpp, int delta, const QParams& q) {
  if (delta < 0 || delta > kpp) return ExactScalar(0);
  return q_binomial(kpp, kpp - delta, q) *
         q_pochhammer(q.t.pow(m - lpp), q.t.pow(-1), delta) *
         q.t.pow(static_cast<long>(m - lpp - delta) * (kpp - delta));
}

ExactScalar closed_form_entry(const BlockShape& shape, const ExactScalar& z, const QParams& q,
                              FusedIndex in, FusedIndex out) {
  require_two_level(shape, "closed_form_entry");
  const int k = shape.k;
  const int l = shape.l;
  require(0 <= in.first && in.first <= k && 0 <= in.second && in.second <= l,
          "closed_form_entry: input index out of range");
  require(0 <= out.first && out.first <= k && 0 <= out.second && out.second <= l,
          "closed_form_entry: output index out of range");
  if (in.first + in.second != out.first + out.second) return ExactScalar(0);

  // The splitting factors read the input as (k-block count, l-block count);
  // for k == l the matrix labels are positional, so the pair swaps here.
  const int kp = (k == l) ? in.second : in.first;
  const int lp = (k == l) ? in.first : in.second;
  const int lt = out.second;

  ExactScalar total(0);
  for (int p = 0; p <= k; ++p) {
    const ExactScalar a_p = baxter_coefficient(k, l, p, z, q);
    const int m = l - k + p;
    ExactScalar sigma_entry(0);
    for (int kpp = 0; kpp <= std::min(p, kp); ++kpp) {
      const ExactScalar f1 = q_binomial(k - p, kp - kpp, q) * q_binomial(p, kpp, q) *
                             q.t.pow(static_cast<long>(kpp) * (k - p - kp + kpp)) /
                             q_binomial(k, kp, q);
      if (f1.is_zero()) continue;
      for (int lpp = 0; lpp <= std::min(m, lp); ++lpp) {
        const ExactScalar f2 = q_binomial(k - p, lp - lpp, q) * q_binomial(m, lpp, q) *
                               q.t.pow(static_cast<long>(lp - lpp) * (m - lpp)) /
                               q_binomial(l, lp, q);
        if (f2.is_zero()) continue;
        const int delta = lt - kp + kpp - lpp;
        sigma_entry += f1 * f2 * j_factor(m, kpp, lpp, delta, q);
      }
    }
    total += a_p * sigma_entry;
  }
  return total;
}

FusedMatrix closed_form_matrix(const BlockShape& shape, const ExactScalar& z, const QParams& q) {
  FusedMatrix out(shape);
  for (int r = 0; r < out.side(); ++r) {
    for (int c = 0; c < out.side(); ++c) {
      const FusedIndex in = out.index_at(r);
      const FusedIndex outi = out.index_at(c);
      out.at(in, outi) = closed_form_entry(shape, z, q, in, outi);
    }
  }
  return out;
}

}  // namespace fusedr
