#include "fusedr/tensor.hpp"

#include <string>

namespace fusedr {

TensorSpace::TensorSpace(int N, int n) : local_dim(N), sites(n) {
  if (N < 1) throw DomainError("TensorSpace: local dimension must be >= 1");
  if (n < 1) throw DomainError("TensorSpace: site count must be >= 1");
  std::uint64_t dim = 1;
  for (int i = 0; i < n; ++i) {
    dim *= static_cast<std::uint64_t>(N);
    if (dim > (1ull << 31)) {
      throw DomainError("TensorSpace: N^n exceeds 2^31 (N=" + std::to_string(N) +
                        ", n=" + std::to_string(n) + ")");
    }
  }
  dimension = static_cast<StateIndex>(dim);
}

std::vector<int> decode_state(StateIndex index, const TensorSpace& space) {
  std::vector<int> digits(space.sites);
  StateIndex x = index;
  for (int i = space.sites - 1; i >= 0; --i) {
    digits[static_cast<std::size_t>(i)] = static_cast<int>(x % space.local_dim);
    x /= static_cast<StateIndex>(space.local_dim);
  }
  return digits;
}

StateIndex encode_state(const std::vector<int>& digits, const TensorSpace& space) {
  StateIndex x = 0;
  for (int d : digits) x = x * static_cast<StateIndex>(space.local_dim) + static_cast<StateIndex>(d);
  return x;
}

std::vector<int> state_content(StateIndex index, const TensorSpace& space) {
  std::vector<int> counts(static_cast<std::size_t>(space.local_dim), 0);
  for (int d : decode_state(index, space)) ++counts[static_cast<std::size_t>(d)];
  return counts;
}

TensorOperator TensorOperator::identity(const TensorSpace& space) {
  TensorOperator op(space);
  for (StateIndex c = 0; c < space.dimension; ++c) op.cols_[c][c] = ExactScalar(1);
  return op;
}

void TensorOperator::set_entry(StateIndex row, StateIndex col, const ExactScalar& value) {
  if (value.is_zero()) {
    auto it = cols_.find(col);
    if (it != cols_.end()) {
      it->second.erase(row);
      if (it->second.empty()) cols_.erase(it);
    }
    return;
  }
  cols_[col][row] = value;
}

void TensorOperator::add_entry(StateIndex row, StateIndex col, const ExactScalar& value) {
  if (value.is_zero()) return;
  auto& cell = cols_[col][row];
  cell += value;
  if (cell.is_zero()) {
    cols_[col].erase(row);
    if (cols_[col].empty()) cols_.erase(col);
  }
}

ExactScalar TensorOperator::entry(StateIndex row, StateIndex col) const {
  auto it = cols_.find(col);
  if (it == cols_.end()) return ExactScalar(0);
  auto jt = it->second.find(row);
  return jt == it->second.end() ? ExactScalar(0) : jt->second;
}

SparseVector TensorOperator::apply(const SparseVector& vec) const {
  SparseVector out;
  for (const auto& [c, v] : vec) {
    auto it = cols_.find(c);
    if (it == cols_.end()) continue;
    for (const auto& [r, w] : it->second) {
      auto& cell = out[r];
      cell += w * v;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  }
  return out;
}

TensorOperator& TensorOperator::operator+=(const TensorOperator& o) {
  if (!(space_ == o.space_)) throw DomainError("operator sum: space mismatch");
  for (const auto& [c, col] : o.cols_) {
    for (const auto& [r, v] : col) add_entry(r, c, v);
  }
  return *this;
}

TensorOperator& TensorOperator::operator-=(const TensorOperator& o) {
  if (!(space_ == o.space_)) throw DomainError("operator difference: space mismatch");
  for (const auto& [c, col] : o.cols_) {
    for (const auto& [r, v] : col) add_entry(r, c, -v);
  }
  return *this;
}

TensorOperator& TensorOperator::scale(const ExactScalar& s) {
  if (s.is_zero()) {
    cols_.clear();
    return *this;
  }
  for (auto& [c, col] : cols_) {
    for (auto& [r, v] : col) v *= s;
  }
  return *this;
}

bool TensorOperator::operator==(const TensorOperator& o) const {
  return space_ == o.space_ && cols_ == o.cols_;
}

std::size_t TensorOperator::entry_count() const {
  std::size_t n = 0;
  for (const auto& [c, col] : cols_) n += col.size();
  return n;
}

bool TensorOperator::is_stochastic() const {
  for (StateIndex c = 0; c < space_.dimension; ++c) {
    ExactScalar sum(0);
    auto it = cols_.find(c);
    if (it != cols_.end()) {
      for (const auto& [r, v] : it->second) sum += v;
    }
    if (sum != ExactScalar(1)) return false;
  }
  return true;
}

bool TensorOperator::conserves_content() const {
  for (const auto& [c, col] : cols_) {
    const auto content = state_content(c, space_);
    for (const auto& [r, v] : col) {
      if (state_content(r, space_) != content) return false;
    }
  }
  return true;
}

TensorOperator operator*(const TensorOperator& a, const TensorOperator& b) {
  if (!(a.space() == b.space())) throw DomainError("operator product: space mismatch");
  TensorOperator out(a.space());
  for (const auto& [c, bcol] : b.columns()) {
    SparseVector image = a.apply(bcol);
    for (const auto& [r, v] : image) out.set_entry(r, c, v);
  }
  return out;
}

TensorOperator operator+(TensorOperator a, const TensorOperator& b) { return a += b; }
TensorOperator operator-(TensorOperator a, const TensorOperator& b) { return a -= b; }
TensorOperator operator*(const ExactScalar& s, TensorOperator a) { return a.scale(s); }

}  // namespace fusedr
