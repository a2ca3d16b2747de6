#include "fusedr/weights.hpp"

#include <sstream>

namespace fusedr {

WeightTable::WeightTable(const BlockShape& shape, ExactScalar q, ExactScalar z,
                         const FusedMatrix& matrix)
    : shape_(shape), q_(std::move(q)), z_(std::move(z)), matrix_(matrix) {
  std::ostringstream negatives;
  bool any_negative = false;
  rows_.resize(static_cast<std::size_t>(matrix_.side()));
  for (int r = 0; r < matrix_.side(); ++r) {
    const FusedIndex in = matrix_.index_at(r);
    ExactScalar sum(0);
    for (int c = 0; c < matrix_.side(); ++c) {
      const FusedIndex out = matrix_.index_at(c);
      const ExactScalar& value = matrix_.at(in, out);
      if (value.is_zero()) continue;
      if (value.sign() < 0) {
        any_negative = true;
        negatives << " [(" << in.first << "," << in.second << ")->(" << out.first << ","
                  << out.second << ")]=" << value.str();
        continue;
      }
      rows_[static_cast<std::size_t>(r)].emplace_back(out, value);
      sum += value;
    }
    if (!any_negative && sum != ExactScalar(1)) {
      throw DomainError("weight_table: row (" + std::to_string(in.first) + "," +
                        std::to_string(in.second) + ") sums to " + sum.str() + ", expected 1");
    }
  }
  if (any_negative) {
    throw DomainError("weight_table: negative entries at (q=" + q_.str() + ", z=" + z_.str() +
                      "):" + negatives.str());
  }
}

const std::vector<std::pair<FusedIndex, ExactScalar>>& WeightTable::row(FusedIndex in) const {
  return rows_[static_cast<std::size_t>(matrix_.rank(in))];
}

WeightTable weight_table(const BlockShape& shape, const QParams& q, const ExactScalar& z) {
  return WeightTable(shape, q.q, z, closed_form_matrix(shape, z, q));
}

}  // namespace fusedr
