#include "fusedr/sampler.hpp"

#include <string>

namespace fusedr {

std::uint64_t SplitMix64::next() {
  state_ += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

SplitMix64 SplitMix64::split() { return SplitMix64(next()); }

namespace {

// bits / 2^64 as an exact rational in [0, 1)
ExactScalar uniform_draw(std::uint64_t bits) {
  mpq_class v;
  mpz_class num;
  mpz_import(num.get_mpz_t(), 1, 1, sizeof(bits), 0, 0, &bits);
  mpz_class den(1);
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), 64);
  v = mpq_class(num, den);
  v.canonicalize();
  return ExactScalar(v);
}

}  // namespace

FusedIndex sample_vertex(const WeightTable& table, FusedIndex in, SplitMix64& rng) {
  const auto& row = table.row(in);
  if (row.empty()) {
    throw DomainError("sample_vertex: empty row for input (" + std::to_string(in.first) + "," +
                      std::to_string(in.second) + ")");
  }
  const ExactScalar u = uniform_draw(rng.next());
  ExactScalar cumulative(0);
  for (const auto& [out, prob] : row) {
    cumulative += prob;
    if (u < cumulative) return out;
  }
  // u < 1 = total mass, so the loop always returns; kept for safety.
  return row.back().first;
}

int SampleGrid::horizontal_at(int x, int y) const {
  return horizontal[static_cast<std::size_t>(y - 1) * (static_cast<std::size_t>(width) + 1) +
                    static_cast<std::size_t>(x)];
}

int SampleGrid::vertical_at(int x, int y) const {
  return vertical[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) +
                  static_cast<std::size_t>(x - 1)];
}

int& SampleGrid::horizontal_ref(int x, int y) {
  return horizontal[static_cast<std::size_t>(y - 1) * (static_cast<std::size_t>(width) + 1) +
                    static_cast<std::size_t>(x)];
}

int& SampleGrid::vertical_ref(int x, int y) {
  return vertical[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) +
                  static_cast<std::size_t>(x - 1)];
}

SampleGrid sample_grid(const WeightTable& table, int width, int height,
                       const GridBoundary& boundary, std::uint64_t seed) {
  if (width < 1 || height < 1) throw DomainError("sample_grid: grid must be at least 1x1");
  if (boundary.left.size() != static_cast<std::size_t>(height) ||
      boundary.bottom.size() != static_cast<std::size_t>(width)) {
    throw DomainError("sample_grid: boundary sizes must match grid dimensions");
  }
  const int k = table.shape().k;
  const int l = table.shape().l;
  for (int v : boundary.bottom) {
    if (v < 0 || v > k) {
      throw DomainError("sample_grid: bottom boundary value " + std::to_string(v) +
                        " outside [0," + std::to_string(k) + "]");
    }
  }
  for (int h : boundary.left) {
    if (h < 0 || h > l) {
      throw DomainError("sample_grid: left boundary value " + std::to_string(h) +
                        " outside [0," + std::to_string(l) + "]");
    }
  }

  SampleGrid grid;
  grid.width = width;
  grid.height = height;
  grid.seed = seed;
  grid.rng = std::string(kRngAlgorithm);
  grid.horizontal.assign(static_cast<std::size_t>(width + 1) * static_cast<std::size_t>(height), 0);
  grid.vertical.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height + 1), 0);

  for (int y = 1; y <= height; ++y) {
    grid.horizontal_ref(0, y) = boundary.left[static_cast<std::size_t>(y - 1)];
  }
  for (int x = 1; x <= width; ++x) {
    grid.vertical_ref(x, 0) = boundary.bottom[static_cast<std::size_t>(x - 1)];
  }

  SplitMix64 rng(seed);
  for (int y = 1; y <= height; ++y) {
    for (int x = 1; x <= width; ++x) {
      const FusedIndex in{grid.vertical_at(x, y - 1), grid.horizontal_at(x - 1, y)};
      const FusedIndex out = sample_vertex(table, in, rng);
      grid.vertical_ref(x, y) = out.first;
      grid.horizontal_ref(x, y) = out.second;
    }
  }
  return grid;
}

}  // namespace fusedr
