#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "fusedr/weights.hpp"

namespace fusedr {

/// Identifier of the generator recorded in sampler output; runs are
/// reproducible across implementations only when the same generator is used.
inline constexpr std::string_view kRngAlgorithm = "splitmix64";

/// splitmix64: 64-bit state, one output per step.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Independent stream derived from the current state.
  SplitMix64 split();

 private:
  std::uint64_t state_;
};

/// One step of the vertex chain: draws from the row distribution of `in` by
/// exact cumulative comparison against the rational draw (64 random bits) /
/// 2^64. No floating point enters the decision.
FusedIndex sample_vertex(const WeightTable& table, FusedIndex in, SplitMix64& rng);

struct GridBoundary {
  std::vector<int> left;    // horizontal in-values, one per row (size = height)
  std::vector<int> bottom;  // vertical in-values, one per column (size = width)
};

/// Sampled quadrant configuration. Edge layout:
///   horizontal_at(x, y), x in 0..width,  y in 1..height  (x = 0 is the left boundary)
///   vertical_at(x, y),   x in 1..width,  y in 0..height  (y = 0 is the bottom boundary)
/// At every vertex, in-total equals out-total.
struct SampleGrid {
  int width = 0;
  int height = 0;
  std::uint64_t seed = 0;
  std::string rng;  // algorithm identifier
  std::vector<int> horizontal;  // (width+1) * height, row-major in y then x
  std::vector<int> vertical;    // width * (height+1), row-major in y then x

  int horizontal_at(int x, int y) const;
  int vertical_at(int x, int y) const;
  int& horizontal_ref(int x, int y);
  int& vertical_ref(int x, int y);
};

/// Row-major sweep: vertex (x, y) consumes (bottom vertical, left horizontal)
/// as the pair (first = vertical in [0,k], second = horizontal in [0,l]) and
/// emits (top vertical, right horizontal) drawn from the table row.
SampleGrid sample_grid(const WeightTable& table, int width, int height,
                       const GridBoundary& boundary, std::uint64_t seed);

}  // namespace fusedr
