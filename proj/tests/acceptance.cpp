// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exits nonzero if any fail.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <vector>

#include "fusedr/sampler.hpp"
#include "fusedr/serialize.hpp"
#include "fusedr/verify.hpp"

using namespace fusedr;

namespace {

struct Draw {
  SplitMix64 rng;
  explicit Draw(std::uint64_t seed) : rng(seed) {}
  ExactScalar q_unit() {
    while (true) {
      const long a = 1 + static_cast<long>(rng.next() % 100);
      const long b = 1 + static_cast<long>(rng.next() % 100);
      if (a == b) continue;
      return a < b ? ExactScalar(a, b) : ExactScalar(b, a);
    }
  }
  ExactScalar positive() {
    return ExactScalar(1 + static_cast<long>(rng.next() % 100),
                       1 + static_cast<long>(rng.next() % 100));
  }
};

// draw parameters until `body` evaluates without a guard violation
template <typename Body>
std::optional<std::string> with_admissible_draws(Draw& draw, int points, Body body) {
  for (int i = 0; i < points; ++i) {
    int attempts = 0;
    while (true) {
      try {
        if (auto failure = body(draw)) return failure;
        break;
      } catch (const DomainError&) {
        if (++attempts > 200) throw;
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> criterion_golden() {
  for (const auto& [qd, zd] : std::vector<std::pair<long, long>>{{2, 8}, {3, 81}}) {
    const QParams q{ExactScalar(1, qd)};
    const ExactScalar z(zd);
    const BlockShape shape(2, 2, 2);
    const TensorSpace space(2, 4);
    if (!(reduce_operator(partial_braiding(shape, 1, space, q), shape, q) ==
          reference_sigma_2_2_1(q))) {
      return "Sigma^(2,2;1) mismatch at q=1/" + std::to_string(qd);
    }
    if (!(reduce_operator(partial_braiding(shape, 2, space, q), shape, q) ==
          reference_sigma_2_2_2(q))) {
      return "Sigma^(2,2;2) mismatch at q=1/" + std::to_string(qd);
    }
    if (!(reduce_operator(fused_r_product(shape, z, space, q), shape, q) ==
          reference_r_2_2(q, z))) {
      return "R^(2,2) mismatch at q=1/" + std::to_string(qd) + ", z=" + z.str();
    }
  }
  return std::nullopt;
}

std::optional<std::string> criterion_theorem() {
  Draw draw(101);
  for (const auto& [k, l] : std::vector<std::pair<int, int>>{
           {1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 3}}) {
    const BlockShape shape(k, l, 2);
    const TensorSpace space(2, k + l);
    auto failure = with_admissible_draws(draw, 5, [&](Draw& d) -> std::optional<std::string> {
      const QParams q{d.q_unit()};
      const ExactScalar u = d.positive();
      if (!(fused_r_product(shape, u, space, q) == fused_r_baxterised(shape, u, space, q))) {
        return "product != baxterised at (k,l)=(" + std::to_string(k) + "," + std::to_string(l) +
               "), q=" + q.q.str() + ", u=" + u.str();
      }
      return std::nullopt;
    });
    if (failure) return failure;
  }
  return std::nullopt;
}

std::optional<std::string> criterion_proposition() {
  Draw draw(202);
  for (const auto& [k, l] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}, {2, 3}}) {
    const BlockShape shape(k, l, 2);
    const TensorSpace space(2, k + l);
    auto failure = with_admissible_draws(draw, 5, [&](Draw& d) -> std::optional<std::string> {
      const QParams q{d.q_unit()};
      const ExactScalar z = d.positive();
      if (!(closed_form_matrix(shape, z, q) ==
            reduce_operator(fused_r_product(shape, z, space, q), shape, q))) {
        return "closed form != reduced product at (k,l)=(" + std::to_string(k) + "," +
               std::to_string(l) + "), q=" + q.q.str() + ", z=" + z.str();
      }
      return std::nullopt;
    });
    if (failure) return failure;
  }
  return std::nullopt;
}

std::optional<std::string> criterion_coefficients() {
  Draw draw(303);
  for (int k = 1; k <= 6; ++k) {
    for (int l = k; l <= 6; ++l) {
      auto failure = with_admissible_draws(draw, 20, [&](Draw& d) -> std::optional<std::string> {
        const QParams q{d.q_unit()};
        const ExactScalar z = d.positive();
        ExactScalar sum(0);
        for (int p = 0; p <= k; ++p) {
          const ExactScalar closed = baxter_coefficient(k, l, p, z, q);
          sum += closed;
          if (baxter_coefficient_recursive(k, l, p, z, q) != closed) {
            return "recursion != closed at (k,l,p)=(" + std::to_string(k) + "," +
                   std::to_string(l) + "," + std::to_string(p) + ")";
          }
          const QHahnParams hahn{q.t.pow(-l), z * q.t.pow(-l), q};
          if (q_hahn_weight(p, k, hahn) != closed) {
            return "q-Hahn != closed at (k,l,p)=(" + std::to_string(k) + "," +
                   std::to_string(l) + "," + std::to_string(p) + ")";
          }
        }
        if (sum != ExactScalar(1)) {
          return "sum != 1 at (k,l)=(" + std::to_string(k) + "," + std::to_string(l) + ")";
        }
        return std::nullopt;
      });
      if (failure) return failure;
    }
  }
  return std::nullopt;
}

std::optional<std::string> criterion_relations() {
  Draw draw(404);
  // Hecke + braid + distant commutation, N = 2,3, n <= 4, 10 random q each
  for (int N : {2, 3}) {
    for (int n : {3, 4}) {
      for (int rep = 0; rep < 10; ++rep) {
        const QParams q{draw.q_unit()};
        const TensorSpace space(N, n);
        const TensorOperator id = TensorOperator::identity(space);
        for (int i = 1; i <= n - 1; ++i) {
          const TensorOperator g = generator(i, space, q);
          TensorOperator rhs = g;
          rhs.scale(ExactScalar(1) - q.t);
          TensorOperator qid = id;
          qid.scale(q.t);
          rhs += qid;
          if (!(g * g == rhs)) return "Hecke relation fails at N=" + std::to_string(N);
        }
        for (int i = 1; i + 1 <= n - 1; ++i) {
          const TensorOperator a = generator(i, space, q);
          const TensorOperator b = generator(i + 1, space, q);
          if (!(a * b * a == b * a * b)) return "braid relation fails at N=" + std::to_string(N);
        }
        for (int i = 1; i <= n - 1; ++i) {
          for (int j = i + 2; j <= n - 1; ++j) {
            if (!(generator(i, space, q) * generator(j, space, q) ==
                  generator(j, space, q) * generator(i, space, q))) {
              return "distant commutation fails";
            }
          }
        }
      }
    }
  }
  // symmetrizer triad + idempotency up to 4-site ranges
  for (const auto& [i, j, n] : std::vector<std::array<int, 3>>{
           {1, 2, 2}, {1, 3, 3}, {1, 4, 4}, {2, 4, 4}}) {
    const QParams q{draw.q_unit()};
    const TensorSpace space(2, n);
    const TensorOperator p = symmetrizer(i, j, space, q, SymmetrizerMethod::Product);
    if (!(symmetrizer(i, j, space, q, SymmetrizerMethod::Sum) == p)) {
      return "symmetrizer sum method differs on [" + std::to_string(i) + "," + std::to_string(j) + "]";
    }
    if (!(symmetrizer(i, j, space, q, SymmetrizerMethod::Recursion) == p)) {
      return "symmetrizer recursion method differs";
    }
    if (!(p * p == p)) return "symmetrizer not idempotent";
    for (int a = i; a <= j - 1; ++a) {
      const TensorOperator g = generator(a, space, q);
      if (!(g * p == p) || !(p * g == p)) return "absorption fails";
    }
  }
  // projector intertwining
  Draw draw2(405);
  for (const auto& [k, l] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}}) {
    const BlockShape shape(k, l, 2);
    const TensorSpace space(2, k + l);
    auto failure = with_admissible_draws(draw2, 2, [&](Draw& d) -> std::optional<std::string> {
      const QParams q{d.q_unit()};
      const ExactScalar u = d.positive();
      const TensorOperator r = fused_r_product(shape, u, space, q);
      if (!(projector(shape, ProjectorOrientation::KL, space, q) * r == r) ||
          !(r * projector(shape, ProjectorOrientation::LK, space, q) == r)) {
        return "intertwining fails at (k,l)=(" + std::to_string(k) + "," + std::to_string(l) + ")";
      }
      return std::nullopt;
    });
    if (failure) return failure;
  }
  return std::nullopt;
}

std::string ybe_orientation;  // recorded by criterion 6

std::optional<std::string> criterion_ybe() {
  Draw draw(506);
  // base YBE, n = 3, N = 2, 3
  for (int N : {2, 3}) {
    const TensorSpace space(N, 3);
    auto failure = with_admissible_draws(draw, 3, [&](Draw& d) -> std::optional<std::string> {
      const QParams q{d.q_unit()};
      const ExactScalar u = d.positive();
      const ExactScalar v = d.positive();
      const auto factor = [&](int i, const ExactScalar& s) {
        return baxterised_generator(i, space, q, s, GeneratorFlavor::Base);
      };
      const TensorOperator lhs = factor(1, u) * factor(2, u * v) * factor(1, v);
      if (lhs == factor(2, v) * factor(1, u * v) * factor(2, u)) {
        ybe_orientation = "standard";
        return std::nullopt;
      }
      if (lhs == factor(2, v) * factor(1, u * v) * factor(2, v)) {
        ybe_orientation = "repeated-v";
        return std::nullopt;
      }
      return std::string("base YBE fails in both orientations at N=") + std::to_string(N);
    });
    if (failure) return failure;
  }
  // fused braided YBE, k = 1 (dim 8) and k = 2 (dim 64)
  for (int k : {1, 2}) {
    const BlockShape shape(k, k, 2);
    const TensorSpace block_space(2, 2 * k);
    const TensorSpace space(2, 3 * k);
    auto failure = with_admissible_draws(draw, 3, [&](Draw& d) -> std::optional<std::string> {
      const QParams q{d.q_unit()};
      const ExactScalar u = d.positive();
      const ExactScalar v = d.positive();
      const auto factor = [&](int i, const ExactScalar& s) {
        return embed(fused_r_product(shape, s, block_space, q), (i - 1) * k, space);
      };
      const TensorOperator lhs = factor(1, u) * factor(2, u * v) * factor(1, v);
      if (lhs == factor(2, v) * factor(1, u * v) * factor(2, u)) {
        ybe_orientation = "standard";
        return std::nullopt;
      }
      if (lhs == factor(2, v) * factor(1, u * v) * factor(2, v)) {
        ybe_orientation = "repeated-v";
        return std::nullopt;
      }
      return std::string("fused YBE fails in both orientations at k=") + std::to_string(k);
    });
    if (failure) return failure;
  }
  return std::nullopt;
}

std::optional<std::string> criterion_stochasticity() {
  Draw draw(607);
  for (const auto& [k, l] : std::vector<std::pair<int, int>>{
           {1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 3}}) {
    const BlockShape shape(k, l, 2);
    const TensorSpace space(2, k + l);
    auto failure = with_admissible_draws(draw, 2, [&](Draw& d) -> std::optional<std::string> {
      const QParams q{d.q_unit()};
      const ExactScalar u = d.positive();
      const auto check = [&](const TensorOperator& op, const char* name)
          -> std::optional<std::string> {
        if (!op.is_stochastic()) {
          return std::string(name) + " violates the all-ones covector contract";
        }
        return std::nullopt;
      };
      for (int i = 1; i <= space.sites - 1; ++i) {
        if (auto f = check(generator(i, space, q), "generator")) return f;
        if (auto f = check(baxterised_generator(i, space, q, u), "baxterised generator")) return f;
      }
      if (auto f = check(symmetrizer(1, space.sites, space, q), "symmetrizer")) return f;
      if (auto f = check(projector(shape, ProjectorOrientation::KL, space, q), "P^(k,l)")) return f;
      if (auto f = check(projector(shape, ProjectorOrientation::LK, space, q), "P^(l,k)")) return f;
      for (int p = 0; p <= k; ++p) {
        if (auto f = check(partial_braiding(shape, p, space, q), "partial braiding")) return f;
      }
      const TensorOperator r = fused_r_product(shape, u, space, q);
      if (auto f = check(r, "fused R")) return f;
      const FusedMatrix reduced = reduce_operator(r, shape, q);
      if (!reduced.is_row_stochastic()) return std::string("fused matrix row sums differ from 1");
      return std::nullopt;
    });
    if (failure) return failure;
  }
  // base YBE operators of criterion 6 are not stochastic by design; the
  // contract covers the stochastic family only.
  return std::nullopt;
}

std::optional<std::string> criterion_sampler() {
  const WeightTable table = weight_table(BlockShape(1, 1, 2), QParams(ExactScalar(1, 2)),
                                         ExactScalar(2));
  SplitMix64 rng(42);
  const int draws = 100000;
  int moved = 0;
  for (int i = 0; i < draws; ++i) {
    if (sample_vertex(table, {0, 1}, rng) == FusedIndex{1, 0}) ++moved;
  }
  const double freq = static_cast<double>(moved) / draws;
  const double exact = 1.0 / 7.0;
  if (std::abs(freq - exact) > 0.01) {
    std::ostringstream msg;
    msg << "empirical frequency " << freq << " deviates from 1/7 by more than 0.01";
    return msg.str();
  }
  GridBoundary boundary;
  boundary.left.assign(20, 1);
  boundary.bottom.assign(20, 0);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const SampleGrid grid = sample_grid(table, 20, 20, boundary, seed);
    for (int y = 1; y <= 20; ++y) {
      for (int x = 1; x <= 20; ++x) {
        if (grid.vertical_at(x, y - 1) + grid.horizontal_at(x - 1, y) !=
            grid.vertical_at(x, y) + grid.horizontal_at(x, y)) {
          return "conservation fails at seed " + std::to_string(seed);
        }
      }
    }
  }
  return std::nullopt;
}

struct Criterion {
  std::string name;
  double time_limit_seconds;
  std::function<std::optional<std::string>()> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"criterion-1-golden-9x9", 5.0, criterion_golden},
      {"criterion-2-theorem-equivalence", 60.0, criterion_theorem},
      {"criterion-3-proposition-equivalence", 60.0, criterion_proposition},
      {"criterion-4-coefficient-battery", 5.0, criterion_coefficients},
      {"criterion-5-relation-battery", 60.0, criterion_relations},
      {"criterion-6-yang-baxter", 120.0, criterion_ybe},
      {"criterion-7-stochasticity", 60.0, criterion_stochasticity},
      {"criterion-8-sampler", 30.0, criterion_sampler},
  };
  int failures = 0;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::optional<std::string> failure;
    try {
      failure = criterion.body();
    } catch (const std::exception& e) {
      failure = std::string("unexpected error: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!failure && seconds > criterion.time_limit_seconds) {
      std::ostringstream msg;
      msg << "runtime " << seconds << "s exceeds limit " << criterion.time_limit_seconds << "s";
      failure = msg.str();
    }
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    if (failure) {
      ++failures;
      line << "FAIL " << criterion.name << " (" << seconds << "s): " << *failure;
    } else {
      line << "PASS " << criterion.name << " (" << seconds << "s)";
      if (criterion.name == "criterion-6-yang-baxter") {
        line << " [orientation: " << ybe_orientation << "]";
      }
    }
    std::cout << line.str() << std::endl;
  }
  if (failures == 0) {
    std::cout << "all 8 acceptance criteria passed" << std::endl;
  } else {
    std::cout << failures << " acceptance criteria FAILED" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
