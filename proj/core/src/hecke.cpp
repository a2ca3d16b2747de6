#include "fusedr/hecke.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace fusedr {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

}  // namespace

BlockShape::BlockShape(int k_, int l_, int N) : k(k_), l(l_), local_dim(N) {
  require(k >= 1, "BlockShape: k must be >= 1, got " + std::to_string(k));
  require(l >= k, "BlockShape: need l >= k, got k=" + std::to_string(k) +
                      " l=" + std::to_string(l));
  require(N >= 2, "BlockShape: local dimension must be >= 2");
}

TensorOperator two_site_stochastic(const QParams& q, int N) {
  TensorSpace space(N, 2);
  TensorOperator op(space);
  const ExactScalar one(1);
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      const StateIndex col = encode_state({i, j}, space);
      const StateIndex swapped = encode_state({j, i}, space);
      if (i == j) {
        op.set_entry(col, col, one);
      } else if (i > j) {
        op.set_entry(swapped, col, q.t);
        op.set_entry(col, col, one - q.t);
      } else {
        op.set_entry(swapped, col, one);
      }
    }
  }
  return op;
}

TensorOperator two_site_base(const QParams& q, int N) {
  TensorSpace space(N, 2);
  TensorOperator op(space);
  const ExactScalar hecke_unit = q.q - ExactScalar(1) / q.q;
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      const StateIndex col = encode_state({i, j}, space);
      const StateIndex swapped = encode_state({j, i}, space);
      if (i == j) {
        op.set_entry(col, col, q.q);
      } else if (i < j) {
        op.set_entry(swapped, col, ExactScalar(1));
        op.set_entry(col, col, hecke_unit);
      } else {
        op.set_entry(swapped, col, ExactScalar(1));
      }
    }
  }
  return op;
}

TensorOperator generator(int i, const TensorSpace& space, const QParams& q,
                         GeneratorFlavor flavor) {
  require(1 <= i && i <= space.sites - 1,
          "generator: site index " + std::to_string(i) + " outside 1.." +
              std::to_string(space.sites - 1));
  const TensorOperator two = flavor == GeneratorFlavor::Stochastic
                                 ? two_site_stochastic(q, space.local_dim)
                                 : two_site_base(q, space.local_dim);
  return embed(two, i - 1, space);
}

TensorOperator baxterised_generator(int i, const TensorSpace& space, const QParams& q,
                                    const ExactScalar& u, GeneratorFlavor flavor) {
  const TensorOperator g = generator(i, space, q, flavor);
  TensorOperator id = TensorOperator::identity(space);
  if (flavor == GeneratorFlavor::Base) {
    const ExactScalar den = ExactScalar(1) - u;
    if (den.is_zero()) {
      throw DomainError("baxterised_generator: factor (1 - u) vanishes at u=" + u.str());
    }
    TensorOperator out = g;
    id.scale((q.q - ExactScalar(1) / q.q) / den);
    out -= id;
    return out;
  }
  const ExactScalar den = q.t - u;
  if (den.is_zero()) {
    throw DomainError("baxterised_generator: factor (q^2 - u) vanishes at u=" + u.str() +
                      " (q=" + q.q.str() + ")");
  }
  TensorOperator out = g;
  out.scale((ExactScalar(1) - u) / den);
  id.scale((q.t - ExactScalar(1)) / den);
  out += id;
  return out;
}

namespace {

TensorOperator symmetrizer_product(int i, int j, const TensorSpace& space, const QParams& q) {
  TensorOperator result = TensorOperator::identity(space);
  for (int a = i; a <= j - 1; ++a) {
    // inner factor R_a(q^{-2(a-i+1)}) R_{a-1}(q^{-2(a-i)}) ... R_i(q^{-2}),
    // rightmost applied first
    for (int b = a; b >= i; --b) {
      result = result * baxterised_generator(b, space, q, q.t.pow(-(b - i + 1)));
    }
  }
  return result;
}

// Adjacent-transposition word sorting `perm`; positions are 1-based.
std::vector<int> bubble_word(std::vector<int> perm) {
  std::vector<int> word;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t x = 0; x + 1 < perm.size(); ++x) {
      if (perm[x] > perm[x + 1]) {
        std::swap(perm[x], perm[x + 1]);
        word.push_back(static_cast<int>(x) + 1);
        changed = true;
      }
    }
  }
  return word;
}

TensorOperator symmetrizer_sum(int i, int j, const TensorSpace& space, const QParams& q) {
  const int m = j - i + 1;
  TensorOperator total(space);
  const ExactScalar prefactor = q.q.pow(static_cast<long>(m) * (m - 1)) / q_factorial(m, q);
  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    const std::vector<int> word = bubble_word(perm);
    TensorOperator sigma_w = TensorOperator::identity(space);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      sigma_w = generator(i + *it - 1, space, q) * sigma_w;
    }
    sigma_w.scale(prefactor * q.t.pow(-static_cast<long>(word.size())));
    total += sigma_w;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

TensorOperator symmetrizer_recursion(int i, int j, const TensorSpace& space, const QParams& q) {
  if (j == i) return TensorOperator::identity(space);
  const TensorOperator prev = symmetrizer_recursion(i, j - 1, space, q);
  TensorOperator total(space);
  for (int a = i; a <= j; ++a) {
    TensorOperator term = prev;
    for (int b = j - 1; b >= a; --b) {
      term = generator(b, space, q) * term;
    }
    term.scale(q.t.pow(a - i));
    total += term;
  }
  total.scale(ExactScalar(1) / q_integer(j - i + 1, q));
  return total;
}

}  // namespace

TensorOperator symmetrizer(int i, int j, const TensorSpace& space, const QParams& q,
                           SymmetrizerMethod method) {
  require(1 <= i && i <= j && j <= space.sites,
          "symmetrizer: need 1 <= i <= j <= n, got i=" + std::to_string(i) +
              " j=" + std::to_string(j) + " n=" + std::to_string(space.sites));
  switch (method) {
    case SymmetrizerMethod::Product:
      return symmetrizer_product(i, j, space, q);
    case SymmetrizerMethod::Sum:
      return symmetrizer_sum(i, j, space, q);
    case SymmetrizerMethod::Recursion:
      return symmetrizer_recursion(i, j, space, q);
  }
  throw DomainError("symmetrizer: unknown method");
}

TensorOperator projector(const BlockShape& shape, ProjectorOrientation orientation,
                         const TensorSpace& space, const QParams& q) {
  require(space.sites == shape.sites(), "projector: space must have k+l sites");
  require(space.local_dim == shape.local_dim, "projector: local dimension mismatch");
  const int split = orientation == ProjectorOrientation::KL ? shape.k : shape.l;
  return symmetrizer(1, split, space, q) * symmetrizer(split + 1, shape.sites(), space, q);
}

namespace {

std::vector<int> braiding_word(const BlockShape& shape, int p) {
  std::vector<int> word;
  for (int g = 1; g <= p; ++g) {
    for (int idx = shape.k - g + 1; idx <= shape.l + p - g; ++idx) word.push_back(idx);
  }
  return word;
}

}  // namespace

TensorOperator partial_braiding(const BlockShape& shape, int p, const TensorSpace& space,
                                const QParams& q) {
  require(0 <= p && p <= shape.k,
          "partial_braiding: need 0 <= p <= k, got p=" + std::to_string(p));
  require(space.sites == shape.sites(), "partial_braiding: space must have k+l sites");
  TensorOperator mid = TensorOperator::identity(space);
  for (int idx : braiding_word(shape, p)) {
    mid = mid * generator(idx, space, q);
  }
  return projector(shape, ProjectorOrientation::KL, space, q) * mid *
         projector(shape, ProjectorOrientation::LK, space, q);
}

TensorOperator fused_r_product(const BlockShape& shape, const ExactScalar& u,
                               const TensorSpace& space, const QParams& q) {
  require(space.sites == shape.sites(), "fused_r_product: space must have k+l sites");
  TensorOperator mid = TensorOperator::identity(space);
  for (int a = shape.k; a >= 1; --a) {
    for (int m = 1; m <= shape.l; ++m) {
      const int site = a + m - 1;
      const ExactScalar spectral = u * q.t.pow(-(m - a));
      if (spectral == q.t) {
        throw DomainError("fused_r_product: factor (q^2 - u q^{-2(m-a)}) vanishes at a=" +
                          std::to_string(a) + ", m=" + std::to_string(m) + " (u=" + u.str() +
                          ", q=" + q.q.str() + ")");
      }
      mid = mid * baxterised_generator(site, space, q, spectral);
    }
  }
  return projector(shape, ProjectorOrientation::KL, space, q) * mid *
         projector(shape, ProjectorOrientation::LK, space, q);
}

TensorOperator fused_r_baxterised(const BlockShape& shape, const ExactScalar& u,
                                  const TensorSpace& space, const QParams& q) {
  require(space.sites == shape.sites(), "fused_r_baxterised: space must have k+l sites");
  TensorOperator total(space);
  for (int p = 0; p <= shape.k; ++p) {
    TensorOperator term = partial_braiding(shape, p, space, q);
    term.scale(baxter_coefficient(shape.k, shape.l, p, u, q));
    total += term;
  }
  return total;
}

TensorOperator embed(const TensorOperator& sub, int site_offset, const TensorSpace& ambient) {
  const TensorSpace& small = sub.space();
  require(small.local_dim == ambient.local_dim, "embed: local dimension mismatch");
  require(site_offset >= 0 && site_offset + small.sites <= ambient.sites,
          "embed: sub-operator does not fit at offset " + std::to_string(site_offset));
  TensorOperator out(ambient);
  for (StateIndex c = 0; c < ambient.dimension; ++c) {
    const std::vector<int> digits = decode_state(c, ambient);
    std::vector<int> sub_digits(digits.begin() + site_offset,
                                digits.begin() + site_offset + small.sites);
    const StateIndex sub_col = encode_state(sub_digits, small);
    auto it = sub.columns().find(sub_col);
    if (it == sub.columns().end()) continue;
    for (const auto& [sub_row, value] : it->second) {
      const std::vector<int> row_digits = decode_state(sub_row, small);
      std::vector<int> target = digits;
      std::copy(row_digits.begin(), row_digits.end(), target.begin() + site_offset);
      out.set_entry(encode_state(target, ambient), c, value);
    }
  }
  return out;
}

}  // namespace fusedr
