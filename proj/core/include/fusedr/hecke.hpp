#pragma once

#include "fusedr/qseries.hpp"
#include "fusedr/tensor.hpp"

namespace fusedr {

/// Generator flavor: the stochastic representation (columns sum to 1) or
/// the base Hecke representation used for the Yang-Baxter cross-check.
enum class GeneratorFlavor { Stochastic, Base };

enum class SymmetrizerMethod { Product, Sum, Recursion };

enum class ProjectorOrientation { KL, LK };

/// Fused block sizes: k strands fused in the first block, l in the second,
/// acting on N-dimensional local spaces over n = k + l sites.
struct BlockShape {
  int k = 1;
  int l = 1;
  int local_dim = 2;

  BlockShape(int k_, int l_, int N = 2);
  int sites() const { return k + l; }
};

/// Stochastic two-site matrix on (C^N)^{x2}. Image of e_i (x) e_j:
///   i = j : fixed;   i > j : q^2 swap + (1-q^2) stay;   i < j : swap.
TensorOperator two_site_stochastic(const QParams& q, int N);

/// Non-stochastic two-site Hecke matrix: e_i(x)e_j -> q e_i(x)e_j (i = j),
/// e_j(x)e_i + (q - q^{-1}) e_i(x)e_j (i < j), e_j(x)e_i (i > j).
TensorOperator two_site_base(const QParams& q, int N);

/// Generator at site i (1-based): the two-site matrix on sites (i, i+1),
/// identity elsewhere.
TensorOperator generator(int i, const TensorSpace& space, const QParams& q,
                         GeneratorFlavor flavor = GeneratorFlavor::Stochastic);

/// Baxterised generator. Stochastic: ((1-u)/(q^2-u)) sigma_i + (q^2-1)/(q^2-u);
/// base: sigma_i - (q - q^{-1})/(1-u). Degenerate spectral points throw,
/// naming the vanishing factor.
TensorOperator baxterised_generator(int i, const TensorSpace& space, const QParams& q,
                                    const ExactScalar& u,
                                    GeneratorFlavor flavor = GeneratorFlavor::Stochastic);

/// Stochastic symmetrizer S_[i,j] by the requested construction. The three
/// methods agree exactly; Product needs q^2 != q^{-2m} for m = 1..j-i.
TensorOperator symmetrizer(int i, int j, const TensorSpace& space, const QParams& q,
                           SymmetrizerMethod method = SymmetrizerMethod::Product);

/// P^(k,l) = S_[1,k] S_[k+1,k+l]  (KL), or P^(l,k) = S_[1,l] S_[l+1,k+l] (LK).
TensorOperator projector(const BlockShape& shape, ProjectorOrientation orientation,
                         const TensorSpace& space, const QParams& q);

/// Partial elementary braiding Sigma^(k,l;p):
///   P^(k,l) (sigma_k...sigma_{l+p-1})(sigma_{k-1}...sigma_{l+p-2})...
///           (sigma_{k-p+1}...sigma_l) P^(l,k),
/// with the rightmost factor applied first. p = 0 gives P^(k,l) P^(l,k).
TensorOperator partial_braiding(const BlockShape& shape, int p, const TensorSpace& space,
                                const QParams& q);

/// Fused R-matrix by the projected ordered product: blocks a = k..1 left to
/// right, block a being R_a(u q^{-2(1-a)}) R_{a+1}(u q^{-2(2-a)}) ...
/// R_{a+l-1}(u q^{-2(l-a)}), sandwiched between P^(k,l) and P^(l,k).
TensorOperator fused_r_product(const BlockShape& shape, const ExactScalar& u,
                               const TensorSpace& space, const QParams& q);

/// Fused R-matrix as the coefficient-weighted sum of partial braidings:
/// sum_p a_p^{(k,l)}(u) Sigma^(k,l;p). Agrees exactly with fused_r_product.
TensorOperator fused_r_baxterised(const BlockShape& shape, const ExactScalar& u,
                                  const TensorSpace& space, const QParams& q);

/// Embed an operator into a larger space, acting on `sub.sites` consecutive
/// sites starting at `site_offset` (0-based), identity elsewhere.
TensorOperator embed(const TensorOperator& sub, int site_offset, const TensorSpace& ambient);

}  // namespace fusedr
