#pragma once

#include <vector>

#include "fusedr/rational.hpp"

namespace fusedr {

/// [n]_{q^2} = 1 + q^2 + ... + q^{2(n-1)}, computed as the explicit sum so
/// q = ±1 are valid inputs. Equals (1 - q^{2n})/(1 - q^2) whenever q^2 != 1.
ExactScalar q_integer(int n, const QParams& q);

/// [n]!_{q^2} = [1][2]...[n]; the empty product is 1.
ExactScalar q_factorial(int n, const QParams& q);

/// q^2-binomial [n choose m]_{q^2}; zero when m < 0 or m > n.
ExactScalar q_binomial(int n, int m, const QParams& q);

/// (a; base)_n = prod_{j=0}^{n-1} (1 - a base^j); the empty product is 1.
ExactScalar q_pochhammer(const ExactScalar& a, const ExactScalar& base, int n);

struct QHahnParams {
  ExactScalar mu;
  ExactScalar nu;
  QParams q;
};

/// phi(p|k) = binom(k,p)_{q^2} mu^p (mu;q^2)_{k-p} (nu/mu;q^2)_p / (nu;q^2)_k.
/// These weights sum to 1 over p = 0..k. Throws DomainError naming the
/// vanishing factor when the denominator Pochhammer is zero.
ExactScalar q_hahn_weight(int p, int k, const QHahnParams& params);

/// Baxterisation coefficient a_p^{(k,l)}(z), closed form:
///   binom(k,p)_{q^2} (q^{2l}-1)...(q^{2l}-q^{2(k-p-1)}) (1-z)...(1-zq^{2(p-1)})
///     / [(q^{2l}-z)(q^{2l}-zq^2)...(q^{2l}-zq^{2(k-1)})].
/// Requires 1 <= k <= l and 0 <= p <= k; a vanishing denominator factor
/// throws DomainError identifying its index j.
ExactScalar baxter_coefficient(int k, int l, int p, const ExactScalar& z, const QParams& q);

/// Same value computed purely by the two-term recursion from the (1,l)
/// family; serves as an implementation-independent cross-check of
/// baxter_coefficient.
ExactScalar baxter_coefficient_recursive(int k, int l, int p, const ExactScalar& z,
                                         const QParams& q);

/// The full coefficient vector (a_0, ..., a_k) at fixed (k, l, z, q).
/// Invariant: the values sum to exactly 1.
struct BaxterCoefficients {
  int k = 0;
  int l = 0;
  ExactScalar z;
  std::vector<ExactScalar> values;
};

BaxterCoefficients baxter_coefficients(int k, int l, const ExactScalar& z, const QParams& q);

}  // namespace fusedr
