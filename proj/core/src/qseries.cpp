#include "fusedr/qseries.hpp"

#include <sstream>
#include <utility>

namespace fusedr {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

}  // namespace

ExactScalar q_integer(int n, const QParams& q) {
  require(n >= 0, "q_integer: n must be nonnegative, got " + std::to_string(n));
  ExactScalar sum(0);
  ExactScalar power(1);
  for (int i = 0; i < n; ++i) {
    sum += power;
    power *= q.t;
  }
  return sum;
}

ExactScalar q_factorial(int n, const QParams& q) {
  require(n >= 0, "q_factorial: n must be nonnegative, got " + std::to_string(n));
  ExactScalar prod(1);
  for (int i = 1; i <= n; ++i) prod *= q_integer(i, q);
  return prod;
}

ExactScalar q_binomial(int n, int m, const QParams& q) {
  require(n >= 0, "q_binomial: n must be nonnegative, got " + std::to_string(n));
  if (m < 0 || m > n) return ExactScalar(0);
  return q_factorial(n, q) / (q_factorial(m, q) * q_factorial(n - m, q));
}

ExactScalar q_pochhammer(const ExactScalar& a, const ExactScalar& base, int n) {
  require(n >= 0, "q_pochhammer: n must be nonnegative, got " + std::to_string(n));
  ExactScalar prod(1);
  ExactScalar power(1);
  for (int j = 0; j < n; ++j) {
    prod *= ExactScalar(1) - a * power;
    power *= base;
  }
  return prod;
}

ExactScalar q_hahn_weight(int p, int k, const QHahnParams& params) {
  require(0 <= p && p <= k, "q_hahn_weight: need 0 <= p <= k, got p=" + std::to_string(p) +
                                " k=" + std::to_string(k));
  const ExactScalar denom = q_pochhammer(params.nu, params.q.t, k);
  if (denom.is_zero()) {
    throw DomainError("q_hahn_weight: denominator (nu;q^2)_k vanishes at nu=" + params.nu.str() +
                      ", k=" + std::to_string(k));
  }
  if (p == 0) {
    return q_pochhammer(params.mu, params.q.t, k) / denom;
  }
  if (params.mu.is_zero()) {
    // mu^p = 0 zeroes the weight for p > 0; the denominator was checked above
    return ExactScalar(0);
  }
  return q_binomial(k, p, params.q) * params.mu.pow(p) * q_pochhammer(params.mu, params.q.t, k - p) *
         q_pochhammer(params.nu / params.mu, params.q.t, p) / denom;
}

namespace {

void require_kl(int k, int l, int p) {
  require(1 <= k && k <= l, "baxter coefficient: need 1 <= k <= l, got k=" + std::to_string(k) +
                                " l=" + std::to_string(l));
  require(0 <= p && p <= k, "baxter coefficient: need 0 <= p <= k, got p=" + std::to_string(p));
}

// (a0, a1) for the (1, l) family.
std::pair<ExactScalar, ExactScalar> one_block_pair(int l, const ExactScalar& z, const QParams& q) {
  ExactScalar den = q.t - z;
  if (den.is_zero()) throw DomainError("baxter recursion: (q^2 - z) vanishes at z=" + z.str());
  ExactScalar a0 = (q.t - ExactScalar(1)) / den;
  ExactScalar a1 = (ExactScalar(1) - z) / den;
  for (int ell = 2; ell <= l; ++ell) {
    const ExactScalar w = z * q.t.pow(-(ell - 1));
    den = q.t - w;
    if (den.is_zero()) {
      throw DomainError("baxter recursion: (q^2 - z q^{-2(l-1)}) vanishes at l=" +
                        std::to_string(ell));
    }
    const ExactScalar a0n = a0 + a1 * (q.t - ExactScalar(1)) / den;
    const ExactScalar a1n = a1 * (ExactScalar(1) - w) / den;
    a0 = a0n;
    a1 = a1n;
  }
  return {a0, a1};
}

}  // namespace

ExactScalar baxter_coefficient(int k, int l, int p, const ExactScalar& z, const QParams& q) {
  require_kl(k, l, p);
  const ExactScalar t_l = q.t.pow(l);
  ExactScalar num = q_binomial(k, p, q);
  for (int j = 0; j < k - p; ++j) num *= t_l - q.t.pow(j);
  for (int j = 0; j < p; ++j) num *= ExactScalar(1) - z * q.t.pow(j);
  ExactScalar den(1);
  for (int j = 0; j < k; ++j) {
    const ExactScalar factor = t_l - z * q.t.pow(j);
    if (factor.is_zero()) {
      throw DomainError("baxter_coefficient: factor (q^{2l} - z q^{2j}) vanishes at j=" +
                        std::to_string(j) + " (z=" + z.str() + ", q=" + q.q.str() + ")");
    }
    den *= factor;
  }
  return num / den;
}

ExactScalar baxter_coefficient_recursive(int k, int l, int p, const ExactScalar& z,
                                         const QParams& q) {
  require_kl(k, l, p);
  if (k == 1) {
    const auto [a0, a1] = one_block_pair(l, z, q);
    return p == 0 ? a0 : a1;
  }
  const auto [a0_1l, a1_1l] = one_block_pair(l, z, q);
  const ExactScalar shifted = z * q.t;
  const ExactScalar l_int = q_integer(l, q);
  if (p == 0) {
    return q.t.pow(k - 1) * q_integer(l - k + 1, q) / l_int *
           baxter_coefficient_recursive(k - 1, l, 0, shifted, q) * a0_1l;
  }
  if (p == k) {
    return baxter_coefficient_recursive(k - 1, l, k - 1, shifted, q) * a1_1l;
  }
  return baxter_coefficient_recursive(k - 1, l, p - 1, shifted, q) *
             (a1_1l + q_integer(k - p, q) / l_int * a0_1l) +
         baxter_coefficient_recursive(k - 1, l, p, shifted, q) * q.t.pow(k - p - 1) *
             q_integer(l + p - k + 1, q) / l_int * a0_1l;
}

BaxterCoefficients baxter_coefficients(int k, int l, const ExactScalar& z, const QParams& q) {
  BaxterCoefficients out;
  out.k = k;
  out.l = l;
  out.z = z;
  ExactScalar sum(0);
  for (int p = 0; p <= k; ++p) {
    out.values.push_back(baxter_coefficient(k, l, p, z, q));
    sum += out.values.back();
  }
  if (sum != ExactScalar(1)) {
    throw DomainError("baxter_coefficients: values sum to " + sum.str() + ", expected 1");
  }
  return out;
}

}  // namespace fusedr
