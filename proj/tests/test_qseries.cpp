#include <doctest.h>

#include "fusedr/qseries.hpp"
#include "fusedr/sampler.hpp"

using namespace fusedr;

namespace {

QParams qp(long num, long den) { return QParams(ExactScalar(num, den)); }

ExactScalar frac(long num, long den) { return ExactScalar(num, den); }

// deterministic small rationals for property checks
struct Draw {
  SplitMix64 rng{987654321};
  ExactScalar q_unit() {
    while (true) {
      long a = 1 + static_cast<long>(rng.next() % 40);
      long b = 1 + static_cast<long>(rng.next() % 40);
      if (a == b) continue;
      return a < b ? ExactScalar(a, b) : ExactScalar(b, a);
    }
  }
  ExactScalar positive() {
    return ExactScalar(1 + static_cast<long>(rng.next() % 60),
                       1 + static_cast<long>(rng.next() % 20));
  }
};

}  // namespace

TEST_CASE("exact scalar basics") {
  CHECK(frac(2, 4).str() == "1/2");
  CHECK(frac(-2, 4).str() == "-1/2");
  CHECK(frac(6, 3).str() == "2");
  CHECK(ExactScalar::parse("3/7") == frac(3, 7));
  CHECK(ExactScalar::parse("-12") == ExactScalar(-12));
  CHECK_THROWS_AS(ExactScalar::parse("1.5"), DomainError);
  CHECK_THROWS_AS(ExactScalar::parse("1/0"), DomainError);
  CHECK_THROWS_AS(ExactScalar::parse("3/"), DomainError);
  CHECK_THROWS_AS(ExactScalar::parse(" 1/2"), DomainError);
  CHECK_THROWS_AS(frac(1, 2) / ExactScalar(0), DomainError);
  CHECK(frac(2, 3).pow(-2) == frac(9, 4));
  CHECK_THROWS_AS(ExactScalar(0).pow(-1), DomainError);
  CHECK_THROWS_AS(QParams(ExactScalar(0)), DomainError);
}

TEST_CASE("parse/str round-trip") {
  Draw draw;
  for (int rep = 0; rep < 200; ++rep) {
    const long num = static_cast<long>(draw.rng.next() % 2000001) - 1000000;
    const long den = 1 + static_cast<long>(draw.rng.next() % 1000000);
    const ExactScalar x(num, den);
    CHECK(ExactScalar::parse(x.str()) == x);
  }
  for (const char* bad : {"", "-", "+", "1/1/1", "1//2", "0x10", "1e3", "²", "1 /2"}) {
    CHECK_THROWS_AS(ExactScalar::parse(bad), DomainError);
  }
}

TEST_CASE("q-integers, factorials, binomials") {
  const QParams q = qp(1, 2);
  CHECK(q_integer(1, qp(7, 3)) == ExactScalar(1));
  CHECK(q_integer(4, qp(1, 1)) == ExactScalar(4));
  CHECK(q_integer(3, q) == frac(21, 16));
  CHECK(q_factorial(0, q) == ExactScalar(1));
  CHECK(q_factorial(2, q) == frac(5, 4));
  CHECK(q_factorial(3, q) == frac(105, 64));
  CHECK(q_binomial(7, 0, q) == ExactScalar(1));
  CHECK(q_binomial(4, 2, q) == frac(357, 256));
  CHECK(q_binomial(3, 5, q) == ExactScalar(0));
  CHECK(q_binomial(3, -1, q) == ExactScalar(0));
  // q = 1 degenerates to ordinary binomials
  CHECK(q_binomial(6, 3, qp(1, 1)) == ExactScalar(20));
  // q = -1 is a valid input for the sum forms
  CHECK(q_integer(2, qp(-1, 1)) == ExactScalar(2));
}

TEST_CASE("q-pochhammer") {
  CHECK(q_pochhammer(frac(3, 4), frac(1, 9), 0) == ExactScalar(1));
  CHECK(q_pochhammer(frac(3, 4), frac(1, 9), 1) == frac(1, 4));
  CHECK(q_pochhammer(frac(1, 2), frac(1, 4), 2) == frac(7, 16));
}

TEST_CASE("q-Hahn weights") {
  const QParams q = qp(1, 2);
  SUBCASE("nu = mu concentrates at p = 0") {
    const QHahnParams params{frac(1, 3), frac(1, 3), q};
    CHECK(q_hahn_weight(0, 3, params) == ExactScalar(1));
    for (int p = 1; p <= 3; ++p) CHECK(q_hahn_weight(p, 3, params) == ExactScalar(0));
  }
  SUBCASE("mu = 1 concentrates at p = k") {
    const QHahnParams params{ExactScalar(1), frac(1, 5), q};
    CHECK(q_hahn_weight(3, 3, params) == ExactScalar(1));
    for (int p = 0; p < 3; ++p) CHECK(q_hahn_weight(p, 3, params) == ExactScalar(0));
  }
  SUBCASE("weights sum to one") {
    const QHahnParams params{frac(1, 3), frac(1, 5), q};
    ExactScalar sum(0);
    for (int p = 0; p <= 3; ++p) sum += q_hahn_weight(p, 3, params);
    CHECK(sum == ExactScalar(1));
  }
  SUBCASE("vanishing denominator names the factor") {
    const QHahnParams params{frac(1, 3), ExactScalar(1), q};  // (1;q^2)_k = 0
    CHECK_THROWS_WITH_AS(q_hahn_weight(1, 2, params), doctest::Contains("(nu;q^2)_k"),
                         DomainError);
  }
}

TEST_CASE("baxter coefficients: frozen values") {
  const QParams q = qp(1, 2);
  CHECK(baxter_coefficient(1, 1, 0, ExactScalar(2), q) == frac(3, 7));
  CHECK(baxter_coefficient(1, 1, 1, ExactScalar(2), q) == frac(4, 7));
  CHECK(baxter_coefficient(2, 2, 2, ExactScalar(8), q) == frac(1792, 3937));
  CHECK(baxter_coefficient_recursive(1, 1, 0, ExactScalar(2), q) == frac(3, 7));
  CHECK(baxter_coefficient_recursive(1, 2, 1, ExactScalar(2), q) ==
        baxter_coefficient(1, 2, 1, ExactScalar(2), q));
  // the stochastic-regime rejection pair used by the sampler tests
  CHECK(baxter_coefficient(1, 1, 0, frac(1, 3), q) == ExactScalar(9));
  CHECK(baxter_coefficient(1, 1, 1, frac(1, 3), q) == ExactScalar(-8));
}

TEST_CASE("baxter coefficients: full recursion vs closed form at (3,3)") {
  const QParams q = qp(1, 3);
  for (int p = 0; p <= 3; ++p) {
    CHECK(baxter_coefficient_recursive(3, 3, p, ExactScalar(27), q) ==
          baxter_coefficient(3, 3, p, ExactScalar(27), q));
  }
}

TEST_CASE("baxter coefficients: sum, recursion and q-Hahn agreement on a random grid") {
  Draw draw;
  for (int k = 1; k <= 6; ++k) {
    for (int l = k; l <= 6; ++l) {
      int done = 0;
      while (done < 3) {
        const QParams q{draw.q_unit()};
        const ExactScalar z = draw.positive();
        std::vector<ExactScalar> closed, recursive, hahn;
        try {
          for (int p = 0; p <= k; ++p) {
            closed.push_back(baxter_coefficient(k, l, p, z, q));
            recursive.push_back(baxter_coefficient_recursive(k, l, p, z, q));
            hahn.push_back(q_hahn_weight(p, k, {q.t.pow(-l), z * q.t.pow(-l), q}));
          }
        } catch (const DomainError&) {
          continue;  // guard-violating draw (z hit a q-power); redraw
        }
        ExactScalar sum(0);
        for (int p = 0; p <= k; ++p) {
          sum += closed[static_cast<std::size_t>(p)];
          CHECK(recursive[static_cast<std::size_t>(p)] == closed[static_cast<std::size_t>(p)]);
          CHECK(hahn[static_cast<std::size_t>(p)] == closed[static_cast<std::size_t>(p)]);
        }
        CHECK(sum == ExactScalar(1));
        ++done;
      }
    }
  }
}

TEST_CASE("baxter coefficients: guards") {
  const QParams q = qp(1, 2);
  CHECK_THROWS_AS(baxter_coefficient(2, 1, 0, ExactScalar(2), q), DomainError);  // l < k
  CHECK_THROWS_AS(baxter_coefficient(1, 1, 2, ExactScalar(2), q), DomainError);  // p > k
  // z = q^{2l} makes the j = 0 factor vanish; the error identifies j
  CHECK_THROWS_WITH_AS(baxter_coefficient(1, 1, 0, frac(1, 4), q), doctest::Contains("j=0"),
                       DomainError);
}

TEST_CASE("pascal identities") {
  Draw draw;
  for (int rep = 0; rep < 10; ++rep) {
    const QParams q{draw.q_unit()};
    for (int k = 1; k <= 8; ++k) {
      for (int p = 0; p <= k; ++p) {
        CHECK(q_binomial(k - 1, p - 1, q) * q.t.pow(k - p) + q_binomial(k - 1, p, q) ==
              q_binomial(k, p, q));
        CHECK(q_binomial(k - 1, p - 1, q) + q_binomial(k - 1, p, q) * q.t.pow(p) ==
              q_binomial(k, p, q));
      }
    }
  }
}

TEST_CASE("q-Chu-Vandermonde") {
  const QParams q = qp(2, 5);
  for (int m = 0; m <= 5; ++m) {
    for (int n = 0; n <= 5; ++n) {
      for (int k = 0; k <= m + n; ++k) {
        ExactScalar rhs(0);
        for (int j = 0; j <= k; ++j) {
          rhs += q_binomial(n, j, q) * q_binomial(m, k - j, q) *
                 q.t.pow(static_cast<long>(j) * (m - k + j));
        }
        CHECK(rhs == q_binomial(m + n, k, q));
      }
    }
  }
}

TEST_CASE("coefficient vector sums to one by construction") {
  const BaxterCoefficients c = baxter_coefficients(2, 3, frac(7, 3), qp(2, 5));
  CHECK(c.values.size() == 3);
  ExactScalar sum(0);
  for (const auto& v : c.values) sum += v;
  CHECK(sum == ExactScalar(1));
}
