#include "fusedr/verify.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "fusedr/sampler.hpp"

namespace fusedr {

namespace {

constexpr std::uint64_t kDefaultSeed = 20250810;
constexpr int kMaxRedraws = 500;

struct SubjectEntry {
  CheckSubject subject;
  std::string_view name;
};

constexpr SubjectEntry kSubjects[] = {
    {CheckSubject::HeckeRelations, "hecke-relations"},
    {CheckSubject::BraidRelations, "braid-relations"},
    {CheckSubject::BaseYbe, "base-ybe"},
    {CheckSubject::FusedYbe, "fused-ybe"},
    {CheckSubject::ProjectorIntertwine, "projector-intertwine"},
    {CheckSubject::SymmetrizerTriad, "symmetrizer-triad"},
    {CheckSubject::SymmetrizerAbsorption, "symmetrizer-absorption"},
    {CheckSubject::TheoremEquality, "theorem-equality"},
    {CheckSubject::ClosedFormEquality, "closed-form-equality"},
    {CheckSubject::CoefficientRecursion, "coefficient-recursion"},
    {CheckSubject::CoefficientSum, "coefficient-sum"},
    {CheckSubject::Pascal, "pascal"},
    {CheckSubject::ChuVandermonde, "chu-vandermonde"},
    {CheckSubject::RowStochastic, "row-stochastic"},
    {CheckSubject::Golden9x9, "golden-9x9"},
};

}  // namespace

std::string_view subject_name(CheckSubject subject) {
  for (const auto& e : kSubjects) {
    if (e.subject == subject) return e.name;
  }
  return "unknown";
}

std::optional<CheckSubject> subject_from_name(std::string_view name) {
  for (const auto& e : kSubjects) {
    if (e.name == name) return e.subject;
  }
  return std::nullopt;
}

const std::vector<CheckSubject>& all_subjects() {
  static const std::vector<CheckSubject> subjects = [] {
    std::vector<CheckSubject> out;
    for (const auto& e : kSubjects) out.push_back(e.subject);
    return out;
  }();
  return subjects;
}

std::string_view status_name(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Error: return "error";
  }
  return "unknown";
}

bool VerificationReport::all_passed() const {
  for (const auto& e : entries) {
    if (e.status != CheckStatus::Pass) return false;
  }
  return true;
}

namespace {

// ---------------------------------------------------------------- parameters

class ParamContext {
 public:
  explicit ParamContext(const CheckSpec& spec)
      : spec_(spec), rng_(seed_of(spec)) {}

  int get_int(const std::string& key, int fallback) const {
    auto it = spec_.params.find(key);
    if (it == spec_.params.end()) return fallback;
    return std::stoi(it->second);
  }

  bool has(const std::string& key) const { return spec_.params.count(key) > 0; }

  std::optional<ExactScalar> explicit_scalar(const std::string& key) const {
    auto it = spec_.params.find(key);
    if (it == spec_.params.end()) return std::nullopt;
    return ExactScalar::parse(it->second);
  }

  // q in (0, 1): numerator strictly below denominator, both <= 100.
  ExactScalar draw_q() {
    while (true) {
      const long num = 1 + static_cast<long>(rng_.next() % 100);
      const long den = 1 + static_cast<long>(rng_.next() % 100);
      if (num == den) {
        ++redraws_;
        continue;
      }
      return num < den ? ExactScalar(num, den) : ExactScalar(den, num);
    }
  }

  // small positive rational, numerator/denominator <= 100
  ExactScalar draw_rational() {
    const long num = 1 + static_cast<long>(rng_.next() % 100);
    const long den = 1 + static_cast<long>(rng_.next() % 100);
    return ExactScalar(num, den);
  }

  void count_redraw() { ++redraws_; }
  int redraws() const { return redraws_; }
  int trials() const { return get_int("trials", 1); }

  static std::uint64_t seed_of(const CheckSpec& spec) {
    auto it = spec.params.find("seed");
    if (it == spec.params.end()) return kDefaultSeed;
    return std::stoull(it->second);
  }

 private:
  const CheckSpec& spec_;
  SplitMix64 rng_;
  int redraws_ = 0;
};

std::optional<CheckWitness> diff_witness(const TensorOperator& actual,
                                         const TensorOperator& expected,
                                         const std::string& where) {
  if (actual == expected) return std::nullopt;
  for (StateIndex c = 0; c < actual.space().dimension; ++c) {
    for (StateIndex r = 0; r < actual.space().dimension; ++r) {
      const ExactScalar a = actual.entry(r, c);
      const ExactScalar e = expected.entry(r, c);
      if (a != e) {
        return CheckWitness{where + " entry (row=" + std::to_string(r) +
                                ", col=" + std::to_string(c) + ")",
                            e.str(), a.str()};
      }
    }
  }
  return CheckWitness{where, "", ""};
}

std::optional<CheckWitness> diff_witness(const FusedMatrix& actual, const FusedMatrix& expected,
                                         const std::string& where) {
  if (actual == expected) return std::nullopt;
  for (int r = 0; r < actual.side(); ++r) {
    for (int c = 0; c < actual.side(); ++c) {
      const FusedIndex in = actual.index_at(r);
      const FusedIndex out = actual.index_at(c);
      if (actual.at(in, out) != expected.at(in, out)) {
        std::ostringstream loc;
        loc << where << " entry [(" << in.first << "," << in.second << ")][(" << out.first << ","
            << out.second << ")]";
        return CheckWitness{loc.str(), expected.at(in, out).str(), actual.at(in, out).str()};
      }
    }
  }
  return CheckWitness{where, "", ""};
}

std::optional<CheckWitness> scalar_witness(const ExactScalar& actual, const ExactScalar& expected,
                                           const std::string& where) {
  if (actual == expected) return std::nullopt;
  return CheckWitness{where, expected.str(), actual.str()};
}

// ------------------------------------------------------------ subject bodies
// Each body returns a witness on failure, nullopt on pass; DomainError means
// the parameter point is inadmissible (status error for explicit parameters,
// redraw for drawn ones). `orientation` is set by the YBE subjects.

using Body = std::function<std::optional<CheckWitness>(ParamContext&, std::string& orientation,
                                                       std::string& detail)>;

std::optional<CheckWitness> check_hecke_relations(ParamContext& ctx, const QParams& q) {
  const int N = ctx.get_int("N", 2);
  const int n = ctx.get_int("n", 3);
  const GeneratorFlavor flavor = GeneratorFlavor::Stochastic;
  const TensorSpace space(N, n);
  const TensorOperator id = TensorOperator::identity(space);
  for (int i = 1; i <= n - 1; ++i) {
    const TensorOperator g = generator(i, space, q, flavor);
    TensorOperator rhs = g;
    rhs.scale(ExactScalar(1) - q.t);
    TensorOperator qid = id;
    qid.scale(q.t);
    rhs += qid;
    if (auto w = diff_witness(g * g, rhs, "sigma_" + std::to_string(i) + "^2 vs (1-q^2)sigma+q^2")) {
      return w;
    }
  }
  return std::nullopt;
}

std::optional<CheckWitness> check_braid_relations(ParamContext& ctx, const QParams& q) {
  const int N = ctx.get_int("N", 2);
  const int n = ctx.get_int("n", 3);
  const TensorSpace space(N, n);
  for (int i = 1; i + 1 <= n - 1; ++i) {
    const TensorOperator a = generator(i, space, q);
    const TensorOperator b = generator(i + 1, space, q);
    if (auto w = diff_witness(a * b * a, b * a * b, "braid at i=" + std::to_string(i))) return w;
  }
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = i + 2; j <= n - 1; ++j) {
      const TensorOperator a = generator(i, space, q);
      const TensorOperator b = generator(j, space, q);
      if (auto w = diff_witness(a * b, b * a,
                                "commutation (" + std::to_string(i) + "," + std::to_string(j) + ")")) {
        return w;
      }
    }
  }
  return std::nullopt;
}

std::optional<CheckWitness> check_ybe(const ExactScalar& u, const ExactScalar& v,
                                      const std::optional<ExactScalar>& perturb,
                                      std::string& orientation,
                                      const std::function<TensorOperator(int, const ExactScalar&)>&
                                          factor) {
  TensorOperator r1u = factor(1, u);
  if (perturb) {
    r1u.add_entry(0, 0, *perturb);
  }
  const TensorOperator lhs = r1u * factor(2, u * v) * factor(1, v);
  const TensorOperator rhs_standard = factor(2, v) * factor(1, u * v) * factor(2, u);
  if (lhs == rhs_standard) {
    orientation = "standard";
    return std::nullopt;
  }
  const TensorOperator rhs_alternate = factor(2, v) * factor(1, u * v) * factor(2, v);
  if (lhs == rhs_alternate) {
    orientation = "repeated-v";
    return std::nullopt;
  }
  orientation = "neither";
  return diff_witness(lhs, rhs_standard, "YBE standard right-hand side");
}

std::optional<CheckWitness> check_base_ybe(ParamContext& ctx, const QParams& q,
                                           const ExactScalar& u, const ExactScalar& v,
                                           std::string& orientation) {
  const int N = ctx.get_int("N", 2);
  const TensorSpace space(N, 3);
  const auto perturb = ctx.explicit_scalar("perturb");
  return check_ybe(u, v, perturb, orientation, [&](int i, const ExactScalar& spectral) {
    return baxterised_generator(i, space, q, spectral, GeneratorFlavor::Base);
  });
}

std::optional<CheckWitness> check_fused_ybe(ParamContext& ctx, const QParams& q,
                                            const ExactScalar& u, const ExactScalar& v,
                                            std::string& orientation) {
  const int k = ctx.get_int("k", 1);
  const BlockShape shape(k, k, 2);
  const TensorSpace block_space(2, 2 * k);
  const TensorSpace space(2, 3 * k);
  const auto factor = [&](int i, const ExactScalar& spectral) {
    return embed(fused_r_product(shape, spectral, block_space, q), (i - 1) * k, space);
  };
  return check_ybe(u, v, std::nullopt, orientation, factor);
}

std::optional<CheckWitness> check_projector_intertwine(ParamContext& ctx, const QParams& q,
                                                       const ExactScalar& u) {
  const int k = ctx.get_int("k", 1);
  const int l = ctx.get_int("l", k);
  const BlockShape shape(k, l, 2);
  const TensorSpace space(2, shape.sites());
  const TensorOperator r = fused_r_product(shape, u, space, q);
  const TensorOperator pkl = projector(shape, ProjectorOrientation::KL, space, q);
  const TensorOperator plk = projector(shape, ProjectorOrientation::LK, space, q);
  if (auto w = diff_witness(pkl * r, r, "P^(k,l) R vs R")) return w;
  if (auto w = diff_witness(r * plk, r, "R P^(l,k) vs R")) return w;
  return std::nullopt;
}

std::optional<CheckWitness> check_symmetrizer_triad(ParamContext& ctx, const QParams& q) {
  const int i = ctx.get_int("i", 1);
  const int j = ctx.get_int("j", 3);
  const int n = ctx.get_int("n", j);
  const int N = ctx.get_int("N", 2);
  const TensorSpace space(N, n);
  const TensorOperator p = symmetrizer(i, j, space, q, SymmetrizerMethod::Product);
  const TensorOperator s = symmetrizer(i, j, space, q, SymmetrizerMethod::Sum);
  const TensorOperator r = symmetrizer(i, j, space, q, SymmetrizerMethod::Recursion);
  if (auto w = diff_witness(s, p, "sum vs product")) return w;
  if (auto w = diff_witness(r, p, "recursion vs product")) return w;
  if (auto w = diff_witness(p * p, p, "S^2 vs S")) return w;
  return std::nullopt;
}

std::optional<CheckWitness> check_symmetrizer_absorption(ParamContext& ctx, const QParams& q) {
  const int i = ctx.get_int("i", 1);
  const int j = ctx.get_int("j", 3);
  const int n = ctx.get_int("n", j);
  const int N = ctx.get_int("N", 2);
  const TensorSpace space(N, n);
  const TensorOperator s = symmetrizer(i, j, space, q);
  for (int a = i; a <= j - 1; ++a) {
    const TensorOperator g = generator(a, space, q);
    if (auto w = diff_witness(g * s, s, "sigma_" + std::to_string(a) + " S vs S")) return w;
    if (auto w = diff_witness(s * g, s, "S sigma_" + std::to_string(a) + " vs S")) return w;
  }
  for (int ii = i; ii <= j; ++ii) {
    for (int jj = ii; jj <= j; ++jj) {
      if (ii == i && jj == j) continue;
      const TensorOperator inner = symmetrizer(ii, jj, space, q);
      if (auto w = diff_witness(s * inner, s, "S_[i,j] S_[" + std::to_string(ii) + "," +
                                                  std::to_string(jj) + "] vs S_[i,j]")) {
        return w;
      }
      if (auto w = diff_witness(inner * s, s, "S_[" + std::to_string(ii) + "," +
                                                  std::to_string(jj) + "] S_[i,j] vs S_[i,j]")) {
        return w;
      }
    }
  }
  return std::nullopt;
}

std::optional<CheckWitness> check_theorem_equality(ParamContext& ctx, const QParams& q,
                                                   const ExactScalar& u) {
  const int k = ctx.get_int("k", 1);
  const int l = ctx.get_int("l", k);
  const BlockShape shape(k, l, 2);
  const TensorSpace space(2, shape.sites());
  return diff_witness(fused_r_baxterised(shape, u, space, q),
                      fused_r_product(shape, u, space, q), "baxterised vs product");
}

std::optional<CheckWitness> check_closed_form_equality(ParamContext& ctx, const QParams& q,
                                                       const ExactScalar& z) {
  const int k = ctx.get_int("k", 1);
  const int l = ctx.get_int("l", k);
  const BlockShape shape(k, l, 2);
  const TensorSpace space(2, shape.sites());
  const FusedMatrix closed = closed_form_matrix(shape, z, q);
  const FusedMatrix from_product = reduce_operator(fused_r_product(shape, z, space, q), shape, q);
  if (auto w = diff_witness(closed, from_product, "closed form vs reduced product")) return w;
  const FusedMatrix from_bax = reduce_operator(fused_r_baxterised(shape, z, space, q), shape, q);
  if (auto w = diff_witness(closed, from_bax, "closed form vs reduced baxterised")) return w;
  return std::nullopt;
}

std::optional<CheckWitness> check_coefficient_recursion(ParamContext& ctx, const QParams& q,
                                                        const ExactScalar& z) {
  const int k = ctx.get_int("k", 2);
  const int l = ctx.get_int("l", k);
  for (int p = 0; p <= k; ++p) {
    const ExactScalar closed = baxter_coefficient(k, l, p, z, q);
    const ExactScalar recursive = baxter_coefficient_recursive(k, l, p, z, q);
    if (auto w = scalar_witness(recursive, closed, "recursion vs closed form at p=" +
                                                       std::to_string(p))) {
      return w;
    }
    const QHahnParams hahn{q.t.pow(-l), z * q.t.pow(-l), q};
    if (auto w = scalar_witness(q_hahn_weight(p, k, hahn), closed,
                                "q-Hahn specialization at p=" + std::to_string(p))) {
      return w;
    }
  }
  return std::nullopt;
}

std::optional<CheckWitness> check_coefficient_sum(ParamContext& ctx, const QParams& q,
                                                  const ExactScalar& z) {
  const int k = ctx.get_int("k", 2);
  const int l = ctx.get_int("l", k);
  ExactScalar sum(0);
  for (int p = 0; p <= k; ++p) sum += baxter_coefficient(k, l, p, z, q);
  return scalar_witness(sum, ExactScalar(1), "sum of a_p over p=0.." + std::to_string(k));
}

std::optional<CheckWitness> check_pascal(ParamContext& ctx, const QParams& q) {
  const int kmax = ctx.get_int("kmax", 8);
  for (int k = 1; k <= kmax; ++k) {
    for (int p = 0; p <= k; ++p) {
      const ExactScalar lhs1 =
          q_binomial(k - 1, p - 1, q) * q.t.pow(k - p) + q_binomial(k - 1, p, q);
      if (auto w = scalar_witness(lhs1, q_binomial(k, p, q),
                                  "pascal-1 at (k,p)=(" + std::to_string(k) + "," +
                                      std::to_string(p) + ")")) {
        return w;
      }
      const ExactScalar lhs2 =
          q_binomial(k - 1, p - 1, q) + q_binomial(k - 1, p, q) * q.t.pow(p);
      if (auto w = scalar_witness(lhs2, q_binomial(k, p, q),
                                  "pascal-2 at (k,p)=(" + std::to_string(k) + "," +
                                      std::to_string(p) + ")")) {
        return w;
      }
    }
  }
  return std::nullopt;
}

std::optional<CheckWitness> check_chu_vandermonde(ParamContext& ctx, const QParams& q) {
  const int mmax = ctx.get_int("mmax", 5);
  const int nmax = ctx.get_int("nmax", 5);
  for (int m = 0; m <= mmax; ++m) {
    for (int n = 0; n <= nmax; ++n) {
      for (int k = 0; k <= m + n; ++k) {
        ExactScalar rhs(0);
        for (int j = 0; j <= k; ++j) {
          rhs += q_binomial(n, j, q) * q_binomial(m, k - j, q) *
                 q.t.pow(static_cast<long>(j) * (m - k + j));
        }
        if (auto w = scalar_witness(rhs, q_binomial(m + n, k, q),
                                    "chu-vandermonde at (m,n,k)=(" + std::to_string(m) + "," +
                                        std::to_string(n) + "," + std::to_string(k) + ")")) {
          return w;
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<CheckWitness> check_row_stochastic(ParamContext& ctx, const QParams& q,
                                                 const ExactScalar& u) {
  const int k = ctx.get_int("k", 2);
  const int l = ctx.get_int("l", k);
  const BlockShape shape(k, l, 2);
  const TensorSpace space(2, shape.sites());
  const auto expect_stochastic = [](const TensorOperator& op,
                                    const std::string& name) -> std::optional<CheckWitness> {
    if (!op.is_stochastic()) {
      return CheckWitness{name + " transpose-row sums", "all 1", "some column sum differs"};
    }
    if (!op.conserves_content()) {
      return CheckWitness{name + " content conservation", "block-diagonal over contents",
                          "entry between different content sectors"};
    }
    return std::nullopt;
  };
  for (int i = 1; i <= space.sites - 1; ++i) {
    if (auto w = expect_stochastic(generator(i, space, q), "generator " + std::to_string(i))) {
      return w;
    }
    if (auto w = expect_stochastic(baxterised_generator(i, space, q, u),
                                   "baxterised generator " + std::to_string(i))) {
      return w;
    }
  }
  if (auto w = expect_stochastic(symmetrizer(1, space.sites, space, q), "symmetrizer")) return w;
  if (auto w = expect_stochastic(projector(shape, ProjectorOrientation::KL, space, q), "P^(k,l)")) {
    return w;
  }
  if (auto w = expect_stochastic(projector(shape, ProjectorOrientation::LK, space, q), "P^(l,k)")) {
    return w;
  }
  for (int p = 0; p <= k; ++p) {
    if (auto w = expect_stochastic(partial_braiding(shape, p, space, q),
                                   "Sigma^(k,l;" + std::to_string(p) + ")")) {
      return w;
    }
  }
  const TensorOperator r = fused_r_product(shape, u, space, q);
  if (auto w = expect_stochastic(r, "fused R")) return w;
  const FusedMatrix reduced = reduce_operator(r, shape, q);
  for (int row = 0; row < reduced.side(); ++row) {
    const FusedIndex in = reduced.index_at(row);
    if (auto w = scalar_witness(reduced.row_sum(in), ExactScalar(1),
                                "fused row sum at (" + std::to_string(in.first) + "," +
                                    std::to_string(in.second) + ")")) {
      return w;
    }
  }
  return std::nullopt;
}

std::optional<CheckWitness> check_golden(ParamContext& ctx, const QParams& q,
                                         const ExactScalar& z) {
  const BlockShape shape(2, 2, 2);
  const TensorSpace space(2, 4);
  const FusedMatrix sigma1 = reduce_operator(partial_braiding(shape, 1, space, q), shape, q);
  if (auto w = diff_witness(sigma1, reference_sigma_2_2_1(q), "Sigma^(2,2;1)")) return w;
  const FusedMatrix sigma2 = reduce_operator(partial_braiding(shape, 2, space, q), shape, q);
  if (auto w = diff_witness(sigma2, reference_sigma_2_2_2(q), "Sigma^(2,2;2)")) return w;
  const FusedMatrix r = reduce_operator(fused_r_product(shape, z, space, q), shape, q);
  if (auto w = diff_witness(r, reference_r_2_2(q, z), "R^(2,2)(z)")) return w;
  (void)ctx;
  return std::nullopt;
}

// -------------------------------------------------------------- dispatch

struct NeededScalars {
  bool q = false;
  bool z = false;
  bool u = false;
  bool v = false;
};

NeededScalars needed_scalars(CheckSubject subject) {
  NeededScalars n;
  n.q = true;
  switch (subject) {
    case CheckSubject::BaseYbe:
    case CheckSubject::FusedYbe:
      n.u = n.v = true;
      break;
    case CheckSubject::ProjectorIntertwine:
    case CheckSubject::TheoremEquality:
    case CheckSubject::RowStochastic:
      n.u = true;
      break;
    case CheckSubject::ClosedFormEquality:
    case CheckSubject::CoefficientRecursion:
    case CheckSubject::CoefficientSum:
    case CheckSubject::Golden9x9:
      n.z = true;
      break;
    default:
      break;
  }
  return n;
}

}  // namespace

CheckResult run_check(const CheckSpec& spec) {
  CheckResult result;
  result.spec = spec;
  const auto started = std::chrono::steady_clock::now();

  ParamContext ctx(spec);
  const NeededScalars need = needed_scalars(spec.subject);
  const bool fully_explicit =
      (!need.q || ctx.has("q")) && (!need.z || ctx.has("z")) && (!need.u || ctx.has("u")) &&
      (!need.v || ctx.has("v"));

  const int trials = ctx.trials();
  try {
    for (int trial = 0; trial < trials; ++trial) {
      std::optional<CheckWitness> witness;
      int attempts = 0;
      while (true) {
        const ExactScalar q_value = need.q && ctx.has("q") ? *ctx.explicit_scalar("q")
                                    : need.q               ? ctx.draw_q()
                                                           : ExactScalar(1, 2);
        const ExactScalar z_value = need.z && ctx.has("z") ? *ctx.explicit_scalar("z")
                                    : need.z               ? ctx.draw_rational()
                                                           : ExactScalar(0);
        const ExactScalar u_value = need.u && ctx.has("u") ? *ctx.explicit_scalar("u")
                                    : need.u               ? ctx.draw_rational()
                                                           : ExactScalar(0);
        const ExactScalar v_value = need.v && ctx.has("v") ? *ctx.explicit_scalar("v")
                                    : need.v               ? ctx.draw_rational()
                                                           : ExactScalar(0);
        try {
          const QParams q(q_value);
          switch (spec.subject) {
            case CheckSubject::HeckeRelations:
              witness = check_hecke_relations(ctx, q);
              break;
            case CheckSubject::BraidRelations:
              witness = check_braid_relations(ctx, q);
              break;
            case CheckSubject::BaseYbe:
              witness = check_base_ybe(ctx, q, u_value, v_value, result.orientation);
              break;
            case CheckSubject::FusedYbe:
              witness = check_fused_ybe(ctx, q, u_value, v_value, result.orientation);
              break;
            case CheckSubject::ProjectorIntertwine:
              witness = check_projector_intertwine(ctx, q, u_value);
              break;
            case CheckSubject::SymmetrizerTriad:
              witness = check_symmetrizer_triad(ctx, q);
              break;
            case CheckSubject::SymmetrizerAbsorption:
              witness = check_symmetrizer_absorption(ctx, q);
              break;
            case CheckSubject::TheoremEquality:
              witness = check_theorem_equality(ctx, q, u_value);
              break;
            case CheckSubject::ClosedFormEquality:
              witness = check_closed_form_equality(ctx, q, z_value);
              break;
            case CheckSubject::CoefficientRecursion:
              witness = check_coefficient_recursion(ctx, q, z_value);
              break;
            case CheckSubject::CoefficientSum:
              witness = check_coefficient_sum(ctx, q, z_value);
              break;
            case CheckSubject::Pascal:
              witness = check_pascal(ctx, q);
              break;
            case CheckSubject::ChuVandermonde:
              witness = check_chu_vandermonde(ctx, q);
              break;
            case CheckSubject::RowStochastic:
              witness = check_row_stochastic(ctx, q, u_value);
              break;
            case CheckSubject::Golden9x9:
              witness = check_golden(ctx, q, z_value);
              break;
          }
          break;  // evaluated without guard violation
        } catch (const DomainError& guard) {
          if (fully_explicit) throw;
          ++attempts;
          ctx.count_redraw();
          if (attempts > kMaxRedraws) {
            throw DomainError(std::string("no admissible draw after ") +
                              std::to_string(kMaxRedraws) + " attempts: " + guard.what());
          }
        }
      }
      if (witness) {
        result.status = CheckStatus::Fail;
        result.witness = witness;
        break;
      }
    }
  } catch (const DomainError& guard) {
    result.status = CheckStatus::Error;
    result.detail = guard.what();
  }

  result.redraws = ctx.redraws();
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

VerificationReport run_suite(const std::vector<CheckSpec>& grid) {
  VerificationReport report;
  for (const auto& spec : grid) report.entries.push_back(run_check(spec));
  return report;
}

namespace {

CheckSpec make(const std::string& name, CheckSubject subject,
               std::initializer_list<std::pair<const std::string, std::string>> params) {
  CheckSpec spec;
  spec.name = name;
  spec.subject = subject;
  spec.params = params;
  return spec;
}

}  // namespace

std::vector<CheckSpec> default_suite() {
  std::vector<CheckSpec> suite;
  suite.push_back(make("coefficient-sum-3-4", CheckSubject::CoefficientSum,
                       {{"k", "3"}, {"l", "4"}, {"q", "2/5"}, {"z", "50"}}));
  suite.push_back(make("coefficient-sum-random", CheckSubject::CoefficientSum,
                       {{"k", "4"}, {"l", "6"}, {"trials", "5"}, {"seed", "11"}}));
  suite.push_back(make("coefficient-recursion-2-3", CheckSubject::CoefficientRecursion,
                       {{"k", "2"}, {"l", "3"}, {"trials", "5"}, {"seed", "12"}}));
  suite.push_back(make("coefficient-recursion-3-3", CheckSubject::CoefficientRecursion,
                       {{"k", "3"}, {"l", "3"}, {"trials", "3"}, {"seed", "13"}}));
  suite.push_back(make("pascal", CheckSubject::Pascal, {{"trials", "3"}, {"seed", "14"}}));
  suite.push_back(make("chu-vandermonde", CheckSubject::ChuVandermonde,
                       {{"trials", "2"}, {"seed", "15"}}));
  suite.push_back(make("hecke-relations-N2", CheckSubject::HeckeRelations,
                       {{"N", "2"}, {"n", "4"}, {"trials", "3"}, {"seed", "16"}}));
  suite.push_back(make("hecke-relations-N3", CheckSubject::HeckeRelations,
                       {{"N", "3"}, {"n", "3"}, {"trials", "2"}, {"seed", "17"}}));
  suite.push_back(make("braid-relations-N2", CheckSubject::BraidRelations,
                       {{"N", "2"}, {"n", "4"}, {"trials", "3"}, {"seed", "18"}}));
  suite.push_back(make("braid-relations-N3", CheckSubject::BraidRelations,
                       {{"N", "3"}, {"n", "4"}, {"trials", "1"}, {"seed", "19"}}));
  suite.push_back(make("base-ybe-N2", CheckSubject::BaseYbe,
                       {{"N", "2"}, {"trials", "3"}, {"seed", "20"}}));
  suite.push_back(make("base-ybe-N3", CheckSubject::BaseYbe,
                       {{"N", "3"}, {"trials", "2"}, {"seed", "21"}}));
  suite.push_back(make("fused-ybe-k1", CheckSubject::FusedYbe,
                       {{"k", "1"}, {"trials", "3"}, {"seed", "22"}}));
  suite.push_back(make("fused-ybe-k2", CheckSubject::FusedYbe,
                       {{"k", "2"}, {"trials", "1"}, {"seed", "23"}}));
  suite.push_back(make("projector-intertwine-1-1", CheckSubject::ProjectorIntertwine,
                       {{"k", "1"}, {"l", "1"}, {"trials", "2"}, {"seed", "24"}}));
  suite.push_back(make("projector-intertwine-1-2", CheckSubject::ProjectorIntertwine,
                       {{"k", "1"}, {"l", "2"}, {"trials", "2"}, {"seed", "25"}}));
  suite.push_back(make("projector-intertwine-2-2", CheckSubject::ProjectorIntertwine,
                       {{"k", "2"}, {"l", "2"}, {"trials", "2"}, {"seed", "26"}}));
  suite.push_back(make("symmetrizer-triad-1-3", CheckSubject::SymmetrizerTriad,
                       {{"i", "1"}, {"j", "3"}, {"n", "3"}, {"trials", "2"}, {"seed", "27"}}));
  suite.push_back(make("symmetrizer-triad-2-4", CheckSubject::SymmetrizerTriad,
                       {{"i", "2"}, {"j", "4"}, {"n", "4"}, {"trials", "2"}, {"seed", "28"}}));
  suite.push_back(make("symmetrizer-absorption-1-3", CheckSubject::SymmetrizerAbsorption,
                       {{"i", "1"}, {"j", "3"}, {"n", "4"}, {"trials", "2"}, {"seed", "29"}}));
  suite.push_back(make("theorem-equality-1-1", CheckSubject::TheoremEquality,
                       {{"k", "1"}, {"l", "1"}, {"trials", "3"}, {"seed", "30"}}));
  suite.push_back(make("theorem-equality-1-2", CheckSubject::TheoremEquality,
                       {{"k", "1"}, {"l", "2"}, {"trials", "3"}, {"seed", "31"}}));
  suite.push_back(make("theorem-equality-2-2", CheckSubject::TheoremEquality,
                       {{"k", "2"}, {"l", "2"}, {"trials", "2"}, {"seed", "32"}}));
  suite.push_back(make("theorem-equality-2-3", CheckSubject::TheoremEquality,
                       {{"k", "2"}, {"l", "3"}, {"trials", "1"}, {"seed", "33"}}));
  suite.push_back(make("closed-form-equality-1-1", CheckSubject::ClosedFormEquality,
                       {{"k", "1"}, {"l", "1"}, {"trials", "3"}, {"seed", "34"}}));
  suite.push_back(make("closed-form-equality-1-2", CheckSubject::ClosedFormEquality,
                       {{"k", "1"}, {"l", "2"}, {"trials", "2"}, {"seed", "35"}}));
  suite.push_back(make("closed-form-equality-2-2", CheckSubject::ClosedFormEquality,
                       {{"k", "2"}, {"l", "2"}, {"trials", "2"}, {"seed", "36"}}));
  suite.push_back(make("closed-form-equality-2-3", CheckSubject::ClosedFormEquality,
                       {{"k", "2"}, {"l", "3"}, {"trials", "1"}, {"seed", "37"}}));
  suite.push_back(make("row-stochastic-2-2", CheckSubject::RowStochastic,
                       {{"k", "2"}, {"l", "2"}, {"trials", "2"}, {"seed", "38"}}));
  suite.push_back(make("golden-9x9-half-8", CheckSubject::Golden9x9,
                       {{"q", "1/2"}, {"z", "8"}}));
  suite.push_back(make("golden-9x9-third-81", CheckSubject::Golden9x9,
                       {{"q", "1/3"}, {"z", "81"}}));
  return suite;
}

// ----------------------------------------------------------- reference data

namespace {

FusedMatrix from_rows(const BlockShape& shape,
                      const std::vector<std::vector<ExactScalar>>& rows) {
  FusedMatrix m(shape);
  for (int r = 0; r < m.side(); ++r) {
    for (int c = 0; c < m.side(); ++c) {
      m.at(m.index_at(r), m.index_at(c)) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }
  }
  return m;
}

}  // namespace

FusedMatrix reference_sigma_2_2_1(const QParams& qp) {
  const ExactScalar one(1), zero(0);
  const ExactScalar t = qp.t;
  const ExactScalar t2 = t * t;
  const ExactScalar t3 = t2 * t;
  const ExactScalar d = t + one;
  const std::vector<std::vector<ExactScalar>> rows = {
      {one, zero, zero, zero, zero, zero, zero, zero, zero},
      {zero, (one + t - t2) / d, zero, t2 / d, zero, zero, zero, zero, zero},
      {zero, zero, one - t, zero, t, zero, zero, zero, zero},
      {zero, one / d, zero, t / d, zero, zero, zero, zero, zero},
      {zero, zero, one / (d * d), zero, one - (t3 + one) / (d * d), zero, t3 / (d * d), zero, zero},
      {zero, zero, zero, zero, zero, (one + t - t2) / d, zero, t2 / d, zero},
      {zero, zero, zero, zero, one, zero, zero, zero, zero},
      {zero, zero, zero, zero, zero, one / d, zero, t / d, zero},
      {zero, zero, zero, zero, zero, zero, zero, zero, one},
  };
  return from_rows(BlockShape(2, 2, 2), rows);
}

FusedMatrix reference_sigma_2_2_2(const QParams& qp) {
  const ExactScalar one(1), zero(0);
  const ExactScalar q = qp.q;
  const ExactScalar t = qp.t;
  const ExactScalar t2 = t * t;
  const ExactScalar q3_plus_q = q * t + q;
  const std::vector<std::vector<ExactScalar>> rows = {
      {one, zero, zero, zero, zero, zero, zero, zero, zero},
      {zero, one - t2, zero, t2, zero, zero, zero, zero, zero},
      {zero, zero, (t2 - t - one) * t + one, zero, (one - t) * q3_plus_q * q3_plus_q, zero,
       t2 * t2, zero, zero},
      {zero, one, zero, zero, zero, zero, zero, zero, zero},
      {zero, zero, one - t, zero, t, zero, zero, zero, zero},
      {zero, zero, zero, zero, zero, one - t2, zero, t2, zero},
      {zero, zero, one, zero, zero, zero, zero, zero, zero},
      {zero, zero, zero, zero, zero, one, zero, zero, zero},
      {zero, zero, zero, zero, zero, zero, zero, zero, one},
  };
  return from_rows(BlockShape(2, 2, 2), rows);
}

FusedMatrix reference_r_2_2(const QParams& qp, const ExactScalar& z) {
  const ExactScalar one(1), zero(0);
  const ExactScalar q = qp.q;
  const ExactScalar t = qp.t;
  const ExactScalar t2 = t * t;
  const ExactScalar t3 = t2 * t;
  const ExactScalar q3_plus_q = q * t + q;
  const ExactScalar d1 = t - z;   // q^2 - z
  const ExactScalar d2 = t2 - z;  // q^4 - z
  const std::vector<std::vector<ExactScalar>> rows = {
      {one, zero, zero, zero, zero, zero, zero, zero, zero},
      {zero, (t2 - one) * z / d2, zero, -(t2 * (z - one)) / d2, zero, zero, zero, zero, zero},
      {zero, zero, (t - one) * (t - one) * (t + one) * z * z / (d1 * d2), zero,
       -((t - one) * q3_plus_q * q3_plus_q * (z - one) * z) / (d1 * d2), zero,
       t3 * (z - one) * (t * z - one) / (d1 * d2), zero, zero},
      {zero, (z - one) / (z - t2), zero, (t2 - one) / d2, zero, zero, zero, zero, zero},
      {zero, zero, -((t - one) * (z - one) * z) / (d1 * d2), zero,
       (t3 * z + t2 * (one - ExactScalar(2) * z) + t * (z - ExactScalar(2)) * z + z) / (d1 * d2),
       zero, -(t2 * (t - one) * (z - one)) / (d1 * d2), zero, zero},
      {zero, zero, zero, zero, zero, (t2 - one) * z / d2, zero, -(t2 * (z - one)) / d2, zero},
      {zero, zero, (z - one) * (t * z - one) / (t * d1 * d2), zero,
       (t + one) * (one - t2) * (z - one) / (d2 * (t2 - t * z)), zero,
       (t - one) * (t - one) * (t + one) / (d1 * d2), zero, zero},
      {zero, zero, zero, zero, zero, (z - one) / (z - t2), zero, (t2 - one) / d2, zero},
      {zero, zero, zero, zero, zero, zero, zero, zero, one},
  };
  return from_rows(BlockShape(2, 2, 2), rows);
}

}  // namespace fusedr
