#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fusedr/fused_matrix.hpp"

namespace fusedr {

enum class CheckSubject {
  HeckeRelations,
  BraidRelations,
  BaseYbe,
  FusedYbe,
  ProjectorIntertwine,
  SymmetrizerTriad,
  SymmetrizerAbsorption,
  TheoremEquality,
  ClosedFormEquality,
  CoefficientRecursion,
  CoefficientSum,
  Pascal,
  ChuVandermonde,
  RowStochastic,
  Golden9x9,
};

std::string_view subject_name(CheckSubject subject);
std::optional<CheckSubject> subject_from_name(std::string_view name);
const std::vector<CheckSubject>& all_subjects();

/// One identity check at one parameter point (or a seeded batch of drawn
/// points when "trials" is set). Parameters are exact strings: integers or
/// rationals "p/q". Missing parameters are drawn from a seeded generator;
/// guard-violating draws are redrawn and the redraw count logged.
struct CheckSpec {
  std::string name;
  CheckSubject subject = CheckSubject::CoefficientSum;
  std::map<std::string, std::string> params;
};

enum class CheckStatus { Pass, Fail, Error };

std::string_view status_name(CheckStatus status);

/// A fail always carries an exact witness. Errors are guard violations
/// (inadmissible parameters), never identity failures.
struct CheckWitness {
  std::string location;
  std::string expected;
  std::string actual;
};

struct CheckResult {
  CheckSpec spec;
  CheckStatus status = CheckStatus::Pass;
  std::optional<CheckWitness> witness;
  std::string detail;
  std::string orientation;  // YBE subjects: which right-hand side held
  int redraws = 0;
  double seconds = 0.0;
};

struct VerificationReport {
  std::vector<CheckResult> entries;
  bool all_passed() const;
};

CheckResult run_check(const CheckSpec& spec);

/// Deterministic aggregation in spec order.
VerificationReport run_suite(const std::vector<CheckSpec>& grid);

/// The stock suite: every subject appears at least once.
std::vector<CheckSpec> default_suite();

/// Reference matrices for the (2,2) fused family, entered symbolically and
/// evaluated exactly; the independent oracle for the golden checks.
FusedMatrix reference_sigma_2_2_1(const QParams& q);
FusedMatrix reference_sigma_2_2_2(const QParams& q);
FusedMatrix reference_r_2_2(const QParams& q, const ExactScalar& z);

}  // namespace fusedr
