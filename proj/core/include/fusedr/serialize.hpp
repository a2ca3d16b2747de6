#pragma once

#include <optional>
#include <string>

#include "fusedr/qseries.hpp"
#include "fusedr/sampler.hpp"
#include "fusedr/tensor.hpp"
#include "fusedr/verify.hpp"
#include "fusedr/weights.hpp"

namespace fusedr {

/// All emitters produce byte-identical output for identical inputs: object
/// keys are alphabetical, entries are sorted, and text ends with a newline.

/// {"N", "n", "orientation":"paper-row", "entries":[[row, col, "p/q"], ...]}
/// in paper orientation (row = input), entries sorted by (row, col).
std::string operator_to_json(const TensorOperator& op);

/// {"k","l","q","z"?,"ordering":"lex-second-fastest","orientation":"row=input",
///  "rows":[["p/q",...],...]}
std::string fused_matrix_to_json(const FusedMatrix& m, const ExactScalar& q,
                                 const std::optional<ExactScalar>& z);

/// CSV with a header row of output indices "(a|b)"; one row per input.
std::string fused_matrix_to_csv(const FusedMatrix& m);

std::string coefficients_to_json(const BaxterCoefficients& coeffs, const ExactScalar& q);
std::string coefficients_to_csv(const BaxterCoefficients& coeffs);

/// CSV rows: input rank, output rank, "p/q", 12-digit decimal approximation.
/// Ranks flatten index pairs lexicographically, second coordinate fastest.
std::string weight_table_to_csv(const WeightTable& table);
std::string weight_table_to_json(const WeightTable& table);

std::string sample_grid_to_json(const SampleGrid& grid, const WeightTable& table,
                                const GridBoundary& boundary);
/// CSV rows: edge kind ("h"/"v"), x, y, value.
std::string sample_grid_to_csv(const SampleGrid& grid);

/// One JSON object per line, in report order.
std::string report_to_json_lines(const VerificationReport& report);
/// Human-readable summary table.
std::string report_to_table(const VerificationReport& report);

}  // namespace fusedr
