// fusedr: construct stochastic fused R-matrices, verify their identities
// exactly, and run the vertex-model sampler they drive.
//
// Exit codes: 0 success, 1 identity failure (verify), 2 usage or parameter
// error. Output is byte-identical for identical inputs.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fusedr/serialize.hpp"

namespace {

using namespace fusedr;

struct CommonOptions {
  std::string q_text = "1/2";
  std::string z_text;
  std::string format = "json";
  std::string out_path;
  int k = 1;
  int l = 1;
};

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw DomainError("cannot open output file: " + out_path);
  out << text;
}

std::vector<int> parse_int_list(const std::string& text, int count, const std::string& what) {
  std::vector<int> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw DomainError(what + ": empty element in '" + text + "'");
    values.push_back(std::stoi(item));
  }
  if (values.size() == 1) values.assign(static_cast<std::size_t>(count), values[0]);
  if (values.size() != static_cast<std::size_t>(count)) {
    throw DomainError(what + ": expected 1 or " + std::to_string(count) + " values, got " +
                      std::to_string(values.size()));
  }
  return values;
}

enum class RmatrixMethod { Product, Baxterised, ClosedForm };

FusedMatrix build_rmatrix(const BlockShape& shape, const ExactScalar& z, const QParams& q,
                          RmatrixMethod method) {
  switch (method) {
    case RmatrixMethod::ClosedForm:
      return closed_form_matrix(shape, z, q);
    case RmatrixMethod::Product: {
      const TensorSpace space(2, shape.sites());
      return reduce_operator(fused_r_product(shape, z, space, q), shape, q);
    }
    case RmatrixMethod::Baxterised: {
      const TensorSpace space(2, shape.sites());
      return reduce_operator(fused_r_baxterised(shape, z, space, q), shape, q);
    }
  }
  throw DomainError("unknown rmatrix method");
}

int run(int argc, char** argv) {
  CLI::App app{"exact stochastic fused R-matrices and the vertex model they drive"};
  app.require_subcommand(1);

  CommonOptions opt;
  int N = 2;
  int p = 0;
  std::string method_text = "closed-form";
  std::string u_text, v_text;
  bool full_space = false;
  std::uint64_t seed = 1;
  int width = 1, height = 1;
  std::string left_text = "0", bottom_text = "0";
  std::vector<std::string> subjects;
  int trials = 0;

  auto add_common = [&](CLI::App* cmd, bool with_z) {
    cmd->add_option("--k", opt.k, "first block size");
    cmd->add_option("--l", opt.l, "second block size (l >= k)");
    cmd->add_option("--q", opt.q_text, "deformation parameter, rational p/q");
    if (with_z) cmd->add_option("--z", opt.z_text, "spectral parameter, rational p/q");
    cmd->add_option("--format", opt.format, "json or csv");
    cmd->add_option("--out", opt.out_path, "output path (default stdout)");
  };

  CLI::App* coeffs = app.add_subcommand("coeffs", "Baxterisation coefficients a_p at (k,l,q,z)");
  add_common(coeffs, true);

  CLI::App* sigma = app.add_subcommand("sigma", "fused-reduced partial braiding Sigma^(k,l;p)");
  add_common(sigma, false);
  sigma->add_option("--p", p, "crossing depth, 0 <= p <= k");
  sigma->add_option("--N", N, "local dimension (fused reduction requires 2)");
  sigma->add_flag("--full-space", full_space, "emit the full tensor-space operator instead");

  CLI::App* rmatrix = app.add_subcommand("rmatrix", "fused R-matrix at (k,l,q,z)");
  add_common(rmatrix, true);
  rmatrix->add_option("--N", N, "local dimension (fused reduction requires 2)");
  rmatrix->add_option("--method", method_text, "product | baxterised | closed-form");
  rmatrix->add_flag("--full-space", full_space, "emit the full tensor-space operator instead");

  CLI::App* weights = app.add_subcommand("weights", "vertex weight table at (k,l,q,z)");
  add_common(weights, true);
  std::string scan_text;
  weights->add_option("--scan-z", scan_text,
                      "exploratory: scan z over zmin:zmax:steps and report, per sampled z, "
                      "whether all weights are nonnegative");

  CLI::App* verify = app.add_subcommand("verify", "run identity checks (default: stock suite)");
  verify->add_option("--subject", subjects, "restrict to one or more subjects");
  verify->add_option("--k", opt.k, "block size for subject checks");
  verify->add_option("--l", opt.l, "second block size");
  verify->add_option("--N", N, "local dimension for relation/YBE subjects");
  verify->add_option("--q", opt.q_text, "fix q instead of drawing");
  verify->add_option("--z", opt.z_text, "fix z instead of drawing");
  verify->add_option("--u", u_text, "fix u instead of drawing");
  verify->add_option("--v", v_text, "fix v instead of drawing");
  verify->add_option("--seed", seed, "seed for drawn parameters");
  verify->add_option("--trials", trials, "parameter points per check");
  verify->add_option("--out", opt.out_path, "output path for the JSON-lines report");

  CLI::App* sample = app.add_subcommand("sample", "sample a quadrant of the vertex model");
  add_common(sample, true);
  sample->add_option("--width", width, "grid width");
  sample->add_option("--height", height, "grid height");
  sample->add_option("--seed", seed, "sampler seed");
  sample->add_option("--left", left_text, "left boundary: one value or height comma-separated");
  sample->add_option("--bottom", bottom_text, "bottom boundary: one value or width comma-separated");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  const QParams q(ExactScalar::parse(opt.q_text));
  const bool csv = opt.format == "csv";
  if (!csv && opt.format != "json") {
    throw DomainError("unknown format '" + opt.format + "', expected json or csv");
  }

  if (coeffs->parsed()) {
    if (opt.z_text.empty()) throw DomainError("coeffs requires --z");
    const BaxterCoefficients c =
        baxter_coefficients(opt.k, opt.l, ExactScalar::parse(opt.z_text), q);
    write_output(opt.out_path, csv ? coefficients_to_csv(c) : coefficients_to_json(c, q.q));
    return 0;
  }

  if (sigma->parsed() || rmatrix->parsed()) {
    if (N != 2) throw DomainError("fused reduction is defined for N = 2 only");
    const BlockShape shape(opt.k, opt.l, 2);
    const TensorSpace space(2, shape.sites());
    if (sigma->parsed()) {
      const TensorOperator op = partial_braiding(shape, p, space, q);
      if (full_space) {
        write_output(opt.out_path, operator_to_json(op));
      } else {
        const FusedMatrix m = reduce_operator(op, shape, q);
        write_output(opt.out_path,
                     csv ? fused_matrix_to_csv(m) : fused_matrix_to_json(m, q.q, std::nullopt));
      }
      return 0;
    }
    if (opt.z_text.empty()) throw DomainError("rmatrix requires --z");
    const ExactScalar z = ExactScalar::parse(opt.z_text);
    RmatrixMethod method;
    if (method_text == "product") {
      method = RmatrixMethod::Product;
    } else if (method_text == "baxterised") {
      method = RmatrixMethod::Baxterised;
    } else if (method_text == "closed-form") {
      method = RmatrixMethod::ClosedForm;
    } else {
      throw DomainError("unknown method '" + method_text +
                        "', expected product | baxterised | closed-form");
    }
    if (full_space) {
      write_output(opt.out_path, operator_to_json(fused_r_product(shape, z, space, q)));
      return 0;
    }
    const FusedMatrix m = build_rmatrix(shape, z, q, method);
    write_output(opt.out_path, csv ? fused_matrix_to_csv(m) : fused_matrix_to_json(m, q.q, z));
    return 0;
  }

  if (weights->parsed()) {
    const bool weights_csv = weights->count("--format") ? csv : true;  // CSV is the default here
    if (!scan_text.empty()) {
      // zmin:zmax:steps, rational endpoints, uniform rational grid
      const auto first = scan_text.find(':');
      const auto second = scan_text.find(':', first + 1);
      if (first == std::string::npos || second == std::string::npos) {
        throw DomainError("--scan-z expects zmin:zmax:steps");
      }
      const ExactScalar zmin = ExactScalar::parse(scan_text.substr(0, first));
      const ExactScalar zmax = ExactScalar::parse(scan_text.substr(first + 1, second - first - 1));
      const long steps = std::stol(scan_text.substr(second + 1));
      if (steps < 1) throw DomainError("--scan-z needs at least one step");
      std::ostringstream out;
      out << "z,admissible\n";
      const BlockShape shape(opt.k, opt.l, 2);
      for (long i = 0; i <= steps; ++i) {
        const ExactScalar z =
            zmin + (zmax - zmin) * ExactScalar(i) / ExactScalar(steps);
        bool admissible = true;
        try {
          weight_table(shape, q, z);
        } catch (const DomainError&) {
          admissible = false;
        }
        out << z.str() << "," << (admissible ? 1 : 0) << "\n";
      }
      write_output(opt.out_path, out.str());
      return 0;
    }
    if (opt.z_text.empty()) throw DomainError("weights requires --z");
    const WeightTable table = weight_table(BlockShape(opt.k, opt.l, 2), q,
                                           ExactScalar::parse(opt.z_text));
    write_output(opt.out_path,
                 weights_csv ? weight_table_to_csv(table) : weight_table_to_json(table));
    return 0;
  }

  if (verify->parsed()) {
    std::vector<CheckSpec> grid;
    if (subjects.empty()) {
      grid = default_suite();
    } else {
      for (const auto& name : subjects) {
        const auto subject = subject_from_name(name);
        if (!subject) throw DomainError("unknown subject '" + name + "'");
        CheckSpec spec;
        spec.name = name;
        spec.subject = *subject;
        if (verify->count("--k")) spec.params["k"] = std::to_string(opt.k);
        if (verify->count("--l")) spec.params["l"] = std::to_string(opt.l);
        if (verify->count("--N")) spec.params["N"] = std::to_string(N);
        if (verify->count("--q")) spec.params["q"] = ExactScalar::parse(opt.q_text).str();
        if (!opt.z_text.empty()) spec.params["z"] = ExactScalar::parse(opt.z_text).str();
        if (!u_text.empty()) spec.params["u"] = ExactScalar::parse(u_text).str();
        if (!v_text.empty()) spec.params["v"] = ExactScalar::parse(v_text).str();
        if (verify->count("--seed")) spec.params["seed"] = std::to_string(seed);
        if (trials > 0) spec.params["trials"] = std::to_string(trials);
        grid.push_back(std::move(spec));
      }
    }
    const VerificationReport report = run_suite(grid);
    write_output(opt.out_path, report_to_json_lines(report));
    std::cerr << report_to_table(report);
    return report.all_passed() ? 0 : 1;
  }

  if (sample->parsed()) {
    if (opt.z_text.empty()) throw DomainError("sample requires --z");
    const WeightTable table = weight_table(BlockShape(opt.k, opt.l, 2), q,
                                           ExactScalar::parse(opt.z_text));
    GridBoundary boundary;
    boundary.left = parse_int_list(left_text, height, "--left");
    boundary.bottom = parse_int_list(bottom_text, width, "--bottom");
    const SampleGrid grid = sample_grid(table, width, height, boundary, seed);
    write_output(opt.out_path,
                 csv ? sample_grid_to_csv(grid) : sample_grid_to_json(grid, table, boundary));
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const fusedr::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
