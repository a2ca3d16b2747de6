#include "fusedr/serialize.hpp"

#include <cstdio>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace fusedr {

namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

std::string decimal12(const ExactScalar& v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v.to_double());
  return buf;
}

std::string index_label(FusedIndex idx) {
  return "(" + std::to_string(idx.first) + "|" + std::to_string(idx.second) + ")";
}

}  // namespace

std::string operator_to_json(const TensorOperator& op) {
  ordered j;
  j["N"] = op.space().local_dim;
  j["n"] = op.space().sites;
  j["orientation"] = "paper-row";
  // stored columns are inputs; emit row = input
  json entries = json::array();
  for (const auto& [col, column] : op.columns()) {
    for (const auto& [row, value] : column) {
      entries.push_back({col, row, value.str()});
    }
  }
  j["entries"] = std::move(entries);
  return j.dump(2) + "\n";
}

std::string fused_matrix_to_json(const FusedMatrix& m, const ExactScalar& q,
                                 const std::optional<ExactScalar>& z) {
  ordered j;
  j["k"] = m.shape().k;
  j["l"] = m.shape().l;
  j["q"] = q.str();
  if (z) j["z"] = z->str();
  j["ordering"] = "lex-second-fastest";
  j["orientation"] = "row=input";
  json rows = json::array();
  for (int r = 0; r < m.side(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.side(); ++c) {
      row.push_back(m.at(m.index_at(r), m.index_at(c)).str());
    }
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

std::string fused_matrix_to_csv(const FusedMatrix& m) {
  std::ostringstream out;
  out << "in\\out";
  for (int c = 0; c < m.side(); ++c) out << "," << index_label(m.index_at(c));
  out << "\n";
  for (int r = 0; r < m.side(); ++r) {
    out << index_label(m.index_at(r));
    for (int c = 0; c < m.side(); ++c) {
      out << "," << m.at(m.index_at(r), m.index_at(c)).str();
    }
    out << "\n";
  }
  return out.str();
}

std::string coefficients_to_json(const BaxterCoefficients& coeffs, const ExactScalar& q) {
  ordered j;
  j["k"] = coeffs.k;
  j["l"] = coeffs.l;
  j["q"] = q.str();
  j["z"] = coeffs.z.str();
  json values = json::array();
  for (const auto& v : coeffs.values) values.push_back(v.str());
  j["values"] = std::move(values);
  return j.dump(2) + "\n";
}

std::string coefficients_to_csv(const BaxterCoefficients& coeffs) {
  std::ostringstream out;
  out << "p,a_p,decimal\n";
  for (std::size_t p = 0; p < coeffs.values.size(); ++p) {
    out << p << "," << coeffs.values[p].str() << "," << decimal12(coeffs.values[p]) << "\n";
  }
  return out.str();
}

std::string weight_table_to_csv(const WeightTable& table) {
  std::ostringstream out;
  out << "row,col,probability,decimal\n";
  const FusedMatrix& m = table.matrix();
  for (int r = 0; r < m.side(); ++r) {
    for (const auto& [outi, prob] : table.row(m.index_at(r))) {
      out << r << "," << m.rank(outi) << "," << prob.str() << "," << decimal12(prob) << "\n";
    }
  }
  return out.str();
}

std::string weight_table_to_json(const WeightTable& table) {
  ordered j;
  j["k"] = table.shape().k;
  j["l"] = table.shape().l;
  j["q"] = table.q().str();
  j["z"] = table.z().str();
  j["ordering"] = "lex-second-fastest";
  j["orientation"] = "row=input";
  j["input_pair"] = "(vertical in [0,k], horizontal in [0,l])";
  json rows = json::array();
  const FusedMatrix& m = table.matrix();
  for (int r = 0; r < m.side(); ++r) {
    json row = json::array();
    for (const auto& [outi, prob] : table.row(m.index_at(r))) {
      row.push_back({m.rank(outi), prob.str()});
    }
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

std::string sample_grid_to_json(const SampleGrid& grid, const WeightTable& table,
                                const GridBoundary& boundary) {
  ordered j;
  ordered meta;
  meta["k"] = table.shape().k;
  meta["l"] = table.shape().l;
  meta["q"] = table.q().str();
  meta["z"] = table.z().str();
  meta["width"] = grid.width;
  meta["height"] = grid.height;
  meta["seed"] = grid.seed;
  meta["rng"] = grid.rng;
  meta["input_pair"] = "(bottom vertical, left horizontal)";
  meta["horizontal_layout"] = "rows y=1..height, columns x=0..width";
  meta["vertical_layout"] = "rows y=0..height, columns x=1..width";
  meta["boundary"] = {{"left", boundary.left}, {"bottom", boundary.bottom}};
  j["metadata"] = std::move(meta);
  j["horizontal"] = grid.horizontal;
  j["vertical"] = grid.vertical;
  return j.dump(2) + "\n";
}

std::string sample_grid_to_csv(const SampleGrid& grid) {
  std::ostringstream out;
  out << "edge,x,y,value\n";
  for (int y = 1; y <= grid.height; ++y) {
    for (int x = 0; x <= grid.width; ++x) {
      out << "h," << x << "," << y << "," << grid.horizontal_at(x, y) << "\n";
    }
  }
  for (int y = 0; y <= grid.height; ++y) {
    for (int x = 1; x <= grid.width; ++x) {
      out << "v," << x << "," << y << "," << grid.vertical_at(x, y) << "\n";
    }
  }
  return out.str();
}

std::string report_to_json_lines(const VerificationReport& report) {
  std::ostringstream out;
  for (const auto& entry : report.entries) {
    ordered j;
    j["name"] = entry.spec.name;
    j["subject"] = std::string(subject_name(entry.spec.subject));
    j["status"] = std::string(status_name(entry.status));
    ordered params;
    for (const auto& [key, value] : entry.spec.params) params[key] = value;
    j["params"] = std::move(params);
    if (entry.witness) {
      j["witness"] = {{"location", entry.witness->location},
                      {"expected", entry.witness->expected},
                      {"actual", entry.witness->actual}};
    }
    if (!entry.orientation.empty()) j["orientation"] = entry.orientation;
    if (!entry.detail.empty()) j["detail"] = entry.detail;
    j["redraws"] = entry.redraws;
    j["seconds"] = entry.seconds;
    out << j.dump() << "\n";
  }
  return out.str();
}

std::string report_to_table(const VerificationReport& report) {
  std::size_t name_width = 4;
  for (const auto& e : report.entries) name_width = std::max(name_width, e.spec.name.size());
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(name_width) + 2) << "name"
      << std::setw(8) << "status" << std::setw(12) << "orientation"
      << "time\n";
  int passed = 0;
  for (const auto& e : report.entries) {
    out << std::left << std::setw(static_cast<int>(name_width) + 2) << e.spec.name
        << std::setw(8) << std::string(status_name(e.status))
        << std::setw(12) << (e.orientation.empty() ? "-" : e.orientation)
        << std::fixed << std::setprecision(3) << e.seconds << "s\n";
    if (e.status == CheckStatus::Pass) ++passed;
    if (e.status == CheckStatus::Fail && e.witness) {
      out << "    at " << e.witness->location << ": expected " << e.witness->expected
          << ", actual " << e.witness->actual << "\n";
    }
    if (e.status == CheckStatus::Error) {
      out << "    " << e.detail << "\n";
    }
  }
  out << passed << "/" << report.entries.size() << " checks passed\n";
  return out.str();
}

}  // namespace fusedr
