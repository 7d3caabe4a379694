// Copyright 2026 The holonomy-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "holo/report.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

namespace holo {

std::string format_double(double value) {
  return Json(value).dump();
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty())
    fail(ErrorCode::ConfigInvalid, "matrix payload must be a nonempty array");
  const size_t rows = j.size();
  const size_t cols = j[0].size();
  Matrix m(rows, cols);
  for (size_t i = 0; i < rows; ++i) {
    if (j[i].size() != cols)
      fail(ErrorCode::ConfigInvalid, "ragged matrix payload");
    for (size_t k = 0; k < cols; ++k) {
      const Json& cell = j[i][k];
      if (!cell.is_array() || cell.size() != 2)
        fail(ErrorCode::ConfigInvalid, "matrix entries must be [re, im]");
      m(i, k) = Complex(cell[0].get<double>(), cell[1].get<double>());
    }
  }
  return m;
}

Json conventions_json() {
  Json c;
  c["hbar"] = 1.0;
  c["frequency_units"] = "angular, rad per unit time";
  c["loop_orientation"] =
      "positive phi traverses counterclockwise around +z; phases enter as "
      "exp(i*gamma) with the aligned bloch level carrying "
      "A_phi = -(1 - cos theta)/2";
  c["holonomy_layout"] =
      "rows index the initial frame vector: entry (l, n) is the amplitude "
      "on frame vector n of the loop image of frame vector l";
  c["two_spin_basis"] = Json::array({"uu", "ud", "du", "dd"});
  c["bit_mapping"] = "spin up = bit 1, so uu = |11>";
  c["tripod_basis"] = Json::array({"0", "1", "a", "b"});
  c["dark_basis"] = "(chi1, chi2) with chi1 = sin(phi)|0> - cos(phi)|1>";
  return c;
}

Json gate_report_json(const GateReport& report) {
  Json j;
  j["route"] = route_name(report.route);
  j["achieved"] = matrix_json(report.achieved);
  j["target"] = matrix_json(report.target);
  j["distance"] = report.distance;
  Json phases;
  for (const auto& [key, value] : report.phases) phases[key] = value;
  j["phases"] = std::move(phases);
  Json diagnostics;
  for (const auto& [key, value] : report.diagnostics) diagnostics[key] = value;
  j["diagnostics"] = std::move(diagnostics);
  j["basis_mismatch"] = report.basis_mismatch;
  j["notes"] = report.notes;
  return j;
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::IoFailure, "cannot open '" + path + "' for writing");
  out << contents;
  if (!out) fail(ErrorCode::IoFailure, "write to '" + path + "' failed");
}

void write_json_report(const std::string& path, const Json& payload) {
  Json wrapped;
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char stamp[32];
  std::strftime(stamp, sizeof(stamp), "%FT%TZ", std::gmtime(&t));
  wrapped["generated_at"] = stamp;
  for (const auto& [key, value] : payload.items()) wrapped[key] = value;
  write_text_file(path, wrapped.dump(2) + "\n");
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream out;
  for (size_t i = 0; i < header.size(); ++i)
    out << (i ? "," : "") << header[i];
  out << "\n";
  for (const auto& row : rows) {
    if (row.size() != header.size())
      fail(ErrorCode::IoFailure, "csv row width does not match the header");
    for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << "\n";
  }
  write_text_file(path, out.str());
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::ConfigInvalid, "cannot read '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(ErrorCode::ConfigInvalid,
         "'" + path + "' is not valid JSON: " + e.what());
  }
  return j;
}

}  // namespace holo
