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

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "holo/gates.hpp"

namespace holo {

using Json = nlohmann::ordered_json;

/// Shortest round-trip decimal form, identical in JSON and CSV output.
std::string format_double(double value);

/// Matrices serialize as nested arrays of [re, im] pairs, rows outermost.
Json matrix_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// Mandatory conventions block carried by every JSON report.
Json conventions_json();

Json gate_report_json(const GateReport& report);

void write_text_file(const std::string& path, const std::string& contents);

/// Serializes with a leading generated_at line; everything after it is a
/// pure function of the payload.
void write_json_report(const std::string& path, const Json& payload);

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

Json load_json_file(const std::string& path);

}  // namespace holo
