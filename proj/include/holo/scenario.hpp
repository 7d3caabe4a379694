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

#include "holo/report.hpp"

namespace holo {

// Declarative scenario runner. A config is one JSON document:
//
//   {
//     "scenario": "phase_gate" | "cphase" | "hadamard" |
//                 "wilson_convergence" | "deformation_invariance" |
//                 "amplitude_sweep",
//     "seed": 0,
//     "routes": ["closed_form", "wilson", "oracle"],
//     "params": { ... scenario-specific ... },
//     "loop": {"segments": 4000},
//     "schedule": {"total_time": 1000.0, "time_steps": 0},
//     "sweep": {"parameter": "...", "values": [...]} or
//              {"parameter": "...", "grid": {"kind": "linear"|"log",
//                                            "min": a, "max": b, "count": n}},
//     "thresholds": {"<metric>": limit, ...},
//     "output": {"json": "report.json", "csv": "<scenario>.csv"}
//   }
//
// Unknown keys are rejected; error messages name the offending key by its
// dotted path. Identical config and seed produce identical outputs
// (excluding the generated_at line). Every report embeds the resolved
// config, and re-running that embedded config reproduces the report.

struct RunOptions {
  std::string out_dir = ".";
  int workers = 0;
  bool fail_fast = false;
};

struct ScenarioOutcome {
  Json report;
  bool threshold_failure = false;
  std::vector<std::string> written_files;
};

/// Validates a raw config and fills in defaults. Throws ConfigInvalid.
Json resolve_config(const Json& config);

/// Validates, runs, writes the report files, evaluates thresholds.
ScenarioOutcome run_scenario(const Json& config, const RunOptions& options);

}  // namespace holo
