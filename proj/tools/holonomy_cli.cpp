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

#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "holo/scenario.hpp"

namespace {

// Exit codes: 0 success, 2 config error, 3 scenario failure, 4 threshold
// failure.
constexpr int kOk = 0;
constexpr int kConfigError = 2;
constexpr int kScenarioError = 3;
constexpr int kThresholdError = 4;

int classify(const holo::Error& e) {
  return e.code() == holo::ErrorCode::ConfigInvalid ? kConfigError
                                                    : kScenarioError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometric-phase gate simulator"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = ".";
  int workers = 0;
  bool fail_fast = false;

  CLI::App* run = app.add_subcommand("run", "execute a scenario config");
  run->add_option("config", config_path, "scenario config (JSON)")->required();
  run->add_option("--out", out_dir, "directory for report files");
  run->add_option("--workers", workers,
                  "worker threads for sweep points (0 = default)");
  run->add_flag("--fail-fast", fail_fast, "abort on the first failed point");

  std::string validate_path;
  CLI::App* validate =
      app.add_subcommand("validate", "check a config without running it");
  validate->add_option("config", validate_path, "scenario config (JSON)")
      ->required();

  CLI::App* families =
      app.add_subcommand("list-families", "print the built-in families");

  CLI11_PARSE(app, argc, argv);

  try {
    if (families->parsed()) {
      for (const holo::FamilyInfo& info : holo::family_registry()) {
        std::printf("%-10s parameters: %s; coordinates: %s\n",
                    info.name.c_str(), info.parameters.c_str(),
                    info.coordinates.c_str());
      }
      return kOk;
    }
    if (validate->parsed()) {
      holo::resolve_config(holo::load_json_file(validate_path));
      std::printf("ok\n");
      return kOk;
    }
    const holo::Json config = holo::load_json_file(config_path);
    holo::RunOptions options;
    options.out_dir = out_dir;
    options.workers = workers;
    options.fail_fast = fail_fast;
    const holo::ScenarioOutcome outcome = holo::run_scenario(config, options);
    for (const std::string& file : outcome.written_files)
      std::printf("%s\n", file.c_str());
    return outcome.threshold_failure ? kThresholdError : kOk;
  } catch (const holo::Error& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return classify(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kScenarioError;
  }
}
