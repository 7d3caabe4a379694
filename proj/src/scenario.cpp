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

#include "holo/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "holo/parallel.hpp"

namespace holo {

namespace {

constexpr double kPi = std::numbers::pi;

[[noreturn]] void config_fail(const std::string& path, const std::string& what) {
  fail(ErrorCode::ConfigInvalid, path + " " + what);
}

std::string joined(const std::string& prefix, const std::string& key) {
  return prefix.empty() ? key : prefix + "." + key;
}

void check_keys(const Json& obj, const std::string& prefix,
                const std::set<std::string>& allowed) {
  if (!obj.is_object()) config_fail(prefix, "must be an object");
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (!allowed.count(key))
      config_fail(joined(prefix, key), "is not a recognized key");
  }
}

double get_number(const Json& obj, const std::string& prefix,
                  const std::string& key, double fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_number())
    config_fail(joined(prefix, key), "must be a number");
  return obj[key].get<double>();
}

double require_number(const Json& obj, const std::string& prefix,
                      const std::string& key) {
  if (!obj.contains(key)) config_fail(joined(prefix, key), "is required");
  if (!obj[key].is_number())
    config_fail(joined(prefix, key), "must be a number");
  return obj[key].get<double>();
}

long get_integer(const Json& obj, const std::string& prefix,
                 const std::string& key, long fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_number_integer())
    config_fail(joined(prefix, key), "must be an integer");
  return obj[key].get<long>();
}

Route route_from_name(const std::string& name, const std::string& path) {
  if (name == "closed_form") return Route::closed_form;
  if (name == "wilson") return Route::wilson;
  if (name == "oracle") return Route::oracle;
  config_fail(path, "'" + name + "' is not a route");
}

struct SweepRow {
  std::vector<std::string> cells;
  bool ok = true;
  std::string error;
};

std::vector<double> expand_sweep_values(const Json& sweep,
                                        const std::string& prefix) {
  if (sweep.contains("values")) {
    if (!sweep["values"].is_array())
      config_fail(prefix + ".values", "must be an array of numbers");
    std::vector<double> values;
    for (const auto& v : sweep["values"]) {
      if (!v.is_number()) config_fail(prefix + ".values", "must hold numbers");
      values.push_back(v.get<double>());
    }
    return values;
  }
  if (!sweep.contains("grid"))
    config_fail(prefix, "needs either 'values' or 'grid'");
  const Json& grid = sweep["grid"];
  check_keys(grid, prefix + ".grid", {"kind", "min", "max", "count"});
  const std::string kind = grid.value("kind", "linear");
  if (kind != "linear" && kind != "log")
    config_fail(prefix + ".grid.kind", "must be 'linear' or 'log'");
  const double lo = require_number(grid, prefix + ".grid", "min");
  const double hi = require_number(grid, prefix + ".grid", "max");
  const long count = get_integer(grid, prefix + ".grid", "count", 0);
  if (count < 0) config_fail(prefix + ".grid.count", "must be nonnegative");
  if (kind == "log" && !(lo > 0.0 && hi > 0.0))
    config_fail(prefix + ".grid.min", "log grids need positive bounds");
  if (count > 0 && !(hi >= lo))
    config_fail(prefix + ".grid.max", "must be at least min");
  std::vector<double> values(count);
  for (long i = 0; i < count; ++i) {
    const double f = (count == 1) ? 0.0 : static_cast<double>(i) / (count - 1);
    values[i] = (kind == "linear") ? lo + f * (hi - lo)
                                   : lo * std::pow(hi / lo, f);
  }
  return values;
}

TwoSpinSystem two_spin_from(const Json& obj, const std::string& prefix) {
  check_keys(obj, prefix, {"omega_a", "omega_b", "j"});
  TwoSpinSystem system;
  system.omega_a = require_number(obj, prefix, "omega_a");
  system.omega_b = require_number(obj, prefix, "omega_b");
  system.j = require_number(obj, prefix, "j");
  if (!(system.omega_a > system.omega_b))
    config_fail(prefix + ".omega_a", "must exceed omega_b");
  return system;
}

DriveTone drive_tone_from(const Json& obj, const std::string& prefix) {
  check_keys(obj, prefix, {"omega", "omega1"});
  DriveTone tone;
  tone.omega = require_number(obj, prefix, "omega");
  tone.omega1 = require_number(obj, prefix, "omega1");
  if (tone.omega1 < 0.0) config_fail(prefix + ".omega1", "must be nonnegative");
  return tone;
}

RabiDrive rabi_from_theta(double theta) {
  // Unit effective field with the requested cone angle.
  return RabiDrive{1.0 + std::cos(theta), 1.0, std::sin(theta)};
}

double fold_positive(double angle) {
  double folded = std::fmod(angle, 2.0 * kPi);
  if (folded < 0.0) folded += 2.0 * kPi;
  return folded;
}

struct ResolvedCommon {
  std::string scenario;
  std::uint64_t seed = 0;
  std::vector<Route> routes;
  int segments = 4000;
  double total_time = 1000.0;
  int time_steps = 0;
  Json params;
  Json sweep;       // null when absent
  Json thresholds;  // null when absent
  std::string json_path;
  std::string csv_path;
};

const std::set<std::string> kScenarios = {
    "phase_gate",    "cphase",          "hadamard",
    "wilson_convergence", "deformation_invariance", "amplitude_sweep"};

ResolvedCommon parse_common(const Json& config) {
  check_keys(config, "",
             {"scenario", "seed", "routes", "params", "loop", "schedule",
              "sweep", "thresholds", "output"});
  ResolvedCommon out;
  if (!config.contains("scenario") || !config["scenario"].is_string())
    config_fail("scenario", "is required and must be a string");
  out.scenario = config["scenario"].get<std::string>();
  if (!kScenarios.count(out.scenario))
    config_fail("scenario", "'" + out.scenario + "' is not a known scenario");

  if (config.contains("seed")) {
    if (!config["seed"].is_number_unsigned() && !config["seed"].is_number_integer())
      config_fail("seed", "must be a nonnegative integer");
    const long long seed = config["seed"].get<long long>();
    if (seed < 0) config_fail("seed", "must be nonnegative");
    out.seed = static_cast<std::uint64_t>(seed);
  }

  if (config.contains("routes")) {
    if (!config["routes"].is_array() || config["routes"].empty())
      config_fail("routes", "must be a nonempty array");
    for (const auto& r : config["routes"]) {
      if (!r.is_string()) config_fail("routes", "must hold strings");
      out.routes.push_back(route_from_name(r.get<std::string>(), "routes"));
    }
  } else {
    out.routes = {Route::closed_form, Route::wilson};
  }

  if (config.contains("loop")) {
    check_keys(config["loop"], "loop", {"segments"});
    const long segments = get_integer(config["loop"], "loop", "segments", 4000);
    if (segments < 100 || segments > 1000000)
      config_fail("loop.segments", "must lie in [100, 1000000]");
    out.segments = static_cast<int>(segments);
  }

  if (config.contains("schedule")) {
    check_keys(config["schedule"], "schedule", {"total_time", "time_steps"});
    out.total_time =
        get_number(config["schedule"], "schedule", "total_time", 1000.0);
    if (!(out.total_time > 0.0) || out.total_time > 1e6)
      config_fail("schedule.total_time", "must lie in (0, 1e6]");
    const long steps =
        get_integer(config["schedule"], "schedule", "time_steps", 0);
    if (steps != 0 && (steps < 1000 || steps > 100000000))
      config_fail("schedule.time_steps", "must be 0 (auto) or at least 1000");
    out.time_steps = static_cast<int>(steps);
  }

  out.params = config.contains("params") ? config["params"] : Json::object();
  if (!out.params.is_object()) config_fail("params", "must be an object");
  out.sweep = config.contains("sweep") ? config["sweep"] : Json();
  if (!out.sweep.is_null())
    check_keys(out.sweep, "sweep", {"parameter", "values", "grid"});
  out.thresholds =
      config.contains("thresholds") ? config["thresholds"] : Json();
  if (!out.thresholds.is_null()) {
    if (!out.thresholds.is_object())
      config_fail("thresholds", "must be an object");
    for (const auto& [key, value] : out.thresholds.items()) {
      if (!value.is_number())
        config_fail(joined("thresholds", key), "must be a number");
    }
  }

  out.json_path = "report.json";
  out.csv_path = out.scenario + ".csv";
  if (config.contains("output")) {
    check_keys(config["output"], "output", {"json", "csv"});
    if (config["output"].contains("json")) {
      if (!config["output"]["json"].is_string())
        config_fail("output.json", "must be a string");
      out.json_path = config["output"]["json"].get<std::string>();
    }
    if (config["output"].contains("csv")) {
      if (!config["output"]["csv"].is_string())
        config_fail("output.csv", "must be a string");
      out.csv_path = config["output"]["csv"].get<std::string>();
    }
  }
  return out;
}

Json resolved_json(const ResolvedCommon& c) {
  Json out;
  out["scenario"] = c.scenario;
  out["seed"] = c.seed;
  Json routes = Json::array();
  for (Route r : c.routes) routes.push_back(route_name(r));
  out["routes"] = routes;
  out["params"] = c.params;
  out["loop"] = Json{{"segments", c.segments}};
  out["schedule"] =
      Json{{"total_time", c.total_time}, {"time_steps", c.time_steps}};
  if (!c.sweep.is_null()) out["sweep"] = c.sweep;
  if (!c.thresholds.is_null()) out["thresholds"] = c.thresholds;
  out["output"] = Json{{"json", c.json_path}, {"csv", c.csv_path}};
  return out;
}

GateOptions gate_options(const ResolvedCommon& c, const RunOptions& run) {
  GateOptions options;
  options.wilson_steps = c.segments;
  options.oracle_time = c.total_time;
  options.oracle_steps = c.time_steps;
  options.workers = run.workers;
  return options;
}

struct ScenarioData {
  Json results;
  std::map<std::string, double> metrics;
  std::vector<std::string> csv_header;
  std::vector<SweepRow> csv_rows;
  bool wants_csv = false;
};

void add_route_reports(ScenarioData& data, const ResolvedCommon& c,
                       const std::function<GateReport(Route)>& make) {
  Json route_reports;
  std::vector<Matrix> gates;
  double max_distance = 0.0;
  for (Route route : c.routes) {
    const GateReport report = make(route);
    route_reports[route_name(route)] = gate_report_json(report);
    gates.push_back(report.achieved);
    max_distance = std::max(max_distance, report.distance);
  }
  double disagreement = 0.0;
  for (size_t i = 0; i < gates.size(); ++i)
    for (size_t j = i + 1; j < gates.size(); ++j)
      disagreement =
          std::max(disagreement,
                   unitary_distance(gates[i], gates[j],
                                    DistanceMode::up_to_global_phase));
  data.results["routes"] = std::move(route_reports);
  data.metrics["distance"] = max_distance;
  if (gates.size() > 1) data.metrics["route_disagreement"] = disagreement;
}

// ---------------------------------------------------------------- phase_gate

ScenarioData run_phase_gate(const ResolvedCommon& c, const RunOptions& run) {
  check_keys(c.params, "params", {"theta", "drive", "loops"});
  const long loops = get_integer(c.params, "params", "loops", 1);
  RabiDrive drive;
  if (c.params.contains("drive")) {
    if (c.params.contains("theta"))
      config_fail("params.theta", "conflicts with params.drive");
    const Json& d = c.params["drive"];
    check_keys(d, "params.drive", {"omega0", "omega", "omega1"});
    drive.omega0 = require_number(d, "params.drive", "omega0");
    drive.omega = require_number(d, "params.drive", "omega");
    drive.omega1 = require_number(d, "params.drive", "omega1");
  } else {
    drive = rabi_from_theta(get_number(c.params, "params", "theta", kPi / 2.0));
  }

  ScenarioData data;
  const GateOptions options = gate_options(c, run);

  if (!c.sweep.is_null()) {
    const std::string parameter = c.sweep.value("parameter", "");
    if (parameter != "theta")
      config_fail("sweep.parameter", "phase_gate sweeps over 'theta'");
    const std::vector<double> thetas = expand_sweep_values(c.sweep, "sweep");
    const Route route = c.routes.front();
    data.wants_csv = true;
    data.csv_header = {"theta", "gamma_aligned", "alpha_achieved", "distance",
                       "status"};
    data.csv_rows.resize(thetas.size());
    parallel_for(static_cast<int>(thetas.size()), run.workers, [&](int i) {
      SweepRow& row = data.csv_rows[i];
      try {
        const GateReport report =
            phase_gate(rabi_from_theta(thetas[i]), loops, route, options);
        row.cells = {format_double(thetas[i]),
                     format_double(report.phases.at("gamma_aligned")),
                     format_double(fold_positive(
                         report.phases.at("gamma_anti") -
                         report.phases.at("gamma_aligned"))),
                     format_double(report.distance), "ok"};
      } catch (const Error& e) {
        row.ok = false;
        row.error = e.what();
        row.cells = {format_double(thetas[i]), "", "", "", e.what()};
      }
    });
    data.results["sweep_points"] = thetas.size();
    return data;
  }

  add_route_reports(data, c, [&](Route route) {
    GateReport report = phase_gate(drive, loops, route, options);
    report.phases["alpha_achieved"] = fold_positive(
        report.phases.at("gamma_anti") - report.phases.at("gamma_aligned"));
    return report;
  });
  return data;
}

// -------------------------------------------------------------------- cphase

ScenarioData run_cphase(const ResolvedCommon& c, const RunOptions& run) {
  check_keys(c.params, "params", {"two_spin", "drive"});
  if (!c.params.contains("two_spin"))
    config_fail("params.two_spin", "is required");
  if (!c.params.contains("drive")) config_fail("params.drive", "is required");
  const TwoSpinSystem system =
      two_spin_from(c.params["two_spin"], "params.two_spin");
  const DriveTone tone = drive_tone_from(c.params["drive"], "params.drive");

  ScenarioData data;
  const ConditionalPhases cf = conditional_phases(system, tone);
  add_route_reports(data, c, [&](Route route) {
    return cphase_gate(system, tone, route, gate_options(c, run));
  });
  data.results["beta_closed_form"] = cf.beta;
  data.results["delta_gamma"] = cf.delta_gamma;
  data.metrics["beta_error"] = 0.0;
  for (const auto& [name, report] : data.results["routes"].items()) {
    (void)name;
    const double beta = report["phases"]["beta"].get<double>();
    data.metrics["beta_error"] =
        std::max(data.metrics["beta_error"],
                 std::abs(std::remainder(beta - cf.beta, 2.0 * kPi)));
  }
  return data;
}

// ------------------------------------------------------------------ hadamard

ScenarioData run_hadamard(const ResolvedCommon& c, const RunOptions& run) {
  check_keys(c.params, "params", {"theta_hold"});
  const double theta_hold =
      get_number(c.params, "params", "theta_hold", std::acos(1.0 / 8.0));

  ScenarioData data;
  add_route_reports(data, c, [&](Route route) {
    return hadamard_gate(theta_hold, route, gate_options(c, run));
  });
  double dist_rotation = 0.0;
  for (const auto& [name, report] : data.results["routes"].items()) {
    (void)name;
    dist_rotation = std::max(
        dist_rotation,
        report["diagnostics"]["distance_to_rotation"].get<double>());
  }
  data.metrics["distance_to_rotation"] = dist_rotation;
  return data;
}

// -------------------------------------------------------- wilson_convergence

ScenarioData run_wilson_convergence(const ResolvedCommon& c,
                                    const RunOptions& run) {
  check_keys(c.params, "params", {"family", "theta", "m_values"});
  const std::string which = c.params.value("family", "tripod");
  if (which != "tripod" && which != "bloch")
    config_fail("params.family", "must be 'tripod' or 'bloch'");
  const double theta = get_number(c.params, "params", "theta",
                                  which == "tripod" ? std::acos(1.0 / 8.0)
                                                    : kPi / 3.0);
  std::vector<int> m_values = {250, 500, 1000, 2000, 4000};
  if (c.params.contains("m_values")) {
    m_values.clear();
    if (!c.params["m_values"].is_array())
      config_fail("params.m_values", "must be an array of integers");
    for (const auto& v : c.params["m_values"]) {
      if (!v.is_number_integer())
        config_fail("params.m_values", "must hold integers");
      const long m = v.get<long>();
      if (m < 100 || m > 1000000)
        config_fail("params.m_values", "entries must lie in [100, 1000000]");
      m_values.push_back(static_cast<int>(m));
    }
  }

  const ParameterPath path = phi_circle_path(theta);
  std::vector<double> errors(m_values.size());
  parallel_for(static_cast<int>(m_values.size()), run.workers, [&](int i) {
    LoopOptions loop;
    loop.steps = m_values[i];
    if (which == "tripod") {
      loop.initial_frame = tripod_dark_frame(theta, 0.0);
      const Holonomy h = wilson_loop(tripod_family(), path,
                                     ClusterSelector{0.0, 2}, loop);
      errors[i] = unitary_distance(
          h.matrix, rotation_matrix(2.0 * kPi * std::cos(theta)),
          DistanceMode::exact);
    } else {
      const HamiltonianFamily family = bloch_family();
      loop.initial_frame =
          family.analytic_frames(path.position(0.0), ClusterSelector{0.5, 1});
      const Holonomy h =
          wilson_loop(family, path, ClusterSelector{0.5, 1}, loop);
      const Complex exact =
          std::exp(Complex(0, -kPi * (1.0 - std::cos(theta))));
      errors[i] = std::abs(h.matrix(0, 0) - exact);
    }
  });

  ScenarioData data;
  data.wants_csv = true;
  data.csv_header = {"segments", "error", "ratio_to_previous", "status"};
  double min_ratio = std::numeric_limits<double>::infinity();
  double max_ratio = 0.0;
  for (size_t i = 0; i < m_values.size(); ++i) {
    SweepRow row;
    std::string ratio_cell;
    if (i > 0 && errors[i - 1] > 0.0) {
      const double ratio = errors[i] / errors[i - 1];
      ratio_cell = format_double(ratio);
      min_ratio = std::min(min_ratio, ratio);
      max_ratio = std::max(max_ratio, ratio);
    }
    row.cells = {std::to_string(m_values[i]), format_double(errors[i]),
                 ratio_cell, "ok"};
    data.csv_rows.push_back(std::move(row));
  }
  data.results["family"] = which;
  data.results["theta"] = theta;
  data.results["errors"] = errors;
  if (m_values.size() > 1) {
    data.metrics["min_ratio"] = min_ratio;
    data.metrics["max_ratio"] = max_ratio;
  }
  data.metrics["final_error"] = errors.back();
  return data;
}

// --------------------------------------------------- deformation_invariance

ScenarioData run_deformation(const ResolvedCommon& c, const RunOptions& run) {
  check_keys(c.params, "params", {"theta0", "seeds", "amplitude", "harmonics"});
  const double theta0 = get_number(c.params, "params", "theta0", kPi / 3.0);
  const long seeds = get_integer(c.params, "params", "seeds", 5);
  const double amplitude = get_number(c.params, "params", "amplitude", 0.1);
  const long harmonics = get_integer(c.params, "params", "harmonics", 3);
  if (seeds < 1) config_fail("params.seeds", "must be positive");
  if (harmonics < 1) config_fail("params.harmonics", "must be positive");

  const HamiltonianFamily family = bloch_family();
  const ClusterSelector upper{0.5, 1};
  LoopOptions loop;
  loop.steps = c.segments;
  loop.workers = run.workers;
  const double gamma_circle =
      abelian_phase(family, phi_circle_path(theta0), upper, loop);

  ScenarioData data;
  data.wants_csv = true;
  data.csv_header = {"seed",      "theta_offset",      "raw_solid_angle",
                     "gamma_raw", "gamma_renormalized", "deviation",
                     "status"};
  data.csv_rows.resize(seeds);
  std::vector<double> deviations(seeds, 0.0);
  parallel_for(static_cast<int>(seeds), run.workers, [&](int i) {
    SweepRow& row = data.csv_rows[i];
    const std::uint64_t seed = c.seed + static_cast<std::uint64_t>(i);
    try {
      LoopOptions inner = loop;
      inner.workers = 1;  // outer loop already parallel
      const PerturbedCone raw = perturbed_cone_path(
          theta0, seed, amplitude, static_cast<int>(harmonics), false);
      const double gamma_raw = abelian_phase(family, raw.path, upper, inner);
      const PerturbedCone matched = perturbed_cone_path(
          theta0, seed, amplitude, static_cast<int>(harmonics), true);
      const double gamma_renorm =
          abelian_phase(family, matched.path, upper, inner);
      deviations[i] = std::abs(gamma_renorm - gamma_circle);
      row.cells = {std::to_string(seed),
                   format_double(matched.theta_offset),
                   format_double(raw.raw_solid_angle),
                   format_double(gamma_raw),
                   format_double(gamma_renorm),
                   format_double(deviations[i]),
                   "ok"};
    } catch (const Error& e) {
      row.ok = false;
      row.error = e.what();
      row.cells = {std::to_string(seed), "", "", "", "", "", e.what()};
    }
  });

  data.results["gamma_circle"] = gamma_circle;
  data.results["theta0"] = theta0;
  double max_dev = 0.0;
  for (double d : deviations) max_dev = std::max(max_dev, d);
  data.metrics["max_gamma_deviation"] = max_dev;
  return data;
}

// ------------------------------------------------------------ amplitude_sweep

ScenarioData run_amplitude_sweep(const ResolvedCommon& c,
                                 const RunOptions& run) {
  check_keys(c.params, "params", {"two_spin", "omega"});
  if (!c.params.contains("two_spin"))
    config_fail("params.two_spin", "is required");
  const TwoSpinSystem system =
      two_spin_from(c.params["two_spin"], "params.two_spin");
  const double omega = require_number(c.params, "params", "omega");

  std::vector<double> amplitudes;
  if (!c.sweep.is_null()) {
    const std::string parameter = c.sweep.value("parameter", "");
    if (parameter != "omega1")
      config_fail("sweep.parameter", "amplitude sweeps run over 'omega1'");
    amplitudes = expand_sweep_values(c.sweep, "sweep");
  } else {
    // Default: 200 log-spaced amplitudes over two decades around pi j.
    const double pij = std::abs(system.pi_j());
    if (pij == 0.0)
      config_fail("params.two_spin.j", "must be nonzero for the default grid");
    for (int i = 0; i < 200; ++i)
      amplitudes.push_back(0.01 * pij *
                           std::pow(1000.0, static_cast<double>(i) / 199.0));
  }

  ScenarioData data;
  data.wants_csv = true;
  data.csv_header = {"omega1", "delta_gamma", "abs_delta_gamma", "beta",
                     "status"};
  data.csv_rows.resize(amplitudes.size());
  std::vector<double> delta(amplitudes.size(),
                            std::numeric_limits<double>::quiet_NaN());
  parallel_for(static_cast<int>(amplitudes.size()), run.workers, [&](int i) {
    SweepRow& row = data.csv_rows[i];
    try {
      const ConditionalPhases cp =
          conditional_phases(system, DriveTone{omega, amplitudes[i]});
      delta[i] = cp.delta_gamma;
      row.cells = {format_double(amplitudes[i]), format_double(cp.delta_gamma),
                   format_double(std::abs(cp.delta_gamma)),
                   format_double(cp.beta), "ok"};
    } catch (const Error& e) {
      row.ok = false;
      row.error = e.what();
      row.cells = {format_double(amplitudes[i]), "", "", "", e.what()};
    }
  });

  // Unimodality diagnostic: sign changes of the discrete differences.
  int sign_changes = 0;
  int previous_sign = 0;
  size_t best = 0;
  bool have_best = false;
  for (size_t i = 0; i < amplitudes.size(); ++i) {
    if (std::isnan(delta[i])) continue;
    if (!have_best || std::abs(delta[i]) > std::abs(delta[best])) {
      best = i;
      have_best = true;
    }
    if (i > 0 && !std::isnan(delta[i - 1])) {
      const double diff = std::abs(delta[i]) - std::abs(delta[i - 1]);
      const int sign = (diff > 0.0) - (diff < 0.0);
      if (sign != 0) {
        if (previous_sign != 0 && sign != previous_sign) ++sign_changes;
        previous_sign = sign;
      }
    }
  }
  data.results["sign_changes"] = sign_changes;
  if (have_best) {
    data.results["grid_maximum"] =
        Json{{"omega1", amplitudes[best]}, {"delta_gamma", delta[best]}};
  }

  try {
    const OptimalAmplitude opt = optimal_amplitude(system, omega);
    data.results["optimal_amplitude"] = Json{
        {"omega1_star", opt.omega1_star}, {"delta_gamma_max", opt.delta_gamma_max}};
    if (have_best) {
      double resolution = 0.0;
      if (best > 0) resolution = std::max(resolution,
                                          amplitudes[best] - amplitudes[best - 1]);
      if (best + 1 < amplitudes.size())
        resolution = std::max(resolution, amplitudes[best + 1] - amplitudes[best]);
      data.metrics["grid_vs_search_gap"] =
          std::abs(amplitudes[best] - opt.omega1_star);
      data.results["grid_resolution_at_maximum"] = resolution;
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoInteriorMaximum) throw;
    data.results["optimal_amplitude"] = Json{{"error", e.what()}};
  }
  return data;
}

}  // namespace

Json resolve_config(const Json& config) {
  const ResolvedCommon c = parse_common(config);
  return resolved_json(c);
}

ScenarioOutcome run_scenario(const Json& config, const RunOptions& options) {
  const ResolvedCommon c = parse_common(config);

  ScenarioData data;
  try {
    if (c.scenario == "phase_gate") {
      data = run_phase_gate(c, options);
    } else if (c.scenario == "cphase") {
      data = run_cphase(c, options);
    } else if (c.scenario == "hadamard") {
      data = run_hadamard(c, options);
    } else if (c.scenario == "wilson_convergence") {
      data = run_wilson_convergence(c, options);
    } else if (c.scenario == "deformation_invariance") {
      data = run_deformation(c, options);
    } else {
      data = run_amplitude_sweep(c, options);
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ConfigInvalid) throw;
    fail(ErrorCode::ScenarioFailed,
         std::string("scenario '") + c.scenario + "' failed: " + e.what());
  }

  if (options.fail_fast) {
    for (const SweepRow& row : data.csv_rows) {
      if (!row.ok)
        fail(ErrorCode::ScenarioFailed,
             "sweep point failed (" + row.error + ")");
    }
  }

  ScenarioOutcome outcome;
  Json report;
  report["schema"] = "holonomy-report/1";
  report["config"] = resolved_json(c);
  report["conventions"] = conventions_json();
  report["results"] = data.results;

  Json metrics;
  for (const auto& [key, value] : data.metrics) metrics[key] = value;
  report["metrics"] = metrics;

  if (!c.thresholds.is_null()) {
    Json checked = Json::array();
    bool all_pass = true;
    for (const auto& [key, limit] : c.thresholds.items()) {
      if (!data.metrics.count(key))
        config_fail(joined("thresholds", key),
                    "is not a metric of scenario '" + c.scenario + "'");
      const double value = data.metrics.at(key);
      const bool pass = value <= limit.get<double>();
      all_pass = all_pass && pass;
      checked.push_back(Json{{"metric", key},
                             {"limit", limit.get<double>()},
                             {"value", value},
                             {"passed", pass}});
    }
    report["thresholds"] = Json{{"checked", checked}, {"passed", all_pass}};
    outcome.threshold_failure = !all_pass;
  }

  const auto join_path = [&](const std::string& leaf) {
    if (leaf.empty() || leaf.front() == '/') return leaf;
    return options.out_dir.empty() ? leaf : options.out_dir + "/" + leaf;
  };
  const std::string json_path = join_path(c.json_path);
  write_json_report(json_path, report);
  outcome.written_files.push_back(json_path);
  if (data.wants_csv) {
    std::vector<std::vector<std::string>> rows;
    rows.reserve(data.csv_rows.size());
    for (const SweepRow& row : data.csv_rows) rows.push_back(row.cells);
    const std::string csv_path = join_path(c.csv_path);
    write_csv(csv_path, data.csv_header, rows);
    outcome.written_files.push_back(csv_path);
  }
  outcome.report = std::move(report);
  return outcome;
}

}  // namespace holo
