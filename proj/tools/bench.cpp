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

// Compares the serial reference path (workers = 1) against the OpenMP path
// on the two sweep-style workloads: a cone-angle grid of loop holonomies
// and a dense conditional-phase scan.

#include <chrono>
#include <cstdio>
#include <numbers>
#include <vector>

#include "holo/gates.hpp"
#include "holo/parallel.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

double sweep_wilson(int workers) {
  using namespace holo;
  const HamiltonianFamily family = tripod_family();
  const int points = 48;
  std::vector<double> angles(points);
  double checksum = 0.0;
  parallel_for(points, workers, [&](int i) {
    const double theta = 0.2 + (std::numbers::pi - 0.4) * i / (points - 1);
    LoopOptions loop;
    loop.steps = 1500;
    loop.workers = 1;
    loop.initial_frame = tripod_dark_frame(theta, 0.0);
    const Holonomy h =
        wilson_loop(family, phi_circle_path(theta), ClusterSelector{0.0, 2}, loop);
    angles[i] = rotation_angle(h.matrix);
  });
  for (double a : angles) checksum += a;
  return checksum;
}

double sweep_conditional(int workers) {
  using namespace holo;
  const TwoSpinSystem system{20.0, 1.0, 1.0 / std::numbers::pi};
  const int points = 2000000;
  std::vector<double> out(points);
  parallel_for(points, workers, [&](int i) {
    const double w = 1e-2 + 10.0 * i / (points - 1.0);
    out[i] = conditional_phases(system, DriveTone{17.0, w}).delta_gamma;
  });
  double checksum = 0.0;
  for (double v : out) checksum += v;
  return checksum;
}

template <typename Fn>
void report(const char* name, Fn&& workload) {
  const auto t_serial = Clock::now();
  const double serial_sum = workload(1);
  const double serial = seconds_since(t_serial);

  const int threads = holo::hardware_workers();
  const auto t_parallel = Clock::now();
  const double parallel_sum = workload(0);
  const double parallel = seconds_since(t_parallel);

  std::printf("%-24s serial %8.3fs  omp(%d) %8.3fs  speedup %5.2fx  %s\n",
              name, serial, threads, parallel, serial / parallel,
              serial_sum == parallel_sum ? "results identical"
                                         : "RESULTS DIFFER");
}

}  // namespace

int main() {
  report("wilson theta sweep", sweep_wilson);
  report("conditional phase scan", sweep_conditional);
  return 0;
}
