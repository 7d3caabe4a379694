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

#include <exception>
#include <functional>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace holo {

/// Runs body(i) for i in [0, count). workers == 1 forces the serial
/// reference loop; workers == 0 uses the OpenMP default. Each index is
/// independent, so results are identical for any worker count; the first
/// exception thrown in a worker is rethrown on the caller.
template <typename Body>
void parallel_for(int count, int workers, Body&& body) {
  if (count <= 0) return;
#ifdef _OPENMP
  if (workers != 1) {
    std::exception_ptr error;
    std::mutex error_mutex;
    const int threads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(threads)
    for (int i = 0; i < count; ++i) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
    return;
  }
#else
  (void)workers;
#endif
  for (int i = 0; i < count; ++i) body(i);
}

inline int hardware_workers() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace holo
