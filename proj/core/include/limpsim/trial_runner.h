// Copyright 2026 The limpsim Authors.
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

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

#include "limpsim/random.h"

namespace limpsim {

// Number of workers used when the caller passes 0.
inline unsigned DefaultWorkerCount() {
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs `trials` independent trials and sums their tallies.
//
// Trial i draws from TrialEngine(master_seed, i) no matter which worker runs
// it, and Tally::operator+= must be commutative and associative (integer
// counters), so the result does not depend on `workers`.
template <typename Tally, typename TrialFn>
Tally RunTrials(std::uint64_t trials, std::uint64_t master_seed, unsigned workers,
                TrialFn trial) {
  if (workers == 0) workers = DefaultWorkerCount();
  workers = static_cast<unsigned>(
      std::min<std::uint64_t>(workers, std::max<std::uint64_t>(trials, 1)));

  std::vector<Tally> partial(workers);
  std::vector<std::exception_ptr> errors(workers);
  auto run_range = [&](unsigned worker) {
    const std::uint64_t begin = trials * worker / workers;
    const std::uint64_t end = trials * (worker + 1) / workers;
    try {
      for (std::uint64_t i = begin; i < end; ++i) {
        Engine engine = TrialEngine(master_seed, i);
        trial(engine, partial[worker]);
      }
    } catch (...) {
      errors[worker] = std::current_exception();
    }
  };

  if (workers == 1) {
    run_range(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run_range, w);
  }
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }

  Tally total{};
  for (const Tally& tally : partial) total += tally;
  return total;
}

}  // namespace limpsim
