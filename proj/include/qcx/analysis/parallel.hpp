// Copyright 2026 The qcomplex Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace qcx {

/// Computes tasks [0, count) on `workers` threads and hands results to
/// `consume` strictly in index order, one call at a time.
///
/// `consume(i, result)` returns false to stop early; tasks already running
/// finish but are not consumed. The first exception thrown by `compute` or
/// `consume` stops the run and is rethrown here after all threads join.
/// Returns the number of results consumed.
template <class Compute, class Consume>
std::size_t run_ordered(std::size_t count, int workers, Compute compute, Consume consume) {
  using Result = decltype(compute(std::size_t{0}));
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::mutex mu;
  std::map<std::size_t, Result> pending;
  std::size_t emitted = 0;
  std::exception_ptr error;

  auto worker = [&] {
    while (!stop.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        Result r = compute(i);
        std::lock_guard<std::mutex> lock(mu);
        if (stop.load()) return;
        pending.emplace(i, std::move(r));
        for (auto it = pending.find(emitted); it != pending.end(); it = pending.find(emitted)) {
          const bool keep_going = consume(it->first, it->second);
          pending.erase(it);
          ++emitted;
          if (!keep_going) {
            stop.store(true);
            return;
          }
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!error) error = std::current_exception();
        stop.store(true);
        return;
      }
    }
  };

  const int n_threads = std::max(1, std::min<int>(workers, static_cast<int>(count)));
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(n_threads));
    for (int t = 0; t < n_threads; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  if (error) std::rethrow_exception(error);
  return emitted;
}

}  // namespace qcx
