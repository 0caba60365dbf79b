// Copyright 2026 The brickqec Authors
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

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace brickqec {

/// Default worker count: BRICKQEC_WORKERS if set, else the hardware
/// concurrency, clamped to [1, 16].
inline int default_workers() {
  if (const char* env = std::getenv("BRICKQEC_WORKERS")) {
    int v = std::atoi(env);
    if (v >= 1) return std::min(v, 64);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(std::min<unsigned>(std::max<unsigned>(hw, 1), 16));
}

/// Runs fn(i) for i in [0, total). Tasks own their state and write results by
/// index, so the outcome is independent of the worker count and scheduling.
inline void parallel_for_index(long long total, int workers,
                               const std::function<void(long long)>& fn) {
  if (workers <= 0) workers = default_workers();
  if (workers == 1 || total <= 1) {
    for (long long i = 0; i < total; ++i) fn(i);
    return;
  }
  std::atomic<long long> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    while (true) {
      long long i = next.fetch_add(1);
      if (i >= total || failed.load()) break;
      try {
        fn(i);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
        break;
      }
    }
  };
  std::vector<std::thread> pool;
  int count = static_cast<int>(std::min<long long>(workers, total));
  pool.reserve(count);
  for (int t = 0; t < count; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failed.load() && error) std::rethrow_exception(error);
}

}  // namespace brickqec
