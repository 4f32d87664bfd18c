// Copyright 2026 The Authors.
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

#ifndef MATROID_LAB_PARALLEL_HPP_
#define MATROID_LAB_PARALLEL_HPP_

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace matroid_lab {

// Worker count: explicit value if positive, else MATROID_LAB_THREADS, else
// the hardware concurrency.
inline int ResolveThreads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("MATROID_LAB_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

// Smallest i in [0, count) with pred(i), or -1. Indices are split into
// contiguous blocks handed out dynamically; the result does not depend on
// the schedule. `pred` must be safe to call concurrently.
template <class Pred>
int64_t ParallelFindFirst(int64_t count, int threads, Pred&& pred) {
  threads = std::max(1, threads);
  if (threads == 1 || count < 2) {
    for (int64_t i = 0; i < count; ++i) {
      if (pred(i)) return i;
    }
    return -1;
  }
  const int64_t block = std::max<int64_t>(1, count / (threads * 16));
  std::atomic<int64_t> next{0};
  std::atomic<int64_t> best{count};
  auto worker = [&] {
    while (true) {
      int64_t lo = next.fetch_add(block);
      if (lo >= count || lo >= best.load()) return;
      int64_t hi = std::min(count, lo + block);
      for (int64_t i = lo; i < hi && i < best.load(); ++i) {
        if (pred(i)) {
          int64_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
          break;
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return best.load() == count ? -1 : best.load();
}

}  // namespace matroid_lab

#endif  // MATROID_LAB_PARALLEL_HPP_
