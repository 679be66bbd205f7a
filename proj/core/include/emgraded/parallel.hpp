// Copyright 2026 The emgraded Authors
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
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace emg {

/// Smallest i in [0, count) with pred(i), evaluated on `jobs` threads.
///
/// Workers claim chunks in increasing order and stop once every index below
/// the best hit is settled, so the answer does not depend on scheduling.
/// The first exception thrown by `pred` is rethrown on the calling thread.
template <typename Pred>
std::optional<std::size_t> parallel_find_first(std::size_t count, unsigned jobs, Pred&& pred) {
  if (jobs <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i)
      if (pred(i)) return i;
    return std::nullopt;
  }
  const std::size_t chunk = std::max<std::size_t>(1, std::min<std::size_t>(64, count / (jobs * 8)));
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{count};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    try {
      while (true) {
        const std::size_t begin = next.fetch_add(chunk);
        if (begin >= count || begin >= best.load()) return;
        const std::size_t end = std::min(count, begin + chunk);
        for (std::size_t i = begin; i < end && i < best.load(); ++i) {
          if (pred(i)) {
            std::size_t cur = best.load();
            while (i < cur && !best.compare_exchange_weak(cur, i)) {
            }
            break;
          }
        }
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      best.store(0);
    }
  };

  std::vector<std::thread> threads;
  const unsigned n = std::min<std::size_t>(jobs, count);
  for (unsigned t = 0; t < n; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
  if (best.load() < count) return best.load();
  return std::nullopt;
}

}  // namespace emg
