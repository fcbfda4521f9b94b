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

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace hkom {

/// Runs fn(i) for i in [0, count) on `jobs` threads (jobs <= 1 runs inline).
/// Tasks are claimed in increasing order from a shared counter. The first
/// exception thrown is rethrown after all workers stop.
template <typename Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> abort{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    while (!abort.load(std::memory_order_relaxed)) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        abort = true;
      }
    }
  };
  const auto n = static_cast<std::size_t>(jobs) < count ? static_cast<std::size_t>(jobs) : count;
  std::vector<std::thread> threads;
  threads.reserve(n);
  for (std::size_t t = 0; t < n; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

/// Smallest i in [0, count) with fails(i) == true, evaluated in parallel.
/// Tasks above the best failure found so far are skipped, so the answer is
/// the same as a sequential scan regardless of scheduling.
template <typename Fn>
std::optional<std::size_t> parallel_first_failure(std::size_t count, int jobs, Fn&& fails) {
  std::atomic<std::size_t> best{count};
  parallel_for(count, jobs, [&](std::size_t i) {
    if (i >= best.load(std::memory_order_relaxed)) return;
    if (fails(i)) {
      std::size_t cur = best.load();
      while (i < cur && !best.compare_exchange_weak(cur, i)) {
      }
    }
  });
  std::size_t b = best.load();
  if (b == count) return std::nullopt;
  return b;
}

}  // namespace hkom
