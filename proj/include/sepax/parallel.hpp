/*
 * Copyright 2026 The sepax Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SEPAX_PARALLEL_HPP
#define SEPAX_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace sepax {

/// 0 means "all hardware threads".
inline unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace detail {

// Runs body(i) for i in [0, n) on up to `workers` threads, handing out
// indices in increasing order. body returns false to stop its thread early.
template <typename Body>
void run_indexed(std::size_t n, unsigned workers, Body&& body) {
  workers = std::min<std::size_t>(resolve_workers(workers), std::max<std::size_t>(n, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!body(i)) break;
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      try {
        for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
          if (!body(i)) break;
        }
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(n);
      }
    });
  }
  pool.clear();
  if (error) std::rethrow_exception(error);
}

}  // namespace detail

/// Returns fn(i) for the smallest i in [0, n) where fn yields a value. The
/// answer does not depend on the worker count or scheduling.
template <typename Fn>
auto first_in_order(std::size_t n, unsigned workers, Fn&& fn)
    -> decltype(fn(std::size_t{})) {
  using Result = decltype(fn(std::size_t{}));
  std::atomic<std::size_t> best{n};
  std::mutex mutex;
  Result found;
  detail::run_indexed(n, workers, [&](std::size_t i) {
    if (i > best.load(std::memory_order_relaxed)) return false;
    Result r = fn(i);
    if (!r) return true;
    std::lock_guard lock(mutex);
    if (i < best.load()) {
      best.store(i);
      found = std::move(r);
    }
    return false;
  });
  return found;
}

/// Concatenation of fn(0), fn(1), ..., fn(n-1), each a std::vector.
template <typename Fn>
auto collect_in_order(std::size_t n, unsigned workers, Fn&& fn) -> decltype(fn(std::size_t{})) {
  using Chunk = decltype(fn(std::size_t{}));
  std::vector<Chunk> parts(n);
  detail::run_indexed(n, workers, [&](std::size_t i) {
    parts[i] = fn(i);
    return true;
  });
  Chunk out;
  for (auto& p : parts) {
    out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  }
  return out;
}

}  // namespace sepax

#endif  // SEPAX_PARALLEL_HPP
