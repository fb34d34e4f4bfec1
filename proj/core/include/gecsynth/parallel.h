// Copyright 2026 The gecsynth Authors.
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

#ifndef GECSYNTH_PARALLEL_H_
#define GECSYNTH_PARALLEL_H_

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace gecsynth {

// Worker count used when a caller passes 0.
inline unsigned default_workers() {
  return std::max(1u, std::thread::hardware_concurrency());
}

// Calls body(begin, end) over contiguous shards of [0, count). Shards are
// fixed by count and workers, so results written per index are independent
// of scheduling. The first exception thrown by any shard is rethrown.
template <typename Body>
void parallel_shards(std::size_t count, unsigned workers, Body&& body) {
  if (workers == 0) workers = default_workers();
  const std::size_t shards =
      std::min<std::size_t>(workers, std::max<std::size_t>(count, 1));
  if (shards <= 1) {
    body(std::size_t{0}, count);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> threads;
  threads.reserve(shards);
  for (std::size_t s = 0; s < shards; ++s) {
    const std::size_t begin = count * s / shards;
    const std::size_t end = count * (s + 1) / shards;
    threads.emplace_back([&, begin, end] {
      try {
        body(begin, end);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
}

template <typename Body>
void parallel_for(std::size_t count, unsigned workers, Body&& body) {
  parallel_shards(count, workers, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) body(i);
  });
}

}  // namespace gecsynth

#endif  // GECSYNTH_PARALLEL_H_
