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
#include <cstddef>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace spikelab {

/// Worker cap: SPIKE_LAB_THREADS when set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
std::size_t worker_count();

/// Number of chunks parallel_chunks will use for `count` items.
inline std::size_t planned_chunks(std::uint64_t count) {
  return static_cast<std::size_t>(
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(worker_count(), count)));
}

/// Splits [0, count) into contiguous chunks, one per worker, and calls
/// body(begin, end, chunk_index). Chunk i always covers a lower range than
/// chunk i + 1, so per-chunk results merged in chunk order are independent
/// of scheduling.
template <typename Body>
std::size_t parallel_chunks(std::uint64_t count, Body&& body) {
  const std::size_t workers = planned_chunks(count);
  const std::uint64_t step = (count + workers - 1) / workers;
  if (workers == 1) {
    body(std::uint64_t{0}, count, std::size_t{0});
    return 1;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      const std::uint64_t begin = std::min(count, w * step);
      const std::uint64_t end = std::min(count, begin + step);
      threads.emplace_back([&body, &errors, begin, end, w] {
        try {
          body(begin, end, w);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return workers;
}

}  // namespace spikelab
