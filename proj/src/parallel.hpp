//
// qfree - forbidden-subcube constructions in the hypercube
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace qfree::detail {

// Split [0, count) into `workers` contiguous ranges and run fn(begin, end,
// worker) for each, the last one on the calling thread.
template <typename Fn>
void run_ranges(std::uint64_t count, unsigned workers, Fn &&fn) {
  workers = static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(workers, count)));
  if (workers == 1) {
    fn(std::uint64_t{0}, count, 0U);
    return;
  }
  std::vector<std::jthread> pool;
  const std::uint64_t step = (count + workers - 1) / workers;
  for (unsigned w = 0; w + 1 < workers; ++w)
    pool.emplace_back([&fn, w, step, count] {
      fn(std::min(count, w * step), std::min(count, (w + 1) * step), w);
    });
  fn(std::min(count, (workers - 1) * step), count, workers - 1);
}

} // namespace qfree::detail
