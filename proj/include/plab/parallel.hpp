#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace plab {

/// Execution knobs for exhaustive loops. Results never depend on `workers`:
/// every exact path accumulates integers and merges them in range order.
struct ExecPolicy {
  unsigned workers = 1;
};

/// Sum `body(begin, end)` over a partition of [0, total) into contiguous
/// chunks, one per worker. `body` must return an exact integer partial sum.
template <typename Body>
std::int64_t parallel_sum(std::uint64_t total, const ExecPolicy& policy, Body&& body) {
  const unsigned workers = std::max(1U, policy.workers);
  if (workers == 1 || total < 4096) return body(std::uint64_t{0}, total);
  std::vector<std::int64_t> partial(workers, 0);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  const std::uint64_t chunk = (total + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = std::min<std::uint64_t>(total, chunk * w);
    const std::uint64_t end = std::min<std::uint64_t>(total, begin + chunk);
    threads.emplace_back([&, w, begin, end] { partial[w] = body(begin, end); });
  }
  for (auto& t : threads) t.join();
  std::int64_t sum = 0;
  for (auto p : partial) sum += p;
  return sum;
}

}  // namespace plab
