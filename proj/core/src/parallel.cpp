#include "sdfrecon/util/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace sdfrecon {

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_chunks(std::int64_t count, int chunks, int threads,
                     const std::function<void(int, std::int64_t, std::int64_t)>& fn) {
  if (count <= 0) return;
  chunks = std::max(1, std::min<std::int64_t>(chunks, count));
  threads = std::max(1, std::min(resolve_threads(threads), chunks));

  auto bounds = [&](int c) {
    const std::int64_t begin = count * c / chunks;
    const std::int64_t end = count * (c + 1) / chunks;
    return std::pair<std::int64_t, std::int64_t>(begin, end);
  };

  if (threads == 1) {
    for (int c = 0; c < chunks; ++c) {
      auto [b, e] = bounds(c);
      fn(c, b, e);
    }
    return;
  }

  std::atomic<int> next{0};
  auto worker = [&] {
    for (;;) {
      const int c = next.fetch_add(1);
      if (c >= chunks) return;
      auto [b, e] = bounds(c);
      fn(c, b, e);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads - 1);
  for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
}

void parallel_for(std::int64_t count, int threads,
                  const std::function<void(std::int64_t)>& fn) {
  const int chunks = std::max(1, resolve_threads(threads) * 4);
  parallel_chunks(count, chunks, threads, [&](int, std::int64_t b, std::int64_t e) {
    for (std::int64_t i = b; i < e; ++i) fn(i);
  });
}

}  // namespace sdfrecon
