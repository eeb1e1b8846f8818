#pragma once

// Internal: run fn(index) for index in [0, count) across a fixed number of
// worker threads. Each index is processed exactly once and writes to disjoint
// state, so the result is identical for any worker count.

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace helmert::detail {

template <class Fn>
void run_indexed(std::int64_t count, int workers, Fn&& fn) {
  workers = std::clamp(workers, 1, 256);
  if (workers == 1 || count <= 1) {
    for (std::int64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  const std::int64_t w =
      std::min<std::int64_t>(workers, count);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(w));
  const std::int64_t per = count / w;
  const std::int64_t extra = count % w;
  std::int64_t begin = 0;
  for (std::int64_t t = 0; t < w; ++t) {
    const std::int64_t len = per + (t < extra ? 1 : 0);
    const std::int64_t end = begin + len;
    pool.emplace_back([begin, end, &fn] {
      for (std::int64_t i = begin; i < end; ++i) fn(i);
    });
    begin = end;
  }
  for (auto& th : pool) th.join();
}

}  // namespace helmert::detail
