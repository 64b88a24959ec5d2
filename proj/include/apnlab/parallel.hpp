#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace apnlab {

inline unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Splits [0, count) into contiguous chunks, one per worker, and folds the
// per-chunk results in chunk order. Reduction order is fixed by the split,
// never by thread completion, so results are deterministic for any worker
// count as long as `reduce` is associative over adjacent chunks.
template <typename Acc, typename MapChunk, typename Reduce>
Acc parallel_chunks(std::size_t count, unsigned workers, Acc init,
                    MapChunk map_chunk, Reduce reduce) {
  workers = resolve_workers(workers);
  if (count == 0) return init;
  if (workers > count) workers = static_cast<unsigned>(count);
  if (workers <= 1) {
    Acc one = map_chunk(std::size_t{0}, count);
    return reduce(std::move(init), std::move(one));
  }

  std::vector<Acc> partial(workers, init);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::size_t per = count / workers, extra = count % workers, begin = 0;
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t len = per + (w < extra ? 1 : 0);
    std::size_t b = begin, e = begin + len;
    begin = e;
    pool.emplace_back([&partial, w, b, e, &map_chunk] { partial[w] = map_chunk(b, e); });
  }
  for (auto& th : pool) th.join();

  Acc acc = std::move(init);
  for (auto& p : partial) acc = reduce(std::move(acc), std::move(p));
  return acc;
}

}  // namespace apnlab
