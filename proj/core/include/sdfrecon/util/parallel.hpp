#pragma once

#include <cstdint>
#include <functional>

namespace sdfrecon {

int resolve_threads(int requested);

// Splits [0, count) into a fixed number of contiguous chunks and runs
// fn(chunk_index, begin, end) across `threads` workers. The chunk layout
// depends only on `chunks`, never on the worker count, so callers that
// reduce per-chunk results in chunk order get identical output for any
// thread count.
void parallel_chunks(std::int64_t count, int chunks, int threads,
                     const std::function<void(int, std::int64_t, std::int64_t)>& fn);

// Convenience: one item per index, chunked automatically.
void parallel_for(std::int64_t count, int threads,
                  const std::function<void(std::int64_t)>& fn);

}  // namespace sdfrecon
