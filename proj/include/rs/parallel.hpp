#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace rs {

// global worker cap shared by library and CLI (--threads)
int& max_threads();

// Splits [0,n) into contiguous chunks, one per worker, and runs fn(chunk_id,
// begin, end) on each.  Chunk boundaries depend only on n and the thread cap,
// so per-chunk partial results can be merged in chunk order for deterministic
// totals.
void parallel_chunks(int64_t n, const std::function<void(int, int64_t, int64_t)>& fn);

// deterministic parallel sum of fn(i) over [0,n)
double parallel_sum(int64_t n, const std::function<double(int64_t)>& fn);

} // namespace rs
