#pragma once

#include <cstddef>
#include <functional>

namespace hcube {

// Worker count: HYPERCUBE_LSI_THREADS when set (>= 1), else the hardware
// concurrency.
unsigned effective_threads();

// Runs fn(i) for i in [0, count) across effective_threads() workers in
// contiguous blocks. Callers make results deterministic by writing to
// per-index slots; exceptions from workers are rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace hcube
