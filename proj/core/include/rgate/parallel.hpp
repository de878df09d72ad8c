#pragma once

#include <cstddef>
#include <functional>

namespace rgate {

// Worker count used by data-parallel loops. 0 means "hardware concurrency".
// Results never depend on this value: workers write to index-addressed slots
// and all merges happen in index order.
void set_worker_threads(unsigned n);
unsigned worker_threads();

// Runs fn(i) for i in [0, n). Exceptions from workers are rethrown (first by
// index). fn must only touch state owned by index i.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace rgate
