#pragma once
#include <cstddef>
#include <functional>

namespace dccr {

// worker count: DCCR_THREADS if set (clamped to >= 1), else hardware concurrency
unsigned thread_count();

// run fn(i) for i in [0, count); results must go to preallocated slots so the
// outcome is independent of scheduling
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace dccr
