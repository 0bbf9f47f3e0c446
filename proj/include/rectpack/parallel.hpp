#pragma once

#include <cstddef>
#include <functional>

namespace rectpack {

// Worker count: RECTPACK_THREADS when set to a positive integer, else the hardware count.
std::size_t thread_count();

// Calls body(i) for i in [0, n) across thread_count() workers. body must be thread-safe;
// results are expected to be written to per-index slots so the outcome is schedule-independent.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace rectpack
