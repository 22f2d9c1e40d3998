#pragma once

#include <cstddef>
#include <functional>

namespace homcat {

// Worker count: HOMCAT_THREADS if set (>= 1), else hardware concurrency.
unsigned thread_count();
void set_thread_count(unsigned n);  // 0 restores the default

// Runs body(i) for i in [0, n). Each index is visited exactly once; callers
// write results into per-index slots so output order never depends on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace homcat
