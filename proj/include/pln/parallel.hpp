#pragma once

#include <cstddef>
#include <functional>

namespace pln {

// Runs fn(0..count-1) on up to `jobs` threads; jobs <= 1 runs inline.
// The first exception thrown by any task is rethrown after all threads join.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn);

}  // namespace pln
