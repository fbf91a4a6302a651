#pragma once

#include <cstddef>
#include <functional>

namespace tsaug {

/// Runs fn(0) .. fn(count-1) across up to `jobs` threads. Results must be
/// written to per-index slots; scheduling never affects output order. The
/// first exception thrown by any task is rethrown on the calling thread.
void parallel_for(std::size_t count, std::size_t jobs,
                  const std::function<void(std::size_t)>& fn);

} // namespace tsaug
