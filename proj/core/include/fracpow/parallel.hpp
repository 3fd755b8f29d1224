#pragma once

#include <cstddef>
#include <functional>

namespace fracpow {

/// Worker-pool bound: FRACPOW_THREADS when set to a positive integer,
/// otherwise the hardware concurrency (at least 1).
int max_workers();

/// Runs body(0..count-1) on up to max_workers() threads. Jobs must be
/// independent; any order of execution is allowed. The first exception thrown
/// by a job is rethrown in the caller after all workers finish.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace fracpow
