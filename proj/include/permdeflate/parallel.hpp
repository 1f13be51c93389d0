#pragma once

#include <cstddef>
#include <functional>

namespace permdeflate {

/// Worker cap: DEFLATE_THREADS when set to a positive integer, otherwise the
/// machine's hardware concurrency (at least 1).
std::size_t worker_count();

/// Runs fn(i) for every i in [0, count), split into contiguous chunks over
/// worker_count() threads. fn must only write to per-index state. The first
/// exception thrown by any worker is rethrown after all workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace permdeflate
