#pragma once

#include <cstddef>
#include <functional>

namespace gastba::numeric {

/// Worker count: hardware concurrency, capped by the GASTBA_THREADS
/// environment variable when it holds a positive integer.
unsigned worker_count();

/// Runs body(i) for i in [0, n) across worker_count() threads in contiguous
/// chunks. Each index is visited exactly once; callers write to disjoint slots
/// so results do not depend on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace gastba::numeric
