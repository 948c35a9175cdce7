#pragma once

#include <cstdint>
#include <functional>

namespace qhopf {

// Worker count: QHOPF_THREADS when set (clamped to at least 1), otherwise the
// hardware concurrency. Verifiers treat this as a cap, not a demand.
int thread_count();

// Run fn(i) for every i in [0, n), splitting the range over the workers.
// fn must be safe to call concurrently on distinct i; the first exception
// wins and is rethrown after all workers stop.
void parallel_for(std::uint64_t n, const std::function<void(std::uint64_t)>& fn);

} // namespace qhopf
