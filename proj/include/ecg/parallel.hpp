#pragma once

#include <cstddef>
#include <functional>

namespace ecg {

// Number of worker threads to use. A positive request wins; otherwise the
// ECGRAPH_WORKERS environment variable, then hardware concurrency. Always
// at least 1 and never more than the number of tasks would make useful.
std::size_t resolve_workers(int requested);

// Runs fn(i) for i in [0, count) across `workers` threads. Work items are
// handed out through a shared counter, so fn must not assume any ordering;
// results must be written to per-index slots. The first exception thrown
// by any worker is rethrown on the calling thread.
void parallel_for(std::size_t count, std::size_t workers,
                  const std::function<void(std::size_t)>& fn);

} // namespace ecg
