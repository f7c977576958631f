#pragma once

#include <cstddef>
#include <functional>

namespace mockgauss {

// Number of workers to use for a requested count; 0 means available parallelism.
int resolve_workers(int requested);

// Runs body(i) for i in [0, count) on up to `workers` threads. Work items are
// claimed dynamically, so body must write its result to a slot indexed by i.
// The first exception thrown by any item is rethrown after all threads join.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& body);

}  // namespace mockgauss
