#ifndef TRIAD_PARALLEL_HPP
#define TRIAD_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace triad {

/// Resolves a worker-count setting: 0 means all hardware threads.
int resolve_workers(int workers);

/// Runs fn over [0, n) split into contiguous index ranges, one per worker.
/// Workers write only to disjoint slots of preallocated output, so the
/// result does not depend on the worker count or on scheduling.
void parallel_for(std::size_t n, int workers,
                  const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace triad

#endif  // TRIAD_PARALLEL_HPP
