#ifndef INLIM_PARALLEL_H_
#define INLIM_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace inlim {

// Resolves a requested thread count; 0 means hardware concurrency.
unsigned resolve_threads(unsigned requested);

// Calls body(i) for every i in [0, n), split into contiguous blocks over the
// given number of threads.  Results must be written to per-index slots so
// that output does not depend on the thread count.  The first exception
// thrown by a worker is rethrown on the calling thread.
void parallel_for(std::size_t n, unsigned threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace inlim

#endif  // INLIM_PARALLEL_H_
