#pragma once

#include <cstddef>
#include <functional>

namespace mmes {

// Worker count from MMES_WORKERS, else the hardware concurrency (at least 1).
std::size_t worker_count();

// Calls body(i) for i in [0, n) across worker_count() threads. Each index is
// visited exactly once; callers write results by index so the outcome does
// not depend on scheduling. The first exception thrown is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace mmes
