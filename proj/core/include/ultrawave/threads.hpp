#pragma once

#include <cstddef>
#include <functional>

namespace uw {

// Worker count: min(hardware_concurrency, ULTRAWAVE_THREADS if set).
std::size_t thread_budget();

// Runs fn(i) for i in [0, n). Work items must be independent; results
// must not depend on execution order.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace uw
