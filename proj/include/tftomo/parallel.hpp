#pragma once

#include <cstddef>
#include <functional>

namespace tftomo {

/// Worker count for parallel_for; 0 selects hardware_concurrency.
void set_thread_count(unsigned count);
unsigned thread_count();

/// Runs body(i) for i in [0, n). Iterations must be independent; the result
/// never depends on the worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace tftomo
