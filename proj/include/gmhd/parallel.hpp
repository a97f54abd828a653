#pragma once

#include <functional>

namespace gmhd {

/// Worker cap: GMHD_THREADS when set (minimum 1), else the hardware
/// concurrency.
int max_threads();

/// Run body(i) for i in [begin, end) across up to max_threads() workers.
/// Iterations must be independent and write only to their own slots, which
/// keeps results identical for every thread count.
void parallel_for(int begin, int end, const std::function<void(int)>& body);

}  // namespace gmhd
