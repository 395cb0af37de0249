#pragma once

#include <cstddef>
#include <functional>

namespace simplexharm {

/// Worker count: MODES_NUM_THREADS when set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
int configured_threads();

/// Runs body(i) for i in [0, count) on up to configured_threads() threads.
///
/// Each index is visited exactly once; callers write results into per-index
/// slots so the outcome does not depend on scheduling. If any call throws, the
/// exception from the smallest failing index is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace simplexharm
