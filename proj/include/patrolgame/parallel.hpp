#pragma once

#include <cstddef>
#include <functional>

namespace patrolgame {

/// Worker count: hardware concurrency, capped by PATROLGAME_THREADS when set.
unsigned worker_count();

/// Runs body(i) for i in [0, count) across worker threads. Callers write
/// results into per-index slots so the outcome does not depend on scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace patrolgame
