#pragma once

#include <functional>

namespace rindler {

/// Number of worker threads: RINDLER_THREADS when set (>=1), otherwise
/// hardware concurrency.
int worker_count();

/// Run fn(i) for i in [0, n). Work items must be independent; results keyed
/// by index are deterministic regardless of scheduling. Falls back to a plain
/// loop when one worker suffices.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace rindler
