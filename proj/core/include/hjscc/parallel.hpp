#pragma once

#include <cstddef>
#include <functional>

namespace hjscc {

/// Resolves a thread-count request: 0 means hardware concurrency.
std::size_t resolve_threads(int requested);

/// Runs fn(i) for i in [0, n) across `threads` workers with a static
/// partition. Each index must write only its own output slot; callers do any
/// reduction sequentially afterwards, so results never depend on scheduling.
void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t)>& fn);

}  // namespace hjscc
