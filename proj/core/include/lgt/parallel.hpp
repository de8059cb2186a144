#pragma once

#include <cstddef>
#include <functional>

namespace lgt {

/// Runs `task(block)` for every block in [0, n_blocks) on up to `workers`
/// threads. Blocks are claimed in increasing order; callers store per-block
/// results and reduce them in block order afterwards, which keeps the result
/// independent of the worker count. The first exception thrown by a task is
/// rethrown on the calling thread.
void run_blocks(std::size_t n_blocks, int workers,
                const std::function<void(std::size_t block)>& task);

}  // namespace lgt
