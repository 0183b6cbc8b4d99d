#pragma once

#include <cstddef>
#include <functional>

namespace blc {

/// Worker cap from BLC_THREADS (default 1). Values < 1 are clamped to 1.
int thread_count();

/// Runs fn(i) for i in [0, n). Chunks across threads when thread_count() > 1.
/// Each index writes its own slot, so results are bitwise identical for any
/// thread count; reductions over the slots use pairwise_sum.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace blc
