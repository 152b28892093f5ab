#pragma once

#include <cstdint>
#include <functional>

namespace koopman {

/// Thread cap from KOOPMAN_DELAY_THREADS (0 or unset = hardware concurrency).
int max_threads();

/// Runs fn(begin, end) over disjoint chunks of [0, n), possibly on several
/// threads. Chunk boundaries carry no state, so results do not depend on the
/// thread count.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t, std::int64_t)>& fn);

}  // namespace koopman
