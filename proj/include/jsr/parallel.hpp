#pragma once

#include <cstddef>
#include <functional>

namespace jsr {

/// Worker count: JSR_RELAX_THREADS if set and positive, otherwise the
/// hardware concurrency (0 in the variable means auto).
[[nodiscard]] unsigned worker_count();

/// Calls body(begin, end) on disjoint chunks covering [0, count). Chunks may
/// run concurrently; small ranges run inline.
void parallel_for(std::size_t count, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace jsr
