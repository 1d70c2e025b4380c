#pragma once

#include <cstddef>
#include <functional>

namespace hankelasym::detail {

/// Worker cap: HANKEL_ASYM_THREADS when set, hardware concurrency otherwise.
unsigned max_threads();

/// Run fn(0..count-1) on up to max_threads() workers. The first exception
/// thrown by any item is rethrown after all workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

} // namespace hankelasym::detail
