#pragma once

#include <cstddef>
#include <functional>

namespace hausdim {

/// Resolves a requested worker count: values < 1 mean "all hardware threads".
[[nodiscard]] int resolve_threads(int requested) noexcept;

/// Runs body(begin, end) over contiguous chunks of [0, n) on up to `threads`
/// workers. The first exception thrown by any chunk is rethrown.
void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace hausdim
