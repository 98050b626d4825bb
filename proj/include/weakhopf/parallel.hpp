#pragma once

#include <cstdint>
#include <functional>

namespace wha {

/// Runs fn(i) for i in [0, n). With jobs > 1 the range is processed by a
/// worker pool; callers must write results into per-index slots so that the
/// merged outcome is bit-identical to sequential evaluation.
void parallel_for(std::uint32_t n, const std::function<void(std::uint32_t)>& fn);

unsigned worker_count();
void set_worker_count(unsigned jobs);  // 0 = hardware concurrency

}  // namespace wha
