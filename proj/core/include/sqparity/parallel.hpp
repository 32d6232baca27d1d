#pragma once

#include <cstddef>
#include <functional>

namespace sqparity {

/// Name of the environment variable capping worker threads.
inline constexpr const char* kThreadsEnvVar = "SQPARITY_THREADS";

/// Worker count: SQPARITY_THREADS if set to a positive integer, otherwise
/// std::thread::hardware_concurrency() (at least 1).
std::size_t worker_count();

/// Runs body(i) for every i in [0, count). Indices are handed out dynamically,
/// so body must write only to slot i of caller-owned storage; results are then
/// independent of scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

} // namespace sqparity
