#pragma once

#include <atomic>
#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>

namespace foulkes {

/// Cooperative cancellation for long computations: an external stop flag
/// (e.g. set from a signal handler) and an optional wall-clock deadline.
struct StopControl {
    const std::atomic<bool>* stop_flag = nullptr;
    std::optional<std::chrono::steady_clock::time_point> deadline;

    /// Throws Interrupted when the flag is set, BudgetExceeded past the deadline.
    void check() const;
};

/// Number of worker threads to use for `requested` (0 = hardware concurrency).
unsigned resolve_threads(unsigned requested);

/// Runs body(i) for i in [0, count) on up to `threads` workers. The first
/// exception thrown by any task is rethrown after all workers stop.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

}  // namespace foulkes
