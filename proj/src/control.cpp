#include "foulkes/control.hpp"

#include "foulkes/errors.hpp"

#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace foulkes {

void StopControl::check() const
{
    if (stop_flag != nullptr && stop_flag->load(std::memory_order_relaxed))
        throw Interrupted("computation interrupted");
    if (deadline && std::chrono::steady_clock::now() > *deadline)
        throw BudgetExceeded("wall-clock limit exceeded");
}

unsigned resolve_threads(unsigned requested)
{
    if (requested != 0)
        return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body)
{
    threads = resolve_threads(threads);
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        while (!failed.load(std::memory_order_relaxed)) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count)
                return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
                failed = true;
            }
        }
    };
    std::vector<std::jthread> pool;
    const auto n = std::min<std::size_t>(threads, count);
    for (std::size_t t = 1; t < n; ++t)
        pool.emplace_back(worker);
    worker();
    pool.clear();
    if (error)
        std::rethrow_exception(error);
}

}  // namespace foulkes
