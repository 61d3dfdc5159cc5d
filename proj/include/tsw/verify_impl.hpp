#ifndef TSW_VERIFY_IMPL_HPP
#define TSW_VERIFY_IMPL_HPP

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace tsw
{

template <class Task>
std::vector<CheckResult> run_ordered(std::size_t count, int jobs, Task &&task)
{
    std::vector<CheckResult> out(count);
    const std::size_t workers = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), 1, std::max<std::size_t>(count, 1));
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&]() {
        for (;;) {
            const std::size_t k = next.fetch_add(1);
            if (k >= count) {
                return;
            }
            try {
                out[k] = task(k);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
                next = count;
                return;
            }
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < workers; ++t) {
            pool.emplace_back(work);
        }
        for (auto &th : pool) {
            th.join();
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
    return out;
}

} // namespace tsw

#endif
