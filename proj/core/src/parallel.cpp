#include "lgt/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "lgt/error.hpp"

namespace lgt {

void run_blocks(std::size_t n_blocks, int workers,
                const std::function<void(std::size_t block)>& task) {
    if (workers < 1) {
        fail(ErrorKind::invalid_argument, "workers must be >= 1");
    }
    if (workers == 1 || n_blocks <= 1) {
        for (std::size_t b = 0; b < n_blocks; ++b) {
            task(b);
        }
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&] {
        for (;;) {
            const std::size_t b = next.fetch_add(1);
            if (b >= n_blocks) {
                return;
            }
            try {
                task(b);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!first_error) {
                    first_error = std::current_exception();
                }
                next.store(n_blocks);
                return;
            }
        }
    };

    const auto n_threads = static_cast<std::size_t>(
        std::min<std::size_t>(static_cast<std::size_t>(workers), n_blocks));
    std::vector<std::jthread> threads;
    threads.reserve(n_threads);
    for (std::size_t t = 0; t < n_threads; ++t) {
        threads.emplace_back(worker);
    }
    threads.clear();

    if (first_error) {
        std::rethrow_exception(first_error);
    }
}

}  // namespace lgt
