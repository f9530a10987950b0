#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace mlcp {

/// Worker count used when a caller passes 0: the MLCP_THREADS environment
/// variable if set and positive, otherwise the hardware concurrency.
unsigned default_threads();

/// Runs body(block) for block = 0..blocks-1 on up to `threads` workers.
/// Blocks are claimed dynamically; callers must write results into
/// per-block slots so the outcome is independent of scheduling. The first
/// exception thrown by any block is rethrown on the calling thread.
template <typename Body>
void parallel_blocks(std::size_t blocks, unsigned threads, Body&& body) {
    if (threads == 0) threads = default_threads();
    const std::size_t workers = std::min<std::size_t>(std::max(1u, threads), blocks);
    if (workers <= 1) {
        for (std::size_t b = 0; b < blocks; ++b) body(b);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t b = next.fetch_add(1);
            if (b >= blocks) return;
            try {
                body(b);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(blocks);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (std::size_t i = 1; i < workers; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace mlcp
