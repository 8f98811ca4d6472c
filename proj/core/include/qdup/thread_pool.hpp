#pragma once

#include <condition_variable>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace qdup {

// Fixed pool executing an indexed set of chunks. Work is partitioned by chunk
// index, never rebalanced, so results that reduce per-chunk buffers in chunk
// order are identical for any worker count (including 1, which runs inline).
class ThreadPool {
public:
    explicit ThreadPool(int workers);
    ~ThreadPool();

    ThreadPool(const ThreadPool&) = delete;
    ThreadPool& operator=(const ThreadPool&) = delete;

    int workers() const { return static_cast<int>(threads_.size()) + 1; }

    // Runs fn(chunk) for chunk in [0, n_chunks); blocks until all complete.
    // fn must not throw.
    void run_chunks(int n_chunks, const std::function<void(int)>& fn);

private:
    void worker_loop();

    std::vector<std::thread> threads_;
    std::mutex mu_;
    std::condition_variable cv_work_;
    std::condition_variable cv_done_;
    const std::function<void(int)>* job_ = nullptr;
    int next_chunk_ = 0;
    int total_chunks_ = 0;
    int pending_ = 0;
    std::uint64_t generation_ = 0;
    bool stop_ = false;
};

}  // namespace qdup
