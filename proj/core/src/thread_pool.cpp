#include "qdup/thread_pool.hpp"

namespace qdup {

ThreadPool::ThreadPool(int workers) {
    if (workers < 1) workers = 1;
    for (int i = 0; i < workers - 1; ++i) {
        threads_.emplace_back([this] { worker_loop(); });
    }
}

ThreadPool::~ThreadPool() {
    {
        std::lock_guard lock(mu_);
        stop_ = true;
    }
    cv_work_.notify_all();
    for (auto& t : threads_) t.join();
}

void ThreadPool::run_chunks(int n_chunks, const std::function<void(int)>& fn) {
    if (n_chunks <= 0) return;
    if (threads_.empty() || n_chunks == 1) {
        for (int c = 0; c < n_chunks; ++c) fn(c);
        return;
    }
    {
        std::lock_guard lock(mu_);
        job_ = &fn;
        next_chunk_ = 0;
        total_chunks_ = n_chunks;
        pending_ = n_chunks;
        ++generation_;
    }
    cv_work_.notify_all();

    // The calling thread participates in the work.
    for (;;) {
        int chunk;
        {
            std::lock_guard lock(mu_);
            if (next_chunk_ >= total_chunks_) break;
            chunk = next_chunk_++;
        }
        fn(chunk);
        std::lock_guard lock(mu_);
        if (--pending_ == 0) cv_done_.notify_all();
    }
    std::unique_lock lock(mu_);
    cv_done_.wait(lock, [this] { return pending_ == 0; });
    job_ = nullptr;
}

void ThreadPool::worker_loop() {
    std::uint64_t seen = 0;
    for (;;) {
        const std::function<void(int)>* job;
        {
            std::unique_lock lock(mu_);
            cv_work_.wait(lock, [&] { return stop_ || (job_ != nullptr && generation_ != seen); });
            if (stop_) return;
            seen = generation_;
            job = job_;
        }
        for (;;) {
            int chunk;
            {
                std::lock_guard lock(mu_);
                if (job_ != job || next_chunk_ >= total_chunks_) break;
                chunk = next_chunk_++;
            }
            (*job)(chunk);
            std::lock_guard lock(mu_);
            if (--pending_ == 0) cv_done_.notify_all();
        }
    }
}

}  // namespace qdup
