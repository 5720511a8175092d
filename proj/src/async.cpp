#include "moolab/evaluators/async.hpp"

#include <stdexcept>

namespace moo {

AsyncEvaluator::AsyncEvaluator(const Problem& problem, unsigned workers) : problem_(problem) {
    if (workers == 0) throw std::invalid_argument("AsyncEvaluator: need >= 1 worker");
    threads_.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) threads_.emplace_back([this] { worker_loop(); });
}

AsyncEvaluator::~AsyncEvaluator() { shutdown(); }

void AsyncEvaluator::worker_loop() {
    for (;;) {
        Task task;
        {
            std::unique_lock lock(mutex_);
            task_ready_.wait(lock, [this] { return down_ || !queue_.empty(); });
            if (queue_.empty()) return; // shutdown drains nothing new
            task = std::move(queue_.front());
            queue_.pop_front();
            ++busy_;
        }
        Completion done{task.ticket, std::move(task.solution), nullptr};
        try {
            problem_.evaluate(done.solution);
        } catch (...) {
            done.error = std::current_exception();
        }
        {
            std::lock_guard lock(mutex_);
            --busy_;
            ++completed_;
            completions_.push_back(std::move(done));
        }
        completion_ready_.notify_all();
    }
}

std::uint64_t AsyncEvaluator::submit(FloatSolution solution) {
    std::uint64_t ticket;
    {
        std::lock_guard lock(mutex_);
        if (down_) throw std::logic_error("AsyncEvaluator::submit: engine is shut down");
        ticket = next_ticket_++;
        queue_.push_back({ticket, std::move(solution)});
    }
    task_ready_.notify_one();
    return ticket;
}

std::pair<std::uint64_t, FloatSolution> AsyncEvaluator::collect() {
    std::unique_lock lock(mutex_);
    if (completions_.empty() && next_ticket_ == completed_)
        throw std::logic_error("AsyncEvaluator::collect: no task in flight");
    completion_ready_.wait(lock, [this] { return !completions_.empty(); });
    Completion done = std::move(completions_.front());
    completions_.pop_front();
    if (done.error) std::rethrow_exception(done.error);
    return {done.ticket, std::move(done.solution)};
}

AsyncEvaluator::Stats AsyncEvaluator::stats() const {
    std::lock_guard lock(mutex_);
    Stats s;
    s.submitted = next_ticket_;
    s.completed = completed_;
    s.in_flight = next_ticket_ - completed_;
    s.busy_workers = busy_;
    return s;
}

void AsyncEvaluator::shutdown() {
    {
        std::lock_guard lock(mutex_);
        if (down_) return;
        down_ = true;
    }
    task_ready_.notify_all();
    for (auto& t : threads_) t.join();
    threads_.clear();
}

} // namespace moo
