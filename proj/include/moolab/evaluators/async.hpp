#ifndef MOOLAB_EVALUATORS_ASYNC_HPP
#define MOOLAB_EVALUATORS_ASYNC_HPP

#include <condition_variable>
#include <cstdint>
#include <deque>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

#include "moolab/core/problem.hpp"
#include "moolab/core/solution.hpp"

namespace moo {

/// Asynchronous evaluation engine: a fixed worker pool evaluating submitted
/// solutions, returning them through a completion queue in completion order.
/// The coordinator thread owns all algorithm state and randomness; workers
/// only evaluate. With one worker, completions arrive in submission order.
class AsyncEvaluator {
public:
    struct Stats {
        std::uint64_t submitted = 0;
        std::uint64_t completed = 0;
        std::uint64_t in_flight = 0; // submitted - completed
        unsigned busy_workers = 0;
    };

    AsyncEvaluator(const Problem& problem, unsigned workers);
    ~AsyncEvaluator();

    AsyncEvaluator(const AsyncEvaluator&) = delete;
    AsyncEvaluator& operator=(const AsyncEvaluator&) = delete;

    /// Schedule an evaluation; returns a ticket that identifies the task.
    /// Throws std::logic_error after shutdown().
    std::uint64_t submit(FloatSolution solution);

    /// Block until the next completion; rethrows a worker failure.
    std::pair<std::uint64_t, FloatSolution> collect();

    Stats stats() const;
    unsigned workers() const { return static_cast<unsigned>(threads_.size()); }

    /// Stop accepting work and join the pool (idempotent).
    void shutdown();

private:
    struct Task {
        std::uint64_t ticket;
        FloatSolution solution;
    };
    struct Completion {
        std::uint64_t ticket;
        FloatSolution solution;
        std::exception_ptr error;
    };

    void worker_loop();

    const Problem& problem_;
    mutable std::mutex mutex_;
    std::condition_variable task_ready_;
    std::condition_variable completion_ready_;
    std::deque<Task> queue_;
    std::deque<Completion> completions_;
    std::vector<std::thread> threads_;
    std::uint64_t next_ticket_ = 0;
    std::uint64_t completed_ = 0;
    unsigned busy_ = 0;
    bool down_ = false;
};

} // namespace moo

#endif
