#ifndef MOOLAB_ALGORITHMS_ALGORITHM_HPP
#define MOOLAB_ALGORITHMS_ALGORITHM_HPP

#include <cstdint>
#include <vector>

#include "moolab/core/observer.hpp"
#include "moolab/core/solution.hpp"

namespace moo {

/// Generic metaheuristic skeleton: create the initial solutions, evaluate
/// them, then step until the stopping condition is met. Observers receive a
/// notification with EVALUATIONS and SOLUTIONS after initialization and after
/// every step.
class Algorithm {
public:
    virtual ~Algorithm() = default;

    void run() {
        solutions_ = create_initial_solutions();
        solutions_ = evaluate(std::move(solutions_));
        init_progress();
        while (!stopping_condition_is_met()) {
            step();
            update_progress();
        }
    }

    /// Final front of the run (non-dominated under the algorithm's comparator).
    virtual std::vector<FloatSolution> result() const = 0;

    const std::vector<FloatSolution>& solutions() const { return solutions_; }
    std::int64_t evaluations() const { return evaluations_; }
    Observable& observable() { return observable_; }

protected:
    virtual std::vector<FloatSolution> create_initial_solutions() = 0;
    virtual std::vector<FloatSolution> evaluate(std::vector<FloatSolution> solutions) = 0;
    virtual void init_progress() = 0;
    virtual bool stopping_condition_is_met() = 0;
    virtual void step() = 0;
    virtual void update_progress() = 0;

    /// Standard progress payload (EVALUATIONS + SOLUTIONS).
    ObservableEvent progress_event() const {
        ObservableEvent event;
        event.payload[key::evaluations] = evaluations_;
        event.payload[key::solutions] = solutions_;
        return event;
    }

    std::vector<FloatSolution> solutions_;
    std::int64_t evaluations_ = 0;
    Observable observable_;
};

} // namespace moo

#endif
