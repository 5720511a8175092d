#ifndef MOOLAB_CORE_TERMINATION_HPP
#define MOOLAB_CORE_TERMINATION_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "moolab/core/observer.hpp"

namespace moo {

/// A stopping condition fed through the observer channel: the algorithm
/// registers the criterion on its own observable, so every progress
/// notification doubles as a termination check.
class TerminationCriterion : public Observer {
public:
    virtual bool is_met() const = 0;
};

/// Met once EVALUATIONS >= limit. Not sticky: re-initializing the algorithm's
/// progress (dynamic runs) re-arms it.
class StopByEvaluations final : public TerminationCriterion {
public:
    explicit StopByEvaluations(std::int64_t limit) : limit_(limit) {}

    void update(const ObservableEvent& event) override {
        auto evals = event.get<std::int64_t>(key::evaluations);
        if (!evals) throw std::runtime_error("StopByEvaluations: payload lacks EVALUATIONS");
        seen_ = *evals;
    }

    bool is_met() const override { return seen_ >= limit_; }
    std::int64_t limit() const { return limit_; }

private:
    std::int64_t limit_;
    std::int64_t seen_ = 0;
};

/// Met once wall time since the first notification exceeds the budget.
class StopByTime final : public TerminationCriterion {
public:
    explicit StopByTime(std::chrono::milliseconds budget) : budget_(budget) {}

    void update(const ObservableEvent&) override {
        const auto now = std::chrono::steady_clock::now();
        if (!started_) {
            start_ = now;
            started_ = true;
        }
        met_ = met_ || (now - start_) >= budget_;
    }

    bool is_met() const override { return met_; }

private:
    std::chrono::milliseconds budget_;
    std::chrono::steady_clock::time_point start_{};
    bool started_ = false;
    bool met_ = false;
};

/// Met once a quality indicator of the current solutions reaches a threshold.
class StopByQuality final : public TerminationCriterion {
public:
    using IndicatorFn = std::function<double(const std::vector<FloatSolution>&)>;
    enum class Direction { AtLeast, AtMost };

    StopByQuality(IndicatorFn indicator, double threshold,
                  Direction direction = Direction::AtLeast)
        : indicator_(std::move(indicator)), threshold_(threshold), direction_(direction) {}

    void update(const ObservableEvent& event) override {
        auto solutions = event.get<std::vector<FloatSolution>>(key::solutions);
        if (!solutions) throw std::runtime_error("StopByQuality: payload lacks SOLUTIONS");
        const double value = indicator_(*solutions);
        met_ = direction_ == Direction::AtLeast ? value >= threshold_ : value <= threshold_;
    }

    bool is_met() const override { return met_; }

private:
    IndicatorFn indicator_;
    double threshold_;
    Direction direction_;
    bool met_ = false;
};

} // namespace moo

#endif
