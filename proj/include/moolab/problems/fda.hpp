#ifndef MOOLAB_PROBLEMS_FDA_HPP
#define MOOLAB_PROBLEMS_FDA_HPP

#include <atomic>
#include <cstdint>

#include "moolab/core/observer.hpp"
#include "moolab/core/problem.hpp"

namespace moo {

/// A problem whose landscape changes over time. Changes are pushed by an
/// external observable (a time source); the algorithm polls the changed flag
/// and clears it after reacting.
class DynamicProblem : public Problem, public Observer {
public:
    using Problem::Problem;
    virtual bool the_problem_has_changed() const = 0;
    virtual void clear_changed() = 0;
};

/// Base of the FDA dynamic benchmark family. The time variable advances in
/// discrete steps of height 1/nT, once every tau_T counter ticks:
/// time = (1/nT) * floor(counter / tau_T). Updates arrive from the time
/// source's thread; evaluation reads happen on the algorithm's thread, so
/// both fields are atomics (single writer, many readers).
class FDA : public DynamicProblem {
public:
    FDA(std::string name, std::vector<double> lower, std::vector<double> upper,
        int tau_t = 5, int n_t = 10)
        : DynamicProblem(std::move(name), std::move(lower), std::move(upper), 2),
          tau_t_(tau_t), n_t_(n_t) {}

    /// Observer hook: expects COUNTER in the payload.
    void update(const ObservableEvent& event) override;

    /// Direct counter update (same formula as the observer path).
    void update_time(std::int64_t counter);

    bool the_problem_has_changed() const override { return changed_.load(); }
    void clear_changed() override { changed_.store(false); }

    double time() const { return time_.load(); }
    int tau_t() const { return tau_t_; }
    int n_t() const { return n_t_; }

private:
    int tau_t_;
    int n_t_;
    // Initial time 1.0: the landscape starts at the end of the first cycle
    // until a counter update arrives.
    std::atomic<double> time_{1.0};
    std::atomic<bool> changed_{false};
};

/// FDA1: ZDT1-shaped front whose optimal tail tracks G(t) = sin(pi t / 2).
/// x1 in [0,1], the remaining variables in [-1,1].
class FDA1 final : public FDA {
public:
    explicit FDA1(int n_vars = 100);
    void evaluate(FloatSolution& s) const override;
};

/// FDA2 with the corrected exponent form: f2 = g * (1 - (f1/g)^E) where
/// E = H(t) + sum_{x in XIII} (x - H(t)/4)^2 and H(t) = 0.75 + 0.7 sin(pi t/2).
/// The original 2004 formulation leaves the changing front unreachable; this
/// is the widely used modified variant whose optimal front is f2 = 1 - f1^H(t)
/// (XII = 0, XIII = H/4). 31 variables: x1 in [0,1], the rest in [-1,1].
class FDA2 final : public FDA {
public:
    explicit FDA2(int n_vars = 31);
    void evaluate(FloatSolution& s) const override;
    double h_exponent() const; // H(t) at the current time
};

} // namespace moo

#endif
