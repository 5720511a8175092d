#ifndef MOOLAB_CORE_PROBLEM_HPP
#define MOOLAB_CORE_PROBLEM_HPP

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "moolab/core/solution.hpp"

namespace moo {

/// A continuous optimization problem: dimensionality/bounds metadata plus an
/// evaluation function that fills objectives (and constraints when declared).
///
/// evaluate() must be deterministic for a fixed input and free of shared
/// mutation; the parallel evaluators rely on that.
class Problem {
public:
    Problem(std::string name, std::vector<double> lower, std::vector<double> upper,
            int n_objectives, int n_constraints = 0)
        : name_(std::move(name)),
          lower_(std::move(lower)),
          upper_(std::move(upper)),
          n_objectives_(n_objectives),
          n_constraints_(n_constraints) {
        if (lower_.empty() || lower_.size() != upper_.size())
            throw std::invalid_argument("Problem: bounds must be non-empty and equally sized");
        if (n_objectives_ < 1) throw std::invalid_argument("Problem: need at least one objective");
        if (n_constraints_ < 0) throw std::invalid_argument("Problem: negative constraint count");
        for (std::size_t i = 0; i < lower_.size(); ++i)
            if (!(lower_[i] < upper_[i]))
                throw std::invalid_argument("Problem: lower bound must be below upper bound");
    }

    virtual ~Problem() = default;

    const std::string& name() const { return name_; }
    int n_vars() const { return static_cast<int>(lower_.size()); }
    int n_objectives() const { return n_objectives_; }
    int n_constraints() const { return n_constraints_; }
    const std::vector<double>& lower_bounds() const { return lower_; }
    const std::vector<double>& upper_bounds() const { return upper_; }

    /// Fill s.objectives (and s.constraints when n_constraints > 0).
    virtual void evaluate(FloatSolution& s) const = 0;

    /// Checks the variable vector length before evaluation.
    void check_dimension(const FloatSolution& s) const {
        if (s.variables.size() != lower_.size())
            throw std::invalid_argument("Problem '" + name_ + "': expected " +
                                        std::to_string(lower_.size()) + " variables, got " +
                                        std::to_string(s.variables.size()));
    }

private:
    std::string name_;
    std::vector<double> lower_;
    std::vector<double> upper_;
    int n_objectives_;
    int n_constraints_;
};

/// Problem defined by a plain function; handy for tests and wrappers.
class FunctionProblem final : public Problem {
public:
    using EvalFn = std::function<void(FloatSolution&)>;

    FunctionProblem(std::string name, std::vector<double> lower, std::vector<double> upper,
                    int n_objectives, EvalFn fn)
        : Problem(std::move(name), std::move(lower), std::move(upper), n_objectives),
          fn_(std::move(fn)) {}

    void evaluate(FloatSolution& s) const override {
        check_dimension(s);
        fn_(s);
    }

private:
    EvalFn fn_;
};

} // namespace moo

#endif
