#ifndef MOOLAB_EVALUATORS_EVALUATOR_HPP
#define MOOLAB_EVALUATORS_EVALUATOR_HPP

#include <memory>
#include <string>
#include <vector>

#include "moolab/core/problem.hpp"
#include "moolab/core/solution.hpp"

namespace moo {

/// Synchronous evaluation engine contract: every solution is evaluated
/// exactly once and the output order equals the input order, so engines are
/// interchangeable for any pure problem. A failing evaluation aborts the
/// batch and reports the failing index.
class Evaluator {
public:
    virtual ~Evaluator() = default;
    virtual std::vector<FloatSolution> evaluate_all(std::vector<FloatSolution> solutions,
                                                    const Problem& problem) = 0;
};

class SequentialEvaluator final : public Evaluator {
public:
    std::vector<FloatSolution> evaluate_all(std::vector<FloatSolution> solutions,
                                            const Problem& problem) override;
};

/// Data-parallel map over a fixed worker count; behavior-preserving with
/// respect to the sequential engine (elementwise identical results).
class ParallelMapEvaluator final : public Evaluator {
public:
    explicit ParallelMapEvaluator(unsigned workers);
    std::vector<FloatSolution> evaluate_all(std::vector<FloatSolution> solutions,
                                            const Problem& problem) override;
    unsigned workers() const { return workers_; }

private:
    unsigned workers_;
};

/// Engine selection as carried by configs and CLI flags.
struct EvaluationEngine {
    enum class Kind { sequential, parallel_map, async_steady_state };
    Kind kind = Kind::sequential;
    unsigned workers = 1;
};

EvaluationEngine::Kind engine_kind_from_string(const std::string& name);

/// Build a synchronous evaluator (sequential or parallel_map).
std::shared_ptr<Evaluator> make_evaluator(const EvaluationEngine& engine);

} // namespace moo

#endif
