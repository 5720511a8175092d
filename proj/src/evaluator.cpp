#include "moolab/evaluators/evaluator.hpp"

#include <atomic>
#include <exception>
#include <stdexcept>
#include <thread>

#include "moolab/core/error.hpp"

namespace moo {

std::vector<FloatSolution> SequentialEvaluator::evaluate_all(std::vector<FloatSolution> solutions,
                                                             const Problem& problem) {
    for (std::size_t i = 0; i < solutions.size(); ++i) {
        try {
            problem.evaluate(solutions[i]);
        } catch (const std::exception& e) {
            throw std::runtime_error("evaluation failed at index " + std::to_string(i) + ": " +
                                     e.what());
        }
    }
    return solutions;
}

ParallelMapEvaluator::ParallelMapEvaluator(unsigned workers) : workers_(workers) {
    if (workers_ == 0) throw std::invalid_argument("ParallelMapEvaluator: need >= 1 worker");
}

std::vector<FloatSolution> ParallelMapEvaluator::evaluate_all(std::vector<FloatSolution> solutions,
                                                              const Problem& problem) {
    const std::size_t n = solutions.size();
    if (n == 0) return solutions;
    const unsigned used = static_cast<unsigned>(std::min<std::size_t>(workers_, n));

    std::vector<std::size_t> failed_index(used, n); // n = worker saw no failure
    std::vector<std::string> messages(used);
    std::vector<std::thread> threads;
    threads.reserve(used);

    for (unsigned w = 0; w < used; ++w) {
        threads.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += used) {
                try {
                    problem.evaluate(solutions[i]);
                } catch (const std::exception& e) {
                    failed_index[w] = i;
                    messages[w] = e.what();
                    return;
                }
            }
        });
    }
    for (auto& t : threads) t.join();

    std::size_t failure = n;
    std::string detail;
    for (unsigned w = 0; w < used; ++w) {
        if (failed_index[w] < failure) {
            failure = failed_index[w];
            detail = messages[w];
        }
    }
    if (failure != n)
        throw std::runtime_error("evaluation failed at index " + std::to_string(failure) + ": " +
                                 detail);
    return solutions;
}

EvaluationEngine::Kind engine_kind_from_string(const std::string& name) {
    if (name == "sequential") return EvaluationEngine::Kind::sequential;
    if (name == "parallel_map") return EvaluationEngine::Kind::parallel_map;
    if (name == "async_steady_state") return EvaluationEngine::Kind::async_steady_state;
    throw ConfigError("unknown evaluation engine: " + name);
}

std::shared_ptr<Evaluator> make_evaluator(const EvaluationEngine& engine) {
    switch (engine.kind) {
        case EvaluationEngine::Kind::sequential: return std::make_shared<SequentialEvaluator>();
        case EvaluationEngine::Kind::parallel_map:
            return std::make_shared<ParallelMapEvaluator>(engine.workers);
        case EvaluationEngine::Kind::async_steady_state:
            throw ConfigError("async_steady_state is not a synchronous evaluator; "
                              "use AsyncEvaluator / async_nsgaii_run");
    }
    throw ConfigError("unknown evaluation engine kind");
}

} // namespace moo
