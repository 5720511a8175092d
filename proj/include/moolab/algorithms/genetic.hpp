#ifndef MOOLAB_ALGORITHMS_GENETIC_HPP
#define MOOLAB_ALGORITHMS_GENETIC_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "moolab/algorithms/algorithm.hpp"
#include "moolab/core/comparison.hpp"
#include "moolab/core/generator.hpp"
#include "moolab/core/rng.hpp"
#include "moolab/core/termination.hpp"
#include "moolab/evaluators/evaluator.hpp"
#include "moolab/operators/operators.hpp"

namespace moo {

/// Configuration of the evolutionary-algorithm family. The steady-state
/// variant is offspring_size = 1; the generational one offspring_size = N.
struct EAConfig {
    std::size_t population_size = 100;
    std::size_t offspring_size = 100;
    OperatorConfig mutation;    // probability < 0 means "use 1/n_vars"
    OperatorConfig crossover;
    SolutionComparator dominance;                    // defaults to plain dominance
    std::shared_ptr<TerminationCriterion> termination; // required
    std::shared_ptr<Evaluator> evaluator;            // defaults to sequential
    Generator generator;                             // defaults to uniform random
    std::uint64_t seed = 0;

    EAConfig() {
        mutation.probability = -1.0;
        crossover = default_crossover_config();
    }
};

/// Evolutionary algorithm: step = selection, reproduction, replacement.
/// The derived class decides the three stages.
class EvolutionaryAlgorithm : public Algorithm {
public:
    EvolutionaryAlgorithm(const Problem& problem, EAConfig config);

    const Problem& problem() const { return problem_; }
    std::size_t population_size() const { return config_.population_size; }
    std::size_t offspring_size() const { return config_.offspring_size; }

protected:
    virtual std::vector<FloatSolution> selection(const std::vector<FloatSolution>& population) = 0;
    virtual std::vector<FloatSolution> reproduction(const std::vector<FloatSolution>& mating_pool) = 0;
    virtual std::vector<FloatSolution> replacement(std::vector<FloatSolution> population,
                                                   std::vector<FloatSolution> offspring) = 0;

    std::vector<FloatSolution> create_initial_solutions() override;
    std::vector<FloatSolution> evaluate(std::vector<FloatSolution> solutions) override;
    void init_progress() override;
    bool stopping_condition_is_met() override;
    void step() override;
    void update_progress() override;

    const Problem& problem_;
    EAConfig config_;
    Rng rng_;
};

/// Genetic algorithm: selection by tournaments, reproduction by crossover
/// plus mutation. Replacement stays abstract.
class GeneticAlgorithm : public EvolutionaryAlgorithm {
public:
    GeneticAlgorithm(const Problem& problem, EAConfig config,
                     SolutionComparator selection_comparator);

protected:
    std::vector<FloatSolution> selection(const std::vector<FloatSolution>& population) override;
    std::vector<FloatSolution> reproduction(const std::vector<FloatSolution>& mating_pool) override;

    SolutionComparator selection_comparator_;
};

} // namespace moo

#endif
