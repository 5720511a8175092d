#include "moolab/algorithms/genetic.hpp"

#include <stdexcept>

namespace moo {

EvolutionaryAlgorithm::EvolutionaryAlgorithm(const Problem& problem, EAConfig config)
    : problem_(problem), config_(std::move(config)), rng_(config_.seed) {
    if (config_.population_size == 0)
        throw std::invalid_argument("EAConfig: population size must be positive");
    if (config_.offspring_size == 0)
        throw std::invalid_argument("EAConfig: offspring size must be positive");
    if (!config_.termination)
        throw std::invalid_argument("EAConfig: termination criterion is required");
    if (!config_.dominance) config_.dominance = dominance_comparator();
    if (!config_.evaluator) config_.evaluator = std::make_shared<SequentialEvaluator>();
    if (!config_.generator) config_.generator = random_generator();
    if (config_.mutation.probability < 0.0)
        config_.mutation = default_mutation_config(problem_);
    config_.mutation.validate();
    config_.crossover.validate();
    observable_.register_observer(config_.termination.get());
}

std::vector<FloatSolution> EvolutionaryAlgorithm::create_initial_solutions() {
    std::vector<FloatSolution> out;
    out.reserve(config_.population_size);
    for (std::size_t i = 0; i < config_.population_size; ++i)
        out.push_back(config_.generator(problem_, rng_));
    return out;
}

std::vector<FloatSolution> EvolutionaryAlgorithm::evaluate(std::vector<FloatSolution> solutions) {
    return config_.evaluator->evaluate_all(std::move(solutions), problem_);
}

void EvolutionaryAlgorithm::init_progress() {
    evaluations_ = static_cast<std::int64_t>(config_.population_size);
    observable_.notify(progress_event());
}

bool EvolutionaryAlgorithm::stopping_condition_is_met() {
    return config_.termination->is_met();
}

void EvolutionaryAlgorithm::step() {
    auto mating_pool = selection(solutions_);
    auto offspring = reproduction(mating_pool);
    offspring = evaluate(std::move(offspring));
    solutions_ = replacement(std::move(solutions_), std::move(offspring));
}

void EvolutionaryAlgorithm::update_progress() {
    evaluations_ += static_cast<std::int64_t>(config_.offspring_size);
    observable_.notify(progress_event());
}

GeneticAlgorithm::GeneticAlgorithm(const Problem& problem, EAConfig config,
                                   SolutionComparator selection_comparator)
    : EvolutionaryAlgorithm(problem, std::move(config)),
      selection_comparator_(std::move(selection_comparator)) {}

std::vector<FloatSolution> GeneticAlgorithm::selection(
    const std::vector<FloatSolution>& population) {
    // pool size: offspring count rounded up to a whole number of pairs
    const std::size_t pool = config_.offspring_size + (config_.offspring_size % 2);
    std::vector<FloatSolution> mating_pool;
    mating_pool.reserve(pool);
    for (std::size_t i = 0; i < pool; ++i)
        mating_pool.push_back(binary_tournament(population, selection_comparator_, rng_));
    return mating_pool;
}

std::vector<FloatSolution> GeneticAlgorithm::reproduction(
    const std::vector<FloatSolution>& mating_pool) {
    std::vector<FloatSolution> offspring;
    offspring.reserve(config_.offspring_size);
    for (std::size_t i = 0; i + 1 < mating_pool.size() && offspring.size() < config_.offspring_size;
         i += 2) {
        auto children = sbx_crossover(mating_pool[i], mating_pool[i + 1], problem_,
                                      config_.crossover, rng_);
        for (FloatSolution* child : {&children.first, &children.second}) {
            if (offspring.size() >= config_.offspring_size) break;
            offspring.push_back(polynomial_mutation(*child, problem_, config_.mutation, rng_));
        }
    }
    return offspring;
}

} // namespace moo
