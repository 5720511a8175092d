#ifndef MOOLAB_ALGORITHMS_NSGAII_HPP
#define MOOLAB_ALGORITHMS_NSGAII_HPP

#include <vector>

#include "moolab/algorithms/genetic.hpp"

namespace moo {

/// Ranking-and-crowding environmental selection: join the population and the
/// offspring, sort into non-dominated fronts under `dominance`, fill whole
/// fronts in order and truncate the splitting front by descending crowding
/// distance. Survivors carry fresh rank/crowding attributes.
std::vector<FloatSolution> ranking_and_crowding_selection(std::vector<FloatSolution> population,
                                                          std::vector<FloatSolution> offspring,
                                                          std::size_t target_size,
                                                          const SolutionComparator& dominance);

/// Non-dominated subset of `solutions` under `comparator` (front 0).
std::vector<FloatSolution> nondominated_subset(std::vector<FloatSolution> solutions,
                                               const SolutionComparator& comparator);

/// NSGA-II. Generational with offspring_size == population_size; the
/// steady-state variant is the same algorithm with offspring_size == 1.
/// Preference articulation comes from injecting a g-dominance comparator into
/// EAConfig::dominance.
class NSGAII : public GeneticAlgorithm {
public:
    NSGAII(const Problem& problem, EAConfig config);

    /// Non-dominated subset of the final population under the configured
    /// dominance comparator.
    std::vector<FloatSolution> result() const override;

protected:
    std::vector<FloatSolution> replacement(std::vector<FloatSolution> population,
                                           std::vector<FloatSolution> offspring) override;
    void init_progress() override;
};

} // namespace moo

#endif
