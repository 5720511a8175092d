#include "moolab/algorithms/nsgaii.hpp"

#include <algorithm>

#include "moolab/core/ranking.hpp"

namespace moo {

std::vector<FloatSolution> ranking_and_crowding_selection(std::vector<FloatSolution> population,
                                                          std::vector<FloatSolution> offspring,
                                                          std::size_t target_size,
                                                          const SolutionComparator& dominance) {
    std::vector<FloatSolution> join = std::move(population);
    join.reserve(join.size() + offspring.size());
    for (auto& s : offspring) join.push_back(std::move(s));

    auto fronts = fast_nondominated_sort(join, dominance);

    std::vector<FloatSolution> next;
    next.reserve(target_size);
    for (const auto& front : fronts) {
        crowding_distance(join, front);
        if (next.size() + front.size() <= target_size) {
            for (std::size_t i : front) next.push_back(std::move(join[i]));
            if (next.size() == target_size) break;
        } else {
            std::vector<std::size_t> split(front);
            std::stable_sort(split.begin(), split.end(), [&](std::size_t a, std::size_t b) {
                return join[a].attribute(attr::crowding_distance, 0.0) >
                       join[b].attribute(attr::crowding_distance, 0.0);
            });
            for (std::size_t i : split) {
                if (next.size() == target_size) break;
                next.push_back(std::move(join[i]));
            }
            break;
        }
    }
    return next;
}

std::vector<FloatSolution> nondominated_subset(std::vector<FloatSolution> solutions,
                                               const SolutionComparator& comparator) {
    if (solutions.empty()) return solutions;
    auto fronts = fast_nondominated_sort(solutions, comparator);
    std::vector<FloatSolution> out;
    out.reserve(fronts.front().size());
    for (std::size_t i : fronts.front()) out.push_back(std::move(solutions[i]));
    return out;
}

NSGAII::NSGAII(const Problem& problem, EAConfig config)
    : GeneticAlgorithm(problem, std::move(config), rank_crowding_comparator()) {}

void NSGAII::init_progress() {
    // Rank/crowding attributes must exist before the first tournament.
    auto fronts = fast_nondominated_sort(solutions_, config_.dominance);
    for (const auto& front : fronts) crowding_distance(solutions_, front);
    EvolutionaryAlgorithm::init_progress();
}

std::vector<FloatSolution> NSGAII::replacement(std::vector<FloatSolution> population,
                                               std::vector<FloatSolution> offspring) {
    return ranking_and_crowding_selection(std::move(population), std::move(offspring),
                                          config_.population_size, config_.dominance);
}

std::vector<FloatSolution> NSGAII::result() const {
    return nondominated_subset(solutions_, config_.dominance);
}

} // namespace moo
