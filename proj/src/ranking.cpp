#include "moolab/core/ranking.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace moo {

std::vector<std::vector<std::size_t>> fast_nondominated_sort(
    std::vector<FloatSolution>& population, const SolutionComparator& comparator) {
    const std::size_t n = population.size();
    std::vector<std::vector<std::size_t>> fronts;
    if (n == 0) return fronts;

    std::vector<int> dominated_by(n, 0);                  // how many dominate i
    std::vector<std::vector<std::size_t>> dominates(n);   // who i dominates

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            switch (comparator(population[i], population[j])) {
                case ComparisonResult::FirstWins:
                    dominates[i].push_back(j);
                    ++dominated_by[j];
                    break;
                case ComparisonResult::SecondWins:
                    dominates[j].push_back(i);
                    ++dominated_by[i];
                    break;
                case ComparisonResult::Indifferent:
                    break;
            }
        }
    }

    std::vector<std::size_t> current;
    for (std::size_t i = 0; i < n; ++i)
        if (dominated_by[i] == 0) current.push_back(i);

    while (!current.empty()) {
        const double rank = static_cast<double>(fronts.size());
        for (std::size_t i : current) population[i].attributes[attr::rank] = rank;
        std::vector<std::size_t> next;
        for (std::size_t i : current)
            for (std::size_t j : dominates[i])
                if (--dominated_by[j] == 0) next.push_back(j);
        std::sort(next.begin(), next.end()); // keep population order within fronts
        fronts.push_back(std::move(current));
        current = std::move(next);
    }
    return fronts;
}

void crowding_distance(std::vector<FloatSolution>& population,
                       const std::vector<std::size_t>& front) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    const std::size_t n = front.size();
    if (n == 0) return;
    if (n <= 2) {
        for (std::size_t i : front) population[i].attributes[attr::crowding_distance] = inf;
        return;
    }

    for (std::size_t i : front) population[i].attributes[attr::crowding_distance] = 0.0;

    const std::size_t m = population[front[0]].objectives.size();
    std::vector<std::size_t> order(front);
    for (std::size_t obj = 0; obj < m; ++obj) {
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return population[a].objectives[obj] < population[b].objectives[obj];
        });
        const double lo = population[order.front()].objectives[obj];
        const double hi = population[order.back()].objectives[obj];
        population[order.front()].attributes[attr::crowding_distance] = inf;
        population[order.back()].attributes[attr::crowding_distance] = inf;
        const double range = hi - lo;
        if (range <= 0.0) continue; // degenerate objective contributes nothing
        for (std::size_t k = 1; k + 1 < n; ++k) {
            const double gap = population[order[k + 1]].objectives[obj] -
                               population[order[k - 1]].objectives[obj];
            population[order[k]].attributes[attr::crowding_distance] += gap / range;
        }
    }
}

void crowding_distance(std::vector<FloatSolution>& front) {
    std::vector<std::size_t> all(front.size());
    std::iota(all.begin(), all.end(), 0);
    crowding_distance(front, all);
}

} // namespace moo
