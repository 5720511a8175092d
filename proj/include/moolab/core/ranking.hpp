#ifndef MOOLAB_CORE_RANKING_HPP
#define MOOLAB_CORE_RANKING_HPP

#include <cstddef>
#include <vector>

#include "moolab/core/comparison.hpp"
#include "moolab/core/solution.hpp"

namespace moo {

/// Fast non-dominated sorting. Returns the fronts as index lists into the
/// population (front 0 first) and writes each solution's front index to the
/// "rank" attribute. Fronts preserve population order, so equal solutions
/// land in the same front in a stable order. An empty population yields an
/// empty result.
std::vector<std::vector<std::size_t>> fast_nondominated_sort(
    std::vector<FloatSolution>& population,
    const SolutionComparator& comparator = dominance_comparator());

/// Crowding distance of a whole front: per objective, boundary solutions get
/// +inf and interior ones accumulate the normalized gap between neighbors.
/// Fronts of size <= 2 are all +inf; a zero objective range contributes 0.
/// Writes the "crowding_distance" attribute.
void crowding_distance(std::vector<FloatSolution>& front);

/// Same, restricted to the subset of `population` named by `front` indices.
void crowding_distance(std::vector<FloatSolution>& population,
                       const std::vector<std::size_t>& front);

} // namespace moo

#endif
