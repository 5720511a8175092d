#include "moolab/core/archive.hpp"

#include <algorithm>
#include <utility>

#include "moolab/core/ranking.hpp"

namespace moo {

CrowdingDistanceArchive::CrowdingDistanceArchive(std::size_t capacity,
                                                 SolutionComparator comparator)
    : capacity_(capacity), comparator_(std::move(comparator)) {}

bool CrowdingDistanceArchive::add(FloatSolution candidate) {
    for (auto it = solutions_.begin(); it != solutions_.end();) {
        switch (comparator_(candidate, *it)) {
            case ComparisonResult::SecondWins:
                return false; // dominated by a member
            case ComparisonResult::FirstWins:
                it = solutions_.erase(it);
                break;
            case ComparisonResult::Indifferent:
                if (it->objectives == candidate.objectives) return false; // duplicate point
                ++it;
                break;
        }
    }
    solutions_.push_back(std::move(candidate));
    crowding_distance(solutions_);
    if (solutions_.size() > capacity_) {
        auto most_crowded = std::min_element(
            solutions_.begin(), solutions_.end(), [](const auto& a, const auto& b) {
                return a.attribute(attr::crowding_distance, 0.0) <
                       b.attribute(attr::crowding_distance, 0.0);
            });
        solutions_.erase(most_crowded);
        crowding_distance(solutions_);
    }
    return true;
}

} // namespace moo
