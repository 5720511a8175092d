#ifndef MOOLAB_CORE_ARCHIVE_HPP
#define MOOLAB_CORE_ARCHIVE_HPP

#include <cstddef>
#include <vector>

#include "moolab/core/comparison.hpp"
#include "moolab/core/solution.hpp"

namespace moo {

/// Bounded external archive of mutually non-dominated solutions; when full,
/// the most crowded member (smallest crowding distance) is evicted.
class CrowdingDistanceArchive {
public:
    explicit CrowdingDistanceArchive(std::size_t capacity,
                                     SolutionComparator comparator = dominance_comparator());

    /// Returns false when the candidate is dominated by (or duplicates) a
    /// member; otherwise inserts, drops members it dominates, and prunes to
    /// capacity. Members carry up-to-date crowding distances afterwards.
    bool add(FloatSolution candidate);

    const std::vector<FloatSolution>& solutions() const { return solutions_; }
    std::vector<FloatSolution>& solutions() { return solutions_; }
    std::size_t size() const { return solutions_.size(); }
    std::size_t capacity() const { return capacity_; }

private:
    std::size_t capacity_;
    SolutionComparator comparator_;
    std::vector<FloatSolution> solutions_;
};

} // namespace moo

#endif
