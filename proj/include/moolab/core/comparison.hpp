#ifndef MOOLAB_CORE_COMPARISON_HPP
#define MOOLAB_CORE_COMPARISON_HPP

#include <functional>
#include <span>
#include <vector>

#include "moolab/core/solution.hpp"

namespace moo {

enum class ComparisonResult { FirstWins, SecondWins, Indifferent };

inline ComparisonResult flip(ComparisonResult r) {
    switch (r) {
        case ComparisonResult::FirstWins: return ComparisonResult::SecondWins;
        case ComparisonResult::SecondWins: return ComparisonResult::FirstWins;
        default: return ComparisonResult::Indifferent;
    }
}

/// Objective-space reference point (e.g. for g-dominance or hypervolume).
struct ReferencePoint {
    std::vector<double> coordinates;
};

/// Pareto dominance, all objectives minimized. FirstWins iff a <= b
/// componentwise with at least one strict inequality; equal vectors and
/// trade-off pairs are Indifferent.
ComparisonResult compare_dominance(std::span<const double> a, std::span<const double> b);

/// Feasibility-first comparison: lower overall constraint violation wins;
/// ties (incl. both feasible) defer to Pareto dominance on the objectives.
ComparisonResult compare_constrained(const FloatSolution& a, const FloatSolution& b);

/// g-dominance with reference point g: flag(y) = 1 if y <= g or y >= g
/// componentwise, else 0. A higher flag wins; equal flags defer to Pareto
/// dominance.
ComparisonResult compare_g_dominance(std::span<const double> a, std::span<const double> b,
                                     const ReferencePoint& g);

/// 0/1 region flag used by g-dominance (exposed for analysis).
int g_dominance_flag(std::span<const double> y, const ReferencePoint& g);

/// Comparison function over whole solutions; the algorithms take one of these.
using SolutionComparator = std::function<ComparisonResult(const FloatSolution&, const FloatSolution&)>;

SolutionComparator dominance_comparator();
SolutionComparator constrained_dominance_comparator();
SolutionComparator g_dominance_comparator(ReferencePoint g);

/// Lower rank attribute wins; equal ranks broken by larger crowding distance.
/// Missing attributes read as rank 0 / crowding +inf.
SolutionComparator rank_crowding_comparator();

} // namespace moo

#endif
