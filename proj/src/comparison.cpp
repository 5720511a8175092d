#include "moolab/core/comparison.hpp"

#include <limits>
#include <stdexcept>

namespace moo {

ComparisonResult compare_dominance(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw std::invalid_argument("compare_dominance: objective vectors differ in length");
    bool a_better = false;
    bool b_better = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) a_better = true;
        else if (b[i] < a[i]) b_better = true;
    }
    if (a_better && !b_better) return ComparisonResult::FirstWins;
    if (b_better && !a_better) return ComparisonResult::SecondWins;
    return ComparisonResult::Indifferent;
}

ComparisonResult compare_constrained(const FloatSolution& a, const FloatSolution& b) {
    if (!a.evaluated() || !b.evaluated())
        throw std::logic_error("compare_constrained: unevaluated solution");
    const double va = overall_constraint_violation(a);
    const double vb = overall_constraint_violation(b);
    if (va < vb) return ComparisonResult::SecondWins; // more negative = worse
    if (vb < va) return ComparisonResult::FirstWins;
    return compare_dominance(a.objectives, b.objectives);
}

int g_dominance_flag(std::span<const double> y, const ReferencePoint& g) {
    if (y.size() != g.coordinates.size())
        throw std::invalid_argument("g_dominance_flag: dimension mismatch with reference point");
    bool all_leq = true;
    bool all_geq = true;
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (y[i] > g.coordinates[i]) all_leq = false;
        if (y[i] < g.coordinates[i]) all_geq = false;
    }
    return (all_leq || all_geq) ? 1 : 0;
}

ComparisonResult compare_g_dominance(std::span<const double> a, std::span<const double> b,
                                     const ReferencePoint& g) {
    if (a.size() != b.size())
        throw std::invalid_argument("compare_g_dominance: objective vectors differ in length");
    const int fa = g_dominance_flag(a, g);
    const int fb = g_dominance_flag(b, g);
    if (fa > fb) return ComparisonResult::FirstWins;
    if (fb > fa) return ComparisonResult::SecondWins;
    return compare_dominance(a, b);
}

SolutionComparator dominance_comparator() {
    return [](const FloatSolution& a, const FloatSolution& b) {
        return compare_dominance(a.objectives, b.objectives);
    };
}

SolutionComparator constrained_dominance_comparator() {
    return [](const FloatSolution& a, const FloatSolution& b) {
        return compare_constrained(a, b);
    };
}

SolutionComparator g_dominance_comparator(ReferencePoint g) {
    return [g = std::move(g)](const FloatSolution& a, const FloatSolution& b) {
        return compare_g_dominance(a.objectives, b.objectives, g);
    };
}

SolutionComparator rank_crowding_comparator() {
    constexpr double inf = std::numeric_limits<double>::infinity();
    return [](const FloatSolution& a, const FloatSolution& b) {
        const double ra = a.attribute(attr::rank, 0.0);
        const double rb = b.attribute(attr::rank, 0.0);
        if (ra < rb) return ComparisonResult::FirstWins;
        if (rb < ra) return ComparisonResult::SecondWins;
        const double ca = a.attribute(attr::crowding_distance, inf);
        const double cb = b.attribute(attr::crowding_distance, inf);
        if (ca > cb) return ComparisonResult::FirstWins;
        if (cb > ca) return ComparisonResult::SecondWins;
        return ComparisonResult::Indifferent;
    };
}

} // namespace moo
