#ifndef MOOLAB_PROBLEMS_DTLZ_HPP
#define MOOLAB_PROBLEMS_DTLZ_HPP

#include "moolab/core/problem.hpp"

namespace moo {

// Deb-Thiele-Laumanns-Zitzler scalable-objective benchmarks. n_vars defaults
// to m + k - 1 with k = 5 (DTLZ1) and k = 10 (DTLZ2).

/// Linear front: sum of objectives equals 0.5 when the distance function g
/// vanishes (tail variables at 0.5).
class DTLZ1 final : public Problem {
public:
    explicit DTLZ1(int n_objectives = 3, int n_vars = -1);
    void evaluate(FloatSolution& s) const override;
};

/// Spherical front: sum of squared objectives equals 1 when g vanishes.
class DTLZ2 final : public Problem {
public:
    explicit DTLZ2(int n_objectives = 3, int n_vars = -1);
    void evaluate(FloatSolution& s) const override;
};

} // namespace moo

#endif
