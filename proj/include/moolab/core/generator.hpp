#ifndef MOOLAB_CORE_GENERATOR_HPP
#define MOOLAB_CORE_GENERATOR_HPP

#include <functional>

#include "moolab/core/problem.hpp"
#include "moolab/core/rng.hpp"
#include "moolab/core/solution.hpp"

namespace moo {

/// Source of fresh (unevaluated) solutions for population initialization and
/// restart strategies.
using Generator = std::function<FloatSolution(const Problem&, Rng&)>;

/// Uniform draw inside the problem's box constraints.
inline Generator random_generator() {
    return [](const Problem& problem, Rng& rng) {
        FloatSolution s;
        const auto& lo = problem.lower_bounds();
        const auto& hi = problem.upper_bounds();
        s.variables.resize(lo.size());
        for (std::size_t i = 0; i < lo.size(); ++i) s.variables[i] = rng.uniform(lo[i], hi[i]);
        return s;
    };
}

} // namespace moo

#endif
