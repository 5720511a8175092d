#ifndef MOOLAB_OPERATORS_OPERATORS_HPP
#define MOOLAB_OPERATORS_OPERATORS_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "moolab/core/comparison.hpp"
#include "moolab/core/problem.hpp"
#include "moolab/core/rng.hpp"
#include "moolab/core/solution.hpp"

namespace moo {

/// Parameters shared by the continuous variation operators.
struct OperatorConfig {
    double probability = 1.0;        // application probability
    double distribution_index = 20.; // eta for polynomial mutation / SBX
    double f = 0.5;                  // differential weight
    double cr = 0.5;                 // crossover rate

    void validate() const;
};

/// Default operator parameters for the shipped algorithms.
OperatorConfig default_mutation_config(const Problem& problem); // p = 1/n, eta 20
OperatorConfig default_crossover_config();                      // p = 0.9, eta 20
OperatorConfig default_de_config();                             // F = CR = 0.5

/// Polynomial mutation (bounded). Each variable is perturbed independently
/// with cfg.probability; the result is clamped to the problem bounds. The
/// input is left untouched.
FloatSolution polynomial_mutation(const FloatSolution& s, const Problem& problem,
                                  const OperatorConfig& cfg, Rng& rng);

/// Simulated binary crossover. Applied with cfg.probability per pair; inside
/// an application each variable recombines with probability 1/2. Children are
/// clamped to bounds; parents are left untouched.
std::pair<FloatSolution, FloatSolution> sbx_crossover(const FloatSolution& a,
                                                      const FloatSolution& b,
                                                      const Problem& problem,
                                                      const OperatorConfig& cfg, Rng& rng);

/// Binary tournament: draws two distinct members uniformly (one member if the
/// population has size 1) and returns the comparator winner; Indifferent is
/// broken by a fair coin.
const FloatSolution& binary_tournament(const std::vector<FloatSolution>& population,
                                       const SolutionComparator& comparator, Rng& rng);

/// DE trial vector from explicit donors: v_j = r1_j + F*(r2_j - r3_j) taken
/// with probability CR and forced at one random index; other components come
/// from the target. Out-of-bounds components are clamped.
FloatSolution de_binomial_trial(const FloatSolution& target, const FloatSolution& r1,
                                const FloatSolution& r2, const FloatSolution& r3,
                                const Problem& problem, const OperatorConfig& cfg, Rng& rng);

/// DE/rand/1/bin over a population: donors are three distinct members, all
/// different from the target. Requires population size >= 4.
FloatSolution de_rand_1_bin(std::size_t target_index,
                            const std::vector<FloatSolution>& population,
                            const Problem& problem, const OperatorConfig& cfg, Rng& rng);

namespace detail {

/// Spread factor of basic SBX for a uniform draw u; beta(0.5) == 1 exactly.
double sbx_spread_factor(double u, double eta);

/// Polynomial-mutation displacement (fraction of the variable range) for a
/// uniform draw u at relative bound distances d1 = (x-lo)/(hi-lo) and
/// d2 = (hi-x)/(hi-lo); delta(0.5, ., .) == 0 exactly.
double polynomial_delta(double u, double d1, double d2, double eta);

} // namespace detail

} // namespace moo

#endif
