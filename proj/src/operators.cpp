#include "moolab/operators/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace moo {

namespace {

double clamp(double x, double lo, double hi) { return std::min(std::max(x, lo), hi); }

} // namespace

void OperatorConfig::validate() const {
    if (probability < 0.0 || probability > 1.0)
        throw std::invalid_argument("OperatorConfig: probability outside [0,1]");
    if (distribution_index <= 0.0)
        throw std::invalid_argument("OperatorConfig: distribution index must be positive");
    if (f < 0.0) throw std::invalid_argument("OperatorConfig: F must be non-negative");
    if (cr < 0.0 || cr > 1.0) throw std::invalid_argument("OperatorConfig: CR outside [0,1]");
}

OperatorConfig default_mutation_config(const Problem& problem) {
    OperatorConfig cfg;
    cfg.probability = 1.0 / static_cast<double>(problem.n_vars());
    cfg.distribution_index = 20.0;
    return cfg;
}

OperatorConfig default_crossover_config() {
    OperatorConfig cfg;
    cfg.probability = 0.9;
    cfg.distribution_index = 20.0;
    return cfg;
}

OperatorConfig default_de_config() {
    OperatorConfig cfg;
    cfg.f = 0.5;
    cfg.cr = 0.5;
    return cfg;
}

namespace detail {

double sbx_spread_factor(double u, double eta) {
    if (u <= 0.5) return std::pow(2.0 * u, 1.0 / (eta + 1.0));
    return std::pow(1.0 / (2.0 * (1.0 - u)), 1.0 / (eta + 1.0));
}

double polynomial_delta(double u, double d1, double d2, double eta) {
    const double mut_pow = 1.0 / (eta + 1.0);
    if (u <= 0.5) {
        const double xy = 1.0 - d1;
        const double val = 2.0 * u + (1.0 - 2.0 * u) * std::pow(xy, eta + 1.0);
        return std::pow(val, mut_pow) - 1.0;
    }
    const double xy = 1.0 - d2;
    const double val = 2.0 * (1.0 - u) + 2.0 * (u - 0.5) * std::pow(xy, eta + 1.0);
    return 1.0 - std::pow(val, mut_pow);
}

} // namespace detail

FloatSolution polynomial_mutation(const FloatSolution& s, const Problem& problem,
                                  const OperatorConfig& cfg, Rng& rng) {
    cfg.validate();
    problem.check_dimension(s);
    const auto& lo = problem.lower_bounds();
    const auto& hi = problem.upper_bounds();

    FloatSolution out = s;
    for (std::size_t i = 0; i < out.variables.size(); ++i) {
        if (rng.uniform01() > cfg.probability) continue;
        const double range = hi[i] - lo[i];
        const double x = out.variables[i];
        const double d1 = (x - lo[i]) / range;
        const double d2 = (hi[i] - x) / range;
        const double delta = detail::polynomial_delta(rng.uniform01(), d1, d2,
                                                      cfg.distribution_index);
        out.variables[i] = clamp(x + delta * range, lo[i], hi[i]);
    }
    out.objectives.clear();
    out.constraints.clear();
    out.attributes.clear();
    return out;
}

std::pair<FloatSolution, FloatSolution> sbx_crossover(const FloatSolution& a,
                                                      const FloatSolution& b,
                                                      const Problem& problem,
                                                      const OperatorConfig& cfg, Rng& rng) {
    cfg.validate();
    problem.check_dimension(a);
    problem.check_dimension(b);
    const auto& lo = problem.lower_bounds();
    const auto& hi = problem.upper_bounds();

    FloatSolution c1 = a;
    FloatSolution c2 = b;
    if (rng.uniform01() <= cfg.probability) {
        for (std::size_t i = 0; i < c1.variables.size(); ++i) {
            if (rng.uniform01() > 0.5) continue;
            const double x1 = a.variables[i];
            const double x2 = b.variables[i];
            if (std::fabs(x1 - x2) < 1e-14) continue;
            const double y1 = std::min(x1, x2);
            const double y2 = std::max(x1, x2);
            const double beta = detail::sbx_spread_factor(rng.uniform01(),
                                                          cfg.distribution_index);
            double v1 = 0.5 * ((y1 + y2) - beta * (y2 - y1));
            double v2 = 0.5 * ((y1 + y2) + beta * (y2 - y1));
            v1 = clamp(v1, lo[i], hi[i]);
            v2 = clamp(v2, lo[i], hi[i]);
            if (rng.uniform01() <= 0.5) std::swap(v1, v2);
            c1.variables[i] = v1;
            c2.variables[i] = v2;
        }
    }
    for (FloatSolution* c : {&c1, &c2}) {
        c->objectives.clear();
        c->constraints.clear();
        c->attributes.clear();
    }
    return {std::move(c1), std::move(c2)};
}

const FloatSolution& binary_tournament(const std::vector<FloatSolution>& population,
                                       const SolutionComparator& comparator, Rng& rng) {
    if (population.empty())
        throw std::invalid_argument("binary_tournament: empty population");
    if (population.size() == 1) return population.front();

    const std::size_t i = rng.uniform_index(population.size());
    std::size_t j = rng.uniform_index(population.size() - 1);
    if (j >= i) ++j; // without replacement

    switch (comparator(population[i], population[j])) {
        case ComparisonResult::FirstWins: return population[i];
        case ComparisonResult::SecondWins: return population[j];
        case ComparisonResult::Indifferent:
            return rng.uniform01() < 0.5 ? population[i] : population[j];
    }
    return population[i]; // unreachable
}

FloatSolution de_binomial_trial(const FloatSolution& target, const FloatSolution& r1,
                                const FloatSolution& r2, const FloatSolution& r3,
                                const Problem& problem, const OperatorConfig& cfg, Rng& rng) {
    cfg.validate();
    problem.check_dimension(target);
    const auto& lo = problem.lower_bounds();
    const auto& hi = problem.upper_bounds();
    const std::size_t n = target.variables.size();

    FloatSolution trial = target;
    trial.objectives.clear();
    trial.constraints.clear();
    trial.attributes.clear();

    const std::size_t j_rand = rng.uniform_index(n);
    for (std::size_t j = 0; j < n; ++j) {
        const bool take = rng.uniform01() < cfg.cr; // draw unconditionally: fixed stream shape
        if (take || j == j_rand) {
            const double v = r1.variables[j] + cfg.f * (r2.variables[j] - r3.variables[j]);
            trial.variables[j] = clamp(v, lo[j], hi[j]);
        }
    }
    return trial;
}

FloatSolution de_rand_1_bin(std::size_t target_index,
                            const std::vector<FloatSolution>& population,
                            const Problem& problem, const OperatorConfig& cfg, Rng& rng) {
    if (population.size() < 4)
        throw std::invalid_argument("de_rand_1_bin: population must have at least 4 members");
    std::size_t idx[3];
    for (int k = 0; k < 3; ++k) {
        std::size_t r;
        do {
            r = rng.uniform_index(population.size());
        } while (r == target_index || (k > 0 && r == idx[0]) || (k > 1 && r == idx[1]));
        idx[k] = r;
    }
    return de_binomial_trial(population[target_index], population[idx[0]], population[idx[1]],
                             population[idx[2]], problem, cfg, rng);
}

} // namespace moo
