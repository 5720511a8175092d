#ifndef MOOLAB_CORE_SOLUTION_HPP
#define MOOLAB_CORE_SOLUTION_HPP

#include <map>
#include <string>
#include <vector>

namespace moo {

/// Attribute keys written by ranking / density estimation.
namespace attr {
inline constexpr const char* rank = "rank";
inline constexpr const char* crowding_distance = "crowding_distance";
} // namespace attr

/// A candidate solution: encoding-specific variables, an objective vector
/// (all objectives minimized), optional constraint values and a free-form
/// attribute map. Plain value type; safe to copy/move across threads.
///
/// Constraint convention: a negative constraint value is a violation of that
/// magnitude; the overall violation is the sum of the negative entries.
template <typename T>
struct BasicSolution {
    std::vector<T> variables;
    std::vector<double> objectives;
    std::vector<double> constraints;
    std::map<std::string, double> attributes;

    BasicSolution() = default;
    BasicSolution(std::size_t n_vars, std::size_t n_objectives, std::size_t n_constraints = 0)
        : variables(n_vars), objectives(n_objectives), constraints(n_constraints) {}

    bool evaluated() const { return !objectives.empty(); }

    double attribute(const std::string& key, double fallback) const {
        auto it = attributes.find(key);
        return it == attributes.end() ? fallback : it->second;
    }
};

using FloatSolution = BasicSolution<double>;
using BinarySolution = BasicSolution<bool>;
using IntegerSolution = BasicSolution<int>;
using PermutationSolution = BasicSolution<int>;

/// Sum of negative constraint entries (<= 0; 0 means feasible).
inline double overall_constraint_violation(const FloatSolution& s) {
    double total = 0.0;
    for (double c : s.constraints)
        if (c < 0.0) total += c;
    return total;
}

} // namespace moo

#endif
