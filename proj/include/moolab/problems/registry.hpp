#ifndef MOOLAB_PROBLEMS_REGISTRY_HPP
#define MOOLAB_PROBLEMS_REGISTRY_HPP

#include <memory>
#include <string>
#include <vector>

#include "moolab/core/problem.hpp"
#include "moolab/indicators/front.hpp"

namespace moo {

/// Canonical problem names accepted by the CLI and experiment plans.
std::vector<std::string> problem_names();

/// Instantiate a benchmark problem by canonical name ("ZDT1" .. "ZDT6",
/// "DTLZ1", "DTLZ2", "FDA1", "FDA2"). Unknown names raise ConfigError.
std::unique_ptr<Problem> make_problem(const std::string& name);

/// Sample `resolution` points from the analytical Pareto front of a static
/// benchmark. Defaults: 1000 points for two objectives, 10000 for three.
Front reference_front(const std::string& name, std::size_t resolution = 0);

/// Fixed-time Pareto front of a dynamic benchmark ("FDA1", "FDA2").
Front fda_reference_front(const std::string& name, double time, std::size_t resolution = 1000);

} // namespace moo

#endif
