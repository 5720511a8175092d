#include "moolab/problems/zdt.hpp"

#include <cmath>

namespace moo {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<double> uniform_bounds(int n, double value) {
    return std::vector<double>(static_cast<std::size_t>(n), value);
}

double zdt_g_linear(const std::vector<double>& x) {
    double sum = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) sum += x[i];
    return 1.0 + 9.0 * sum / static_cast<double>(x.size() - 1);
}

} // namespace

ZDT1::ZDT1(int n_vars) : Problem("ZDT1", uniform_bounds(n_vars, 0.0), uniform_bounds(n_vars, 1.0), 2) {}

void ZDT1::evaluate(FloatSolution& s) const {
    check_dimension(s);
    const double f1 = s.variables[0];
    const double g = zdt_g_linear(s.variables);
    s.objectives = {f1, g * (1.0 - std::sqrt(f1 / g))};
}

ZDT2::ZDT2(int n_vars) : Problem("ZDT2", uniform_bounds(n_vars, 0.0), uniform_bounds(n_vars, 1.0), 2) {}

void ZDT2::evaluate(FloatSolution& s) const {
    check_dimension(s);
    const double f1 = s.variables[0];
    const double g = zdt_g_linear(s.variables);
    const double r = f1 / g;
    s.objectives = {f1, g * (1.0 - r * r)};
}

ZDT3::ZDT3(int n_vars) : Problem("ZDT3", uniform_bounds(n_vars, 0.0), uniform_bounds(n_vars, 1.0), 2) {}

void ZDT3::evaluate(FloatSolution& s) const {
    check_dimension(s);
    const double f1 = s.variables[0];
    const double g = zdt_g_linear(s.variables);
    const double r = f1 / g;
    s.objectives = {f1, g * (1.0 - std::sqrt(r) - r * std::sin(10.0 * kPi * f1))};
}

ZDT4::ZDT4(int n_vars) : Problem("ZDT4",
                                 [n_vars] {
                                     auto lo = uniform_bounds(n_vars, -5.0);
                                     lo[0] = 0.0;
                                     return lo;
                                 }(),
                                 [n_vars] {
                                     auto hi = uniform_bounds(n_vars, 5.0);
                                     hi[0] = 1.0;
                                     return hi;
                                 }(),
                                 2) {}

void ZDT4::evaluate(FloatSolution& s) const {
    check_dimension(s);
    const double f1 = s.variables[0];
    double g = 1.0 + 10.0 * static_cast<double>(s.variables.size() - 1);
    for (std::size_t i = 1; i < s.variables.size(); ++i) {
        const double x = s.variables[i];
        g += x * x - 10.0 * std::cos(4.0 * kPi * x);
    }
    s.objectives = {f1, g * (1.0 - std::sqrt(f1 / g))};
}

ZDT6::ZDT6(int n_vars) : Problem("ZDT6", uniform_bounds(n_vars, 0.0), uniform_bounds(n_vars, 1.0), 2) {}

void ZDT6::evaluate(FloatSolution& s) const {
    check_dimension(s);
    const double x1 = s.variables[0];
    const double sin6 = std::pow(std::sin(6.0 * kPi * x1), 6.0);
    const double f1 = 1.0 - std::exp(-4.0 * x1) * sin6;
    double sum = 0.0;
    for (std::size_t i = 1; i < s.variables.size(); ++i) sum += s.variables[i];
    const double g = 1.0 + 9.0 * std::pow(sum / static_cast<double>(s.variables.size() - 1), 0.25);
    const double r = f1 / g;
    s.objectives = {f1, g * (1.0 - r * r)};
}

} // namespace moo
