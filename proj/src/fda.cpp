#include "moolab/problems/fda.hpp"

#include <cmath>
#include <stdexcept>

namespace moo {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<double> fda_bounds(int n, double first, double rest) {
    if (n < 2) throw std::invalid_argument("FDA: need at least 2 variables");
    std::vector<double> b(static_cast<std::size_t>(n), rest);
    b[0] = first;
    return b;
}

} // namespace

void FDA::update(const ObservableEvent& event) {
    auto counter = event.get<std::int64_t>(key::counter);
    if (!counter) throw std::runtime_error("FDA::update: payload lacks COUNTER");
    update_time(*counter);
}

void FDA::update_time(std::int64_t counter) {
    if (counter < 0) throw std::invalid_argument("FDA::update_time: negative counter");
    time_.store((1.0 / n_t_) * std::floor(static_cast<double>(counter) / tau_t_));
    changed_.store(true);
}

FDA1::FDA1(int n_vars)
    : FDA("FDA1", fda_bounds(n_vars, 0.0, -1.0), fda_bounds(n_vars, 1.0, 1.0)) {}

void FDA1::evaluate(FloatSolution& s) const {
    check_dimension(s);
    const double t = time();
    const double gt = std::sin(0.5 * kPi * t);
    const double f1 = s.variables[0];
    double g = 1.0;
    for (std::size_t i = 1; i < s.variables.size(); ++i) {
        const double d = s.variables[i] - gt;
        g += d * d;
    }
    s.objectives = {f1, g * (1.0 - std::sqrt(f1 / g))};
}

FDA2::FDA2(int n_vars)
    : FDA("FDA2", fda_bounds(n_vars, 0.0, -1.0), fda_bounds(n_vars, 1.0, 1.0)) {}

double FDA2::h_exponent() const { return 0.75 + 0.7 * std::sin(0.5 * kPi * time()); }

void FDA2::evaluate(FloatSolution& s) const {
    check_dimension(s);
    const double ht = h_exponent();
    const std::size_t n = s.variables.size();
    const std::size_t split = n / 2; // x[1, split) = XII, x[split, n) = XIII

    const double f1 = s.variables[0];
    double g = 1.0;
    for (std::size_t i = 1; i < split; ++i) g += s.variables[i] * s.variables[i];

    double exponent = ht;
    for (std::size_t i = split; i < n; ++i) {
        const double d = s.variables[i] - 0.25 * ht;
        exponent += d * d;
    }
    s.objectives = {f1, g * (1.0 - std::pow(f1 / g, exponent))};
}

} // namespace moo
