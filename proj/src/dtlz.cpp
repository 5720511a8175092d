#include "moolab/problems/dtlz.hpp"

#include <cmath>
#include <stdexcept>

namespace moo {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<double> box(int n, double v) {
    if (n < 1) throw std::invalid_argument("DTLZ: variable count must be positive");
    return std::vector<double>(static_cast<std::size_t>(n), v);
}

int resolve_vars(int n_objectives, int n_vars, int k) {
    if (n_objectives < 2) throw std::invalid_argument("DTLZ: need at least 2 objectives");
    return n_vars > 0 ? n_vars : n_objectives + k - 1;
}

} // namespace

DTLZ1::DTLZ1(int n_objectives, int n_vars)
    : Problem("DTLZ1", box(resolve_vars(n_objectives, n_vars, 5), 0.0),
              box(resolve_vars(n_objectives, n_vars, 5), 1.0), n_objectives) {}

void DTLZ1::evaluate(FloatSolution& s) const {
    check_dimension(s);
    const int m = n_objectives();
    const int n = n_vars();
    const int k = n - m + 1;

    double g = 0.0;
    for (int i = n - k; i < n; ++i) {
        const double x = s.variables[static_cast<std::size_t>(i)] - 0.5;
        g += x * x - std::cos(20.0 * kPi * x);
    }
    g = 100.0 * (static_cast<double>(k) + g);

    s.objectives.assign(static_cast<std::size_t>(m), 0.5 * (1.0 + g));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m - i - 1; ++j)
            s.objectives[static_cast<std::size_t>(i)] *= s.variables[static_cast<std::size_t>(j)];
        if (i > 0)
            s.objectives[static_cast<std::size_t>(i)] *=
                1.0 - s.variables[static_cast<std::size_t>(m - i - 1)];
    }
}

DTLZ2::DTLZ2(int n_objectives, int n_vars)
    : Problem("DTLZ2", box(resolve_vars(n_objectives, n_vars, 10), 0.0),
              box(resolve_vars(n_objectives, n_vars, 10), 1.0), n_objectives) {}

void DTLZ2::evaluate(FloatSolution& s) const {
    check_dimension(s);
    const int m = n_objectives();
    const int n = n_vars();
    const int k = n - m + 1;

    double g = 0.0;
    for (int i = n - k; i < n; ++i) {
        const double x = s.variables[static_cast<std::size_t>(i)] - 0.5;
        g += x * x;
    }

    s.objectives.assign(static_cast<std::size_t>(m), 1.0 + g);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m - i - 1; ++j)
            s.objectives[static_cast<std::size_t>(i)] *=
                std::cos(s.variables[static_cast<std::size_t>(j)] * 0.5 * kPi);
        if (i > 0)
            s.objectives[static_cast<std::size_t>(i)] *=
                std::sin(s.variables[static_cast<std::size_t>(m - i - 1)] * 0.5 * kPi);
    }
}

} // namespace moo
