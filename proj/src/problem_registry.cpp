#include "moolab/problems/registry.hpp"

#include <cmath>
#include <functional>

#include "moolab/core/error.hpp"
#include "moolab/problems/dtlz.hpp"
#include "moolab/problems/fda.hpp"
#include "moolab/problems/zdt.hpp"

namespace moo {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    std::vector<double> out;
    out.reserve(n);
    if (n == 1) {
        out.push_back(lo);
        return out;
    }
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1));
    return out;
}

/// Curve front f2 = shape(f1) sampled over [lo, hi].
Front curve_front(double lo, double hi, std::size_t resolution,
                  const std::function<double(double)>& shape) {
    Front front;
    for (double f1 : linspace(lo, hi, resolution)) front.add({f1, shape(f1)});
    return front;
}

/// ZDT3's front is the non-dominated subset of the g = 1 curve; sample densely
/// and filter, then thin to the requested resolution.
Front zdt3_front(std::size_t resolution) {
    const std::size_t dense = std::max<std::size_t>(resolution * 20, 2000);
    std::vector<std::vector<double>> pts;
    for (double x : linspace(0.0, 1.0, dense)) {
        const double f2 = 1.0 - std::sqrt(x) - x * std::sin(10.0 * kPi * x);
        pts.push_back({x, f2});
    }
    // sorted by f1, so one backward pass finds the non-dominated subset
    std::vector<std::vector<double>> keep;
    double best_f2 = std::numeric_limits<double>::infinity();
    for (const auto& p : pts) {
        if (p[1] < best_f2) {
            best_f2 = p[1];
            keep.push_back(p);
        }
    }
    Front front;
    const std::size_t n = keep.size();
    for (std::size_t i = 0; i < resolution; ++i) {
        const std::size_t j = resolution == 1 ? 0 : i * (n - 1) / (resolution - 1);
        front.add(keep[j]);
    }
    return front;
}

/// ZDT6: f1 ranges over [min_x (1 - exp(-4x) sin^6(6 pi x)), 1].
double zdt6_f1_minimum() {
    double best = 1.0;
    for (double x : linspace(0.0, 1.0, 200001)) {
        const double f1 = 1.0 - std::exp(-4.0 * x) * std::pow(std::sin(6.0 * kPi * x), 6.0);
        best = std::min(best, f1);
    }
    return best;
}

/// Integer compositions of `total` into `m` parts, mapped to simplex weights.
void simplex_lattice(int total, int m, std::vector<int>& current,
                     std::vector<std::vector<double>>& out) {
    if (m == 1) {
        int used = 0;
        for (int c : current) used += c;
        std::vector<double> w;
        w.reserve(current.size() + 1);
        for (int c : current) w.push_back(static_cast<double>(c) / total);
        w.push_back(static_cast<double>(total - used) / total); // remainder
        out.push_back(std::move(w));
        return;
    }
    int used = 0;
    for (int c : current) used += c;
    for (int i = 0; i <= total - used; ++i) {
        current.push_back(i);
        simplex_lattice(total, m - 1, current, out);
        current.pop_back();
    }
}

std::vector<std::vector<double>> simplex_points(std::size_t at_least, int m) {
    int h = 1;
    auto count = [m](int divisions) {
        // C(divisions + m - 1, m - 1)
        long long c = 1;
        for (int i = 1; i < m; ++i) c = c * (divisions + i) / i;
        return c;
    };
    while (count(h) < static_cast<long long>(at_least)) ++h;
    std::vector<std::vector<double>> out;
    std::vector<int> current;
    simplex_lattice(h, m, current, out);
    return out;
}

Front dtlz1_front(std::size_t resolution, int m) {
    Front front;
    for (auto& w : simplex_points(resolution, m)) {
        for (double& v : w) v *= 0.5;
        front.add(std::move(w));
    }
    return front;
}

Front dtlz2_front(std::size_t resolution, int m) {
    Front front;
    for (auto& w : simplex_points(resolution, m)) {
        double norm = 0.0;
        for (double v : w) norm += v * v;
        norm = std::sqrt(norm);
        if (norm == 0.0) continue;
        for (double& v : w) v /= norm;
        front.add(std::move(w));
    }
    return front;
}

} // namespace

std::vector<std::string> problem_names() {
    return {"ZDT1", "ZDT2", "ZDT3", "ZDT4", "ZDT6", "DTLZ1", "DTLZ2", "FDA1", "FDA2"};
}

std::unique_ptr<Problem> make_problem(const std::string& name) {
    if (name == "ZDT1") return std::make_unique<ZDT1>();
    if (name == "ZDT2") return std::make_unique<ZDT2>();
    if (name == "ZDT3") return std::make_unique<ZDT3>();
    if (name == "ZDT4") return std::make_unique<ZDT4>();
    if (name == "ZDT6") return std::make_unique<ZDT6>();
    if (name == "DTLZ1") return std::make_unique<DTLZ1>();
    if (name == "DTLZ2") return std::make_unique<DTLZ2>();
    if (name == "FDA1") return std::make_unique<FDA1>();
    if (name == "FDA2") return std::make_unique<FDA2>();
    throw ConfigError("unknown problem: " + name);
}

Front reference_front(const std::string& name, std::size_t resolution) {
    const bool three_objectives = name == "DTLZ1" || name == "DTLZ2";
    if (resolution == 0) resolution = three_objectives ? 10000 : 1000;

    if (name == "ZDT1" || name == "ZDT4")
        return curve_front(0.0, 1.0, resolution, [](double f1) { return 1.0 - std::sqrt(f1); });
    if (name == "ZDT2")
        return curve_front(0.0, 1.0, resolution, [](double f1) { return 1.0 - f1 * f1; });
    if (name == "ZDT3") return zdt3_front(resolution);
    if (name == "ZDT6") {
        static const double f1_min = zdt6_f1_minimum();
        return curve_front(f1_min, 1.0, resolution, [](double f1) { return 1.0 - f1 * f1; });
    }
    if (name == "DTLZ1") return dtlz1_front(resolution, 3);
    if (name == "DTLZ2") return dtlz2_front(resolution, 3);
    if (name == "FDA1" || name == "FDA2")
        throw ConfigError("reference_front: " + name +
                          " is time-dependent; use fda_reference_front");
    throw ConfigError("unknown problem: " + name);
}

Front fda_reference_front(const std::string& name, double time, std::size_t resolution) {
    if (name == "FDA1")
        return curve_front(0.0, 1.0, resolution, [](double f1) { return 1.0 - std::sqrt(f1); });
    if (name == "FDA2") {
        const double ht = 0.75 + 0.7 * std::sin(0.5 * kPi * time);
        return curve_front(0.0, 1.0, resolution,
                           [ht](double f1) { return 1.0 - std::pow(f1, ht); });
    }
    throw ConfigError("unknown dynamic problem: " + name);
}

} // namespace moo
