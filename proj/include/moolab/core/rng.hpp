#ifndef MOOLAB_CORE_RNG_HPP
#define MOOLAB_CORE_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace moo {

/// Seeded random stream used by every stochastic component.
///
/// All draws are derived from the (standard-specified) mt19937_64 sequence
/// with fixed transformations, so a given seed produces the same stream on
/// every platform. Run reproducibility rests on this class: never draw from
/// a std:: distribution elsewhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

    /// Uniform double in [0, 1).
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform index in [0, n). n must be positive.
    std::size_t uniform_index(std::size_t n) {
        if (n == 0) throw std::invalid_argument("Rng::uniform_index: n must be positive");
        using u128 = unsigned __int128;
        return static_cast<std::size_t>((static_cast<u128>(engine_()) * n) >> 64);
    }

    /// Standard normal via Box-Muller (no caching, two uniforms per draw).
    double normal() {
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
    }

    /// Gamma(shape, 1) via Marsaglia-Tsang; shape == 0 yields the point mass at 0.
    double gamma(double shape) {
        if (shape < 0.0) throw std::invalid_argument("Rng::gamma: negative shape");
        if (shape == 0.0) return 0.0;
        if (shape < 1.0) {
            const double boost = std::pow(uniform01(), 1.0 / shape);
            return gamma(shape + 1.0) * boost;
        }
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x = normal();
            double v = 1.0 + c * x;
            if (v <= 0.0) continue;
            v = v * v * v;
            const double u = uniform01();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
            if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
        }
    }

    /// Dirichlet draw; zero concentrations give exact zero weight.
    std::vector<double> dirichlet(const std::vector<double>& alpha) {
        std::vector<double> out(alpha.size());
        double sum = 0.0;
        for (std::size_t i = 0; i < alpha.size(); ++i) {
            out[i] = gamma(alpha[i]);
            sum += out[i];
        }
        if (sum <= 0.0) throw std::domain_error("Rng::dirichlet: all concentrations zero");
        for (double& v : out) v /= sum;
        return out;
    }

    /// In-place Fisher-Yates shuffle (own implementation: std::shuffle is not
    /// guaranteed to be reproducible across standard libraries).
    template <typename T>
    void shuffle(std::vector<T>& values) {
        for (std::size_t i = values.size(); i > 1; --i) {
            const std::size_t j = uniform_index(i);
            using std::swap;
            swap(values[i - 1], values[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

} // namespace moo

#endif
