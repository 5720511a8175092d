#ifndef MOOLAB_INDICATORS_FRONT_HPP
#define MOOLAB_INDICATORS_FRONT_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "moolab/core/solution.hpp"

namespace moo {

/// Ordered collection of objective vectors of uniform dimensionality.
class Front {
public:
    Front() = default;

    explicit Front(std::vector<std::vector<double>> points) : points_(std::move(points)) {
        for (const auto& p : points_)
            if (p.size() != points_.front().size())
                throw std::invalid_argument("Front: points differ in dimensionality");
    }

    static Front from_solutions(const std::vector<FloatSolution>& solutions) {
        std::vector<std::vector<double>> pts;
        pts.reserve(solutions.size());
        for (const auto& s : solutions) pts.push_back(s.objectives);
        return Front(std::move(pts));
    }

    void add(std::vector<double> point) {
        if (!points_.empty() && point.size() != points_.front().size())
            throw std::invalid_argument("Front::add: dimension mismatch");
        points_.push_back(std::move(point));
    }

    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    std::size_t dimension() const { return points_.empty() ? 0 : points_.front().size(); }

    const std::vector<double>& operator[](std::size_t i) const { return points_[i]; }
    const std::vector<std::vector<double>>& points() const { return points_; }

    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

private:
    std::vector<std::vector<double>> points_;
};

} // namespace moo

#endif
