#pragma once

#include "tsaug/rng.hpp"
#include "tsaug/series.hpp"

#include <cstddef>
#include <vector>

namespace tsaug {

/// Natural cubic spline through (x, y) knots with strictly increasing x.
/// Second derivatives vanish at both ends; evaluation outside the knot range
/// extrapolates linearly with the boundary slope.
class NaturalCubicSpline {
public:
    NaturalCubicSpline(std::vector<double> xs, std::vector<double> ys);

    double operator()(double q) const;

    std::size_t knot_count() const { return xs_.size(); }

private:
    std::vector<double> xs_;
    std::vector<double> ys_;
    std::vector<double> m_; // second derivatives at the knots
};

/// Smooth random multiplier/speed curve of length n: a natural cubic spline
/// through knots + 2 evenly spaced anchors (endpoints included) whose values
/// are drawn i.i.d. Normal(1, sigma^2), evaluated on the integer grid.
/// sigma == 0 yields a constant curve of ones.
Series smooth_random_curve(std::size_t n, std::size_t knots, double sigma,
                           RandomStream& stream);

} // namespace tsaug
