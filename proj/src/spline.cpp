#include "tsaug/spline.hpp"

#include <algorithm>
#include <stdexcept>

namespace tsaug {

NaturalCubicSpline::NaturalCubicSpline(std::vector<double> xs,
                                       std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
    const std::size_t n = xs_.size();
    if (n < 2 || ys_.size() != n) {
        throw std::invalid_argument("NaturalCubicSpline: need >= 2 knots");
    }
    for (std::size_t i = 1; i < n; ++i) {
        if (!(xs_[i] > xs_[i - 1])) {
            throw std::invalid_argument(
                "NaturalCubicSpline: knots must be strictly increasing");
        }
    }
    m_.assign(n, 0.0);
    if (n == 2) return; // straight segment, second derivatives stay zero

    // Tridiagonal system for interior second derivatives (Thomas algorithm).
    std::vector<double> diag(n, 0.0), rhs(n, 0.0), scratch(n, 0.0);
    diag[0] = 1.0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        double h0 = xs_[i] - xs_[i - 1];
        double h1 = xs_[i + 1] - xs_[i];
        double lower = h0;
        diag[i] = 2.0 * (h0 + h1);
        rhs[i] = 6.0 * ((ys_[i + 1] - ys_[i]) / h1 - (ys_[i] - ys_[i - 1]) / h0);
        // forward elimination against the previous row
        double w = (i == 1) ? 0.0 : lower / diag[i - 1];
        if (i > 1) {
            diag[i] -= w * scratch[i - 1];
            rhs[i] -= w * rhs[i - 1];
        }
        scratch[i] = h1; // upper diagonal entry of this row
    }
    for (std::size_t i = n - 2; i >= 1; --i) {
        double upper = (i + 2 < n) ? scratch[i] * m_[i + 1] : 0.0;
        m_[i] = (rhs[i] - upper) / diag[i];
        if (i == 1) break;
    }
}

double NaturalCubicSpline::operator()(double q) const {
    const std::size_t n = xs_.size();
    if (q <= xs_.front()) {
        double h = xs_[1] - xs_[0];
        double slope = (ys_[1] - ys_[0]) / h - h * m_[1] / 6.0;
        return ys_[0] + slope * (q - xs_[0]);
    }
    if (q >= xs_.back()) {
        double h = xs_[n - 1] - xs_[n - 2];
        double slope = (ys_[n - 1] - ys_[n - 2]) / h + h * m_[n - 2] / 6.0;
        return ys_[n - 1] + slope * (q - xs_[n - 1]);
    }
    auto it = std::upper_bound(xs_.begin(), xs_.end(), q);
    std::size_t hi = static_cast<std::size_t>(it - xs_.begin());
    std::size_t lo = hi - 1;
    double h = xs_[hi] - xs_[lo];
    double a = (xs_[hi] - q) / h;
    double b = (q - xs_[lo]) / h;
    return ys_[lo] + b * (ys_[hi] - ys_[lo]) +
           ((a * a * a - a) * m_[lo] + (b * b * b - b) * m_[hi]) * (h * h) / 6.0;
}

Series smooth_random_curve(std::size_t n, std::size_t knots, double sigma,
                           RandomStream& stream) {
    if (n < 2) throw std::invalid_argument("smooth_random_curve: n must be >= 2");
    if (knots < 1) throw std::invalid_argument("smooth_random_curve: knots must be >= 1");
    if (sigma < 0.0) throw std::invalid_argument("smooth_random_curve: sigma must be >= 0");

    const std::size_t anchors = knots + 2;
    std::vector<double> xs(anchors), ys(anchors);
    for (std::size_t k = 0; k < anchors; ++k) {
        xs[k] = static_cast<double>(k) * static_cast<double>(n - 1) /
                static_cast<double>(anchors - 1);
        ys[k] = stream.gauss(1.0, sigma);
    }
    NaturalCubicSpline spline(std::move(xs), std::move(ys));
    Series curve(n);
    for (std::size_t i = 0; i < n; ++i) {
        curve[i] = spline(static_cast<double>(i));
    }
    return curve;
}

} // namespace tsaug
