#include "tsaug/transform.hpp"

#include "tsaug/spline.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace tsaug {

namespace {

void check_sigma(double sigma) {
    if (sigma < 0.0) throw std::invalid_argument("sigma must be >= 0");
}

std::vector<std::size_t> shuffled_indices(std::size_t k, RandomStream& stream) {
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t i = k; i > 1; --i) {
        std::size_t j = stream.uniform_index(i);
        std::swap(order[i - 1], order[j]);
    }
    return order;
}

Series concat_blocks(const Series& x, const std::vector<std::size_t>& bounds,
                     const std::vector<std::size_t>& order) {
    Series y;
    y.reserve(x.size());
    for (std::size_t b : order) {
        y.insert(y.end(), x.begin() + static_cast<std::ptrdiff_t>(bounds[b]),
                 x.begin() + static_cast<std::ptrdiff_t>(bounds[b + 1]));
    }
    return y;
}

} // namespace

Series jitter(const Series& x, double sigma, RandomStream& stream) {
    check_sigma(sigma);
    Series y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        y[i] = x[i] + sigma * stream.gauss();
    }
    return y;
}

Series flip_rotation(const Series& x) {
    Series y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = -x[i];
    return y;
}

Series scaling(const Series& x, double sigma, RandomStream& stream) {
    check_sigma(sigma);
    double s = stream.gauss(1.0, sigma);
    Series y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = s * x[i];
    return y;
}

Series magnitude_warp(const Series& x, double sigma, std::size_t knots,
                      RandomStream& stream) {
    check_sigma(sigma);
    if (x.size() < 2) throw std::invalid_argument("magnitude_warp: length must be >= 2");
    Series curve = smooth_random_curve(x.size(), knots, sigma, stream);
    Series y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] * curve[i];
    return y;
}

Series reorder_blocks(const Series& x, std::size_t segments,
                      const std::vector<std::size_t>& order) {
    const std::size_t n = x.size();
    std::vector<std::size_t> bounds(segments + 1);
    std::size_t base = n / segments;
    for (std::size_t b = 0; b < segments; ++b) bounds[b] = b * base;
    bounds[segments] = n; // remainder joins the last block
    return concat_blocks(x, bounds, order);
}

Series permutation(const Series& x, std::size_t segments, RandomStream& stream) {
    const std::size_t n = x.size();
    if (segments < 1 || segments > n) {
        throw std::invalid_argument("permutation: need 1 <= segments <= n");
    }
    if (segments == 1) return x;
    return reorder_blocks(x, segments, shuffled_indices(segments, stream));
}

Series random_permutation(const Series& x, std::size_t segments,
                          RandomStream& stream) {
    const std::size_t n = x.size();
    if (segments < 1 || segments > n) {
        throw std::invalid_argument("random_permutation: need 1 <= segments <= n");
    }
    if (segments == 1) return x;

    // Selection sampling of segments-1 distinct split points from {1..n-1};
    // scanning in order keeps the draw sequence deterministic.
    std::vector<std::size_t> bounds;
    bounds.reserve(segments + 1);
    bounds.push_back(0);
    std::size_t needed = segments - 1;
    for (std::size_t p = 1; p < n && needed > 0; ++p) {
        std::size_t remaining = n - p;
        if (stream.uniform_index(remaining) < needed) {
            bounds.push_back(p);
            --needed;
        }
    }
    bounds.push_back(n);
    return concat_blocks(x, bounds, shuffled_indices(segments, stream));
}

Series time_warp(const Series& x, double sigma, std::size_t knots,
                 RandomStream& stream) {
    check_sigma(sigma);
    const std::size_t n = x.size();
    if (n < 2) throw std::invalid_argument("time_warp: length must be >= 2");

    Series speed = smooth_random_curve(n, knots, sigma, stream);
    for (double& s : speed) s = std::max(s, 1e-3);

    // Warped timestamps: cumulative speed, anchored at 0 and rescaled so the
    // last timestamp is exactly n-1.
    std::vector<double> ts(n);
    double cum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        cum += speed[i];
        ts[i] = cum;
    }
    const double first = ts[0];
    const double scale = static_cast<double>(n - 1) / (ts[n - 1] - first);
    for (std::size_t i = 0; i < n; ++i) ts[i] = (ts[i] - first) * scale;

    Series y(n);
    std::size_t seg = 0;
    for (std::size_t k = 0; k < n; ++k) {
        double q = static_cast<double>(k);
        while (seg + 2 < n && ts[seg + 1] < q) ++seg;
        if (q <= ts[seg]) {
            y[k] = x[seg];
        } else if (q >= ts[seg + 1]) {
            y[k] = x[seg + 1];
        } else {
            double frac = (q - ts[seg]) / (ts[seg + 1] - ts[seg]);
            y[k] = x[seg] + frac * (x[seg + 1] - x[seg]);
        }
    }
    y[0] = x[0];
    y[n - 1] = x[n - 1];
    return y;
}

Series window_slice(const Series& x, double slice_ratio, RandomStream& stream) {
    const std::size_t n = x.size();
    if (slice_ratio <= 0.0 || slice_ratio > 1.0) {
        throw std::invalid_argument("window_slice: need 0 < slice_ratio <= 1");
    }
    auto window = static_cast<std::size_t>(
        std::ceil(slice_ratio * static_cast<double>(n)));
    window = std::min(window, n);
    if (window < 2) throw std::invalid_argument("window_slice: window is degenerate");
    if (window == n) return x;

    std::size_t start = stream.uniform_index(n - window + 1);
    Series cut(x.begin() + static_cast<std::ptrdiff_t>(start),
               x.begin() + static_cast<std::ptrdiff_t>(start + window));
    return linear_resample(cut, n);
}

Series window_warp(const Series& x, double window_ratio,
                   const std::vector<double>& scales, RandomStream& stream) {
    const std::size_t n = x.size();
    if (window_ratio <= 0.0 || window_ratio >= 1.0) {
        throw std::invalid_argument("window_warp: need 0 < window_ratio < 1");
    }
    if (scales.empty()) throw std::invalid_argument("window_warp: no scales");
    auto window = static_cast<std::size_t>(
        std::ceil(window_ratio * static_cast<double>(n)));
    window = std::min(window, n);
    if (window < 2) throw std::invalid_argument("window_warp: window is degenerate");

    std::size_t start = stream.uniform_index(n - window + 1);
    double scale = scales[stream.uniform_index(scales.size())];
    if (scale <= 0.0) throw std::invalid_argument("window_warp: scale must be > 0");

    auto warped_len = static_cast<std::size_t>(std::llround(
        scale * static_cast<double>(window)));
    warped_len = std::max<std::size_t>(warped_len, 2);

    Series cut(x.begin() + static_cast<std::ptrdiff_t>(start),
               x.begin() + static_cast<std::ptrdiff_t>(start + window));
    Series warped = (warped_len == window) ? cut : linear_resample(cut, warped_len);

    Series spliced;
    spliced.reserve(n - window + warped_len);
    spliced.insert(spliced.end(), x.begin(), x.begin() + static_cast<std::ptrdiff_t>(start));
    spliced.insert(spliced.end(), warped.begin(), warped.end());
    spliced.insert(spliced.end(), x.begin() + static_cast<std::ptrdiff_t>(start + window), x.end());

    if (spliced.size() == n) return spliced;
    return linear_resample(spliced, n);
}

} // namespace tsaug
