#include "tsaug/dtw.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace tsaug {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::size_t band_halfwidth(std::size_t n, std::size_t m, double window_fraction) {
    if (window_fraction < 0.0 || window_fraction > 1.0) {
        throw std::invalid_argument("dtw: window_fraction must be in [0, 1]");
    }
    const auto longest = static_cast<double>(std::max(n, m));
    auto w = static_cast<std::size_t>(std::ceil(window_fraction * longest));
    const std::size_t diff = n > m ? n - m : m - n;
    return std::max(w, diff);
}

inline bool in_band(std::size_t i, std::size_t j, std::size_t w) {
    return (i >= j ? i - j : j - i) <= w;
}

template <typename CostFn>
DtwResult dtw_full(std::size_t n, std::size_t m, std::size_t halfwidth,
                   CostFn cost) {
    if (n == 0 || m == 0) throw std::invalid_argument("dtw: empty series");
    const std::size_t diff = n > m ? n - m : m - n;
    const std::size_t w = std::max(halfwidth, diff);

    std::vector<double> d(n * m, kInf);
    auto at = [&](std::size_t i, std::size_t j) -> double& { return d[i * m + j]; };

    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t lo = i > w ? i - w : 0;
        const std::size_t hi = std::min(m - 1, i + w);
        for (std::size_t j = lo; j <= hi; ++j) {
            double best;
            if (i == 0 && j == 0) {
                best = 0.0;
            } else {
                best = kInf;
                if (i > 0 && j > 0) best = std::min(best, at(i - 1, j - 1));
                if (i > 0) best = std::min(best, at(i - 1, j));
                if (j > 0) best = std::min(best, at(i, j - 1));
            }
            at(i, j) = cost(i, j) + best;
        }
    }

    DtwResult res;
    res.distance = at(n - 1, m - 1);

    // Backtrack; ties prefer diagonal, then vertical, then horizontal.
    std::size_t i = n - 1, j = m - 1;
    res.path.pairs.emplace_back(i, j);
    while (i > 0 || j > 0) {
        double diag = (i > 0 && j > 0 && in_band(i - 1, j - 1, w)) ? at(i - 1, j - 1) : kInf;
        double vert = (i > 0 && in_band(i - 1, j, w)) ? at(i - 1, j) : kInf;
        double horz = (j > 0 && in_band(i, j - 1, w)) ? at(i, j - 1) : kInf;
        if (diag <= vert && diag <= horz) {
            --i; --j;
        } else if (vert <= horz) {
            --i;
        } else {
            --j;
        }
        res.path.pairs.emplace_back(i, j);
    }
    std::reverse(res.path.pairs.begin(), res.path.pairs.end());
    return res;
}

inline double local_cost(double a, double b, LocalCost kind) {
    const double diff = a - b;
    return kind == LocalCost::squared ? diff * diff : std::abs(diff);
}

} // namespace

DtwResult dtw(const Series& x, const Series& y, const DtwParams& params) {
    const std::size_t w = band_halfwidth(x.size(), y.size(), params.window_fraction);
    return dtw_full(x.size(), y.size(), w,
                    [&](std::size_t i, std::size_t j) {
                        return local_cost(x[i], y[j], params.local_cost);
                    });
}

DtwResult dtw_abs_band(const Series& x, const Series& y, std::size_t halfwidth,
                       LocalCost cost) {
    return dtw_full(x.size(), y.size(), halfwidth,
                    [&](std::size_t i, std::size_t j) {
                        return local_cost(x[i], y[j], cost);
                    });
}

template <typename CostFn>
double dtw_distance_impl(const Series& x, const Series& y, std::size_t w,
                         double cutoff, CostFn cost) {
    const std::size_t n = x.size(), m = y.size();
    // Cells outside a row's band are never written; the left-edge guard and
    // the reachability of right-edge cells keep every read either a value
    // from the previous row or the initial +inf.
    std::vector<double> prev(m, kInf), cur(m, kInf);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t lo = i > w ? i - w : 0;
        const std::size_t hi = std::min(m - 1, i + w);
        double row_min = kInf;
        for (std::size_t j = lo; j <= hi; ++j) {
            double best;
            if (i == 0 && j == 0) {
                best = 0.0;
            } else {
                // cur[j-1] below the band's left edge is a stale cell from
                // two rows back, not a legal predecessor
                best = j > lo ? cur[j - 1] : kInf;
                if (i > 0) {
                    best = std::min(best, prev[j]);
                    if (j > 0) best = std::min(best, prev[j - 1]);
                }
            }
            cur[j] = cost(x[i], y[j]) + best;
            row_min = std::min(row_min, cur[j]);
        }
        if (cutoff >= 0.0 && row_min > cutoff) return kInf;
        std::swap(prev, cur);
    }
    return prev[m - 1];
}

double dtw_distance(const Series& x, const Series& y, const DtwParams& params,
                    double cutoff) {
    const std::size_t n = x.size(), m = y.size();
    if (n == 0 || m == 0) throw std::invalid_argument("dtw: empty series");
    const std::size_t w = band_halfwidth(n, m, params.window_fraction);
    if (params.local_cost == LocalCost::squared) {
        return dtw_distance_impl(x, y, w, cutoff, [](double a, double b) {
            const double d = a - b;
            return d * d;
        });
    }
    return dtw_distance_impl(x, y, w, cutoff, [](double a, double b) {
        return std::abs(a - b);
    });
}

double dtw_bruteforce(const Series& x, const Series& y, const DtwParams& params) {
    const std::size_t n = x.size(), m = y.size();
    if (n == 0 || m == 0) throw std::invalid_argument("dtw_bruteforce: empty series");
    if (n > 8 || m > 8) {
        throw std::invalid_argument("dtw_bruteforce: inputs limited to 8 samples");
    }
    const std::size_t w = band_halfwidth(n, m, params.window_fraction);

    double best = kInf;
    // Depth-first enumeration over the three step types.
    auto walk = [&](auto&& self, std::size_t i, std::size_t j, double acc) -> void {
        if (!in_band(i, j, w)) return;
        acc += local_cost(x[i], y[j], params.local_cost);
        if (acc >= best) return;
        if (i == n - 1 && j == m - 1) {
            best = acc;
            return;
        }
        if (i + 1 < n && j + 1 < m) self(self, i + 1, j + 1, acc);
        if (i + 1 < n) self(self, i + 1, j, acc);
        if (j + 1 < m) self(self, i, j + 1, acc);
    };
    walk(walk, 0, 0, 0.0);
    return best;
}

std::vector<std::vector<double>> shape_descriptors(const Series& x,
                                                   std::size_t desc_window) {
    if (desc_window % 2 == 0 || desc_window == 0) {
        throw std::invalid_argument("shape_descriptors: window must be odd");
    }
    const std::size_t n = x.size();
    const std::ptrdiff_t half = static_cast<std::ptrdiff_t>(desc_window / 2);
    std::vector<std::vector<double>> out(n, std::vector<double>(desc_window));
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
        for (std::ptrdiff_t k = -half; k <= half; ++k) {
            std::ptrdiff_t p = std::clamp<std::ptrdiff_t>(
                i + k, 0, static_cast<std::ptrdiff_t>(n) - 1);
            out[static_cast<std::size_t>(i)][static_cast<std::size_t>(k + half)] =
                x[static_cast<std::size_t>(p)];
        }
    }
    return out;
}

DtwResult shape_dtw(const Series& x, const Series& y, std::size_t desc_window,
                    const DtwParams& params) {
    const auto dx = shape_descriptors(x, desc_window);
    const auto dy = shape_descriptors(y, desc_window);
    const std::size_t w = band_halfwidth(x.size(), y.size(), params.window_fraction);
    return dtw_full(x.size(), y.size(), w,
                    [&](std::size_t i, std::size_t j) {
                        const auto& a = dx[i];
                        const auto& b = dy[j];
                        double acc = 0.0;
                        for (std::size_t k = 0; k < a.size(); ++k) {
                            const double diff = a[k] - b[k];
                            acc += diff * diff;
                        }
                        return acc;
                    });
}

std::size_t default_descriptor_window(std::size_t n) {
    auto w = static_cast<std::size_t>(
        std::llround(0.1 * static_cast<double>(n)));
    w = std::max<std::size_t>(w, 3);
    if (w % 2 == 0) ++w;
    return w;
}

} // namespace tsaug
