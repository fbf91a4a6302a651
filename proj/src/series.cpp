#include "tsaug/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tsaug {

void Dataset::refresh_metadata() {
    classes.clear();
    fixed_length.reset();
    bool uniform = true;
    std::size_t len = 0;
    for (std::size_t i = 0; i < items.size(); ++i) {
        classes.insert(items[i].label);
        if (i == 0) {
            len = items[i].values.size();
        } else if (items[i].values.size() != len) {
            uniform = false;
        }
    }
    if (!items.empty() && uniform) fixed_length = len;
}

Series sanitize(const Series& x) {
    Series y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        y[i] = std::isfinite(x[i]) ? x[i] : 0.0;
    }
    return y;
}

NormalizationParams fit_normalizer(const Dataset& train) {
    if (train.items.empty()) {
        throw std::invalid_argument("fit_normalizer: train split is empty");
    }
    bool seen = false;
    double lo = 0.0, hi = 0.0;
    for (const auto& item : train.items) {
        for (double v : item.values) {
            if (!std::isfinite(v)) continue;
            if (!seen) {
                lo = hi = v;
                seen = true;
            } else {
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
        }
    }
    if (!seen) return {0.0, 0.0};
    return {lo, hi};
}

Series apply_normalizer(const Series& x, const NormalizationParams& params) {
    Series y(x.size());
    const double span = params.train_max - params.train_min;
    if (span <= 0.0) {
        std::fill(y.begin(), y.end(), 0.0);
        return y;
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        y[i] = 2.0 * (x[i] - params.train_min) / span - 1.0;
    }
    return y;
}

Dataset apply_normalizer(const Dataset& ds, const NormalizationParams& params) {
    Dataset out = ds;
    for (auto& item : out.items) {
        item.values = apply_normalizer(item.values, params);
    }
    return out;
}

Series linear_resample(const Series& x, std::size_t m) {
    if (m == 0) throw std::invalid_argument("linear_resample: m must be >= 1");
    if (x.empty()) throw std::invalid_argument("linear_resample: empty input");
    const std::size_t n = x.size();
    if (m == 1 || n == 1) return Series(m, x.front());

    Series y(m);
    const double step = static_cast<double>(n - 1) / static_cast<double>(m - 1);
    for (std::size_t k = 0; k < m; ++k) {
        double pos = static_cast<double>(k) * step;
        if (pos >= static_cast<double>(n - 1)) {
            y[k] = x[n - 1];
            continue;
        }
        auto idx = static_cast<std::size_t>(pos);
        double frac = pos - static_cast<double>(idx);
        y[k] = frac == 0.0 ? x[idx] : x[idx] + frac * (x[idx + 1] - x[idx]);
    }
    // Exact endpoints regardless of rounding in the position grid.
    y[0] = x[0];
    y[m - 1] = x[n - 1];
    return y;
}

double interp_at(const std::vector<double>& xs, const std::vector<double>& ys,
                 double q) {
    if (xs.empty() || xs.size() != ys.size()) {
        throw std::invalid_argument("interp_at: bad inputs");
    }
    if (q <= xs.front()) return ys.front();
    if (q >= xs.back()) return ys.back();
    auto it = std::upper_bound(xs.begin(), xs.end(), q);
    std::size_t hi = static_cast<std::size_t>(it - xs.begin());
    std::size_t lo = hi - 1;
    double span = xs[hi] - xs[lo];
    if (span <= 0.0) return ys[lo];
    double frac = (q - xs[lo]) / span;
    return ys[lo] + frac * (ys[hi] - ys[lo]);
}

} // namespace tsaug
