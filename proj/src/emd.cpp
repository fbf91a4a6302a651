#include "tsaug/emd.hpp"

#include "tsaug/spline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tsaug {

namespace {

// Envelope through the given extrema, mirror-extending up to two extrema
// past each end to tame boundary swings. find_extrema only reports interior
// points, so the mirrored knots land strictly outside [0, n-1].
Series envelope(const Series& x, const std::vector<std::size_t>& extrema) {
    const auto last = static_cast<double>(x.size() - 1);
    const std::size_t mirrored = std::min<std::size_t>(2, extrema.size());

    std::vector<double> xs, ys;
    xs.reserve(extrema.size() + 2 * mirrored);
    ys.reserve(extrema.size() + 2 * mirrored);

    for (std::size_t k = mirrored; k-- > 0;) {
        xs.push_back(-static_cast<double>(extrema[k]));
        ys.push_back(x[extrema[k]]);
    }
    for (std::size_t idx : extrema) {
        xs.push_back(static_cast<double>(idx));
        ys.push_back(x[idx]);
    }
    for (std::size_t k = 0; k < mirrored; ++k) {
        const std::size_t idx = extrema[extrema.size() - 1 - k];
        xs.push_back(2.0 * last - static_cast<double>(idx));
        ys.push_back(x[idx]);
    }

    NaturalCubicSpline spline(std::move(xs), std::move(ys));
    Series env(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        env[i] = spline(static_cast<double>(i));
    }
    return env;
}

bool imf_shape_ok(const Series& h) {
    const auto [maxima, minima] = find_extrema(h);
    const auto extrema = maxima.size() + minima.size();
    const auto crossings = zero_crossings(h);
    const auto diff = extrema > crossings ? extrema - crossings : crossings - extrema;
    return diff <= 1;
}

} // namespace

std::pair<std::vector<std::size_t>, std::vector<std::size_t>>
find_extrema(const Series& x) {
    std::vector<std::size_t> maxima, minima;
    const std::size_t n = x.size();
    if (n < 3) return {maxima, minima};

    std::size_t i = 1;
    while (i + 1 < n) {
        if (x[i] == x[i - 1]) {
            ++i;
            continue;
        }
        if (x[i] == x[i + 1]) {
            // plateau: find its end, classify by the flanks, report midpoint
            std::size_t j = i;
            while (j + 1 < n && x[j + 1] == x[i]) ++j;
            if (j + 1 < n) {
                const std::size_t mid = (i + j) / 2;
                if (x[i] > x[i - 1] && x[i] > x[j + 1]) maxima.push_back(mid);
                if (x[i] < x[i - 1] && x[i] < x[j + 1]) minima.push_back(mid);
            }
            i = j + 1;
            continue;
        }
        if (x[i] > x[i - 1] && x[i] > x[i + 1]) maxima.push_back(i);
        if (x[i] < x[i - 1] && x[i] < x[i + 1]) minima.push_back(i);
        ++i;
    }
    return {maxima, minima};
}

std::size_t zero_crossings(const Series& x) {
    std::size_t count = 0;
    int prev = 0;
    for (double v : x) {
        const int sign = v > 0.0 ? 1 : (v < 0.0 ? -1 : 0);
        if (sign != 0) {
            if (prev != 0 && sign != prev) ++count;
            prev = sign;
        }
    }
    return count;
}

ImfSet emd(const Series& x, const EmdParams& params) {
    if (x.size() < 4) {
        return {.imfs = {}, .residual = x};
    }

    ImfSet out;
    Series residual = x;

    while (out.imfs.size() < params.max_imfs) {
        auto [maxima, minima] = find_extrema(residual);
        if (maxima.size() < 2 || minima.size() < 2) break;

        Series h = residual;
        for (std::size_t sift = 0; sift < params.max_sifts; ++sift) {
            auto [hmax, hmin] = find_extrema(h);
            if (hmax.size() < 2 || hmin.size() < 2) break;

            const Series upper = envelope(h, hmax);
            const Series lower = envelope(h, hmin);

            Series next(h.size());
            double change = 0.0, scale = 0.0;
            for (std::size_t i = 0; i < h.size(); ++i) {
                const double mean = 0.5 * (upper[i] + lower[i]);
                next[i] = h[i] - mean;
                change += mean * mean; // (h - next)^2
                scale += h[i] * h[i];
            }
            h = std::move(next);
            const double sd = scale > 0.0 ? change / scale : 0.0;
            if (sd < params.sd_threshold && imf_shape_ok(h)) break;
        }

        for (std::size_t i = 0; i < residual.size(); ++i) residual[i] -= h[i];
        out.imfs.push_back(std::move(h));
    }

    out.residual = std::move(residual);
    return out;
}

Series emd_augment(const Series& x, std::size_t k, const EmdParams& params,
                   bool* no_imfs) {
    const ImfSet decomposition = emd(x, params);
    if (no_imfs) *no_imfs = decomposition.imfs.empty();
    if (decomposition.imfs.empty()) return x;

    const std::size_t take = std::min(k, decomposition.imfs.size());
    Series out(x.size(), 0.0);
    for (std::size_t m = 0; m < take; ++m) {
        for (std::size_t i = 0; i < x.size(); ++i) {
            out[i] += decomposition.imfs[m][i];
        }
    }
    return out;
}

} // namespace tsaug
